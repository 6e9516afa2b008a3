#ifndef PDAPRUNE_SRC_RULES_H
#define PDAPRUNE_SRC_RULES_H

#include <pdaprune/nfa.h>
#include <pdaprune/pda.h>

#include <map>
#include <tuple>
#include <vector>

namespace pdaprune::detail {

/// Transitions sharing (source, pop, push, target) collapse into one rule;
/// they differ at most in input symbol, which the analysis ignores.
struct Rule {
    StateId source;
    LabelString pop;
    LabelString push;
    StateId target;
    /// Indices into the automaton's transition list, ascending.
    std::vector<std::size_t> members;
};

inline std::vector<Rule> build_rules(const Pda& pda, const NfaSummary& nfa)
{
    std::vector<Rule> rules;
    std::map<std::tuple<StateId, LabelString, LabelString, StateId>, std::size_t> index;
    for (std::size_t i = 0; i < pda.transitions.size(); ++i) {
        const auto& t = pda.transitions[i];
        auto pop = *nfa.labels_of(t.pop);
        auto push = *nfa.labels_of(t.push);
        auto [it, inserted] = index.try_emplace({t.source, pop, push, t.target}, rules.size());
        if (inserted)
            rules.push_back({t.source, std::move(pop), std::move(push), t.target, {}});
        rules[it->second].members.push_back(i);
    }
    return rules;
}

} // namespace pdaprune::detail

#endif
