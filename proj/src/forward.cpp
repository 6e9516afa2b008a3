#include <pdaprune/forward.h>

#include "rules.h"

#include <algorithm>

namespace pdaprune {

bool ForwardResult::unreachable(const TransitionId& id) const
{
    return std::find(u1.begin(), u1.end(), id) != u1.end();
}

const std::vector<NodeId>* ForwardResult::s_set(const StateId& q, const StackString& pop) const
{
    auto it = ssets.find({q, pop});
    return it == ssets.end() ? nullptr : &it->second;
}

std::vector<NodeId> compute_s(const NfaSummary& nfa, NodeId q, std::span<const LabelId> pop,
                              const BackwardEpsClosure& closure)
{
    if (pop.empty())
        return {q};
    // Walk backwards from q: peel the popped symbols top-first, closing under
    // ε between hops. The bottom-most symbol needs a real Γ-edge whose source
    // is reported without further ε-expansion.
    NodeSet frontier = closure.of(nfa, q);
    for (std::size_t i = 0; i + 1 < pop.size(); ++i) {
        NodeSet prev = closure.empty_set();
        for (auto y = frontier.find_first(); y != NodeSet::npos; y = frontier.find_next(y))
            for (const auto& e : nfa.gamma_in(static_cast<NodeId>(y)))
                if (e.label == pop[i])
                    prev.set(e.from);
        if (prev.none())
            return {};
        frontier = closure.expand(nfa, prev);
    }
    NodeSet result = closure.empty_set();
    for (auto y = frontier.find_first(); y != NodeSet::npos; y = frontier.find_next(y))
        for (const auto& e : nfa.gamma_in(static_cast<NodeId>(y)))
            if (e.label == pop.back())
                result.set(e.from);
    std::vector<NodeId> out;
    for (auto n = result.find_first(); n != NodeSet::npos; n = result.find_next(n))
        out.push_back(static_cast<NodeId>(n));
    return out;
}

std::vector<NodeId> compute_s(const NfaSummary& nfa, const StateId& q, const StackString& pop,
                              const BackwardEpsClosure& closure)
{
    auto node = nfa.inherited(q);
    auto labels = nfa.labels_of(pop);
    if (!node || !labels)
        return {};
    return compute_s(nfa, *node, *labels, closure);
}

NodeId establish_path(NfaSummary& nfa, std::span<const LabelId> labels, NodeId z)
{
    while (!labels.empty()) {
        auto shared = nfa.nonfinal_source(labels.back(), z);
        if (!shared)
            break;
        z = *shared;
        labels = labels.first(labels.size() - 1);
    }
    if (labels.empty())
        return z;
    std::vector<NodeId> chain;
    chain.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
        chain.push_back(nfa.add_intermediate());
    for (std::size_t i = 0; i < labels.size(); ++i)
        nfa.add_gamma(chain[i], labels[i], i + 1 < labels.size() ? chain[i + 1] : z);
    return chain.front();
}

ForwardResult run_forward(const AugmentedPda& aug, ForwardOptions options)
{
    const Pda& p0 = aug.p0;
    ForwardResult res{
        NfaSummary(p0.stack_alphabet), {}, {}, {},
        BackwardEpsClosure(options.maintain_closure ? BackwardEpsClosure::Mode::Incremental
                                                    : BackwardEpsClosure::Mode::OnDemand),
        0};
    NfaSummary& nfa = res.nfa;
    auto& closure = res.closure;

    const auto rules = detail::build_rules(p0, nfa);
    std::vector<char> reached(rules.size(), 0);
    std::vector<NodeId> head(rules.size(), 0);

    const NodeId q0 = nfa.ensure_inherited(p0.initial);
    nfa.add_gamma(NfaSummary::m0(), *nfa.label_of(aug.bottom_marker), q0);
    closure.sync(nfa);

    bool changed = true;
    while (changed) {
        ++res.passes;
        const auto before = std::make_tuple(nfa.size(), nfa.gamma_edges().size(), nfa.eps_edges().size());
        for (std::size_t r = 0; r < rules.size(); ++r) {
            const auto& rule = rules[r];
            auto q = nfa.inherited(rule.source);
            if (!q)
                continue;
            auto s = compute_s(nfa, *q, rule.pop, closure);
            res.ssets[{rule.source, nfa.symbols_of(rule.pop)}] = s;
            if (s.empty())
                continue;
            if (!reached[r]) {
                reached[r] = 1;
                const NodeId target = nfa.ensure_inherited(rule.target);
                const LabelString push_reversed(rule.push.rbegin(), rule.push.rend());
                head[r] = establish_path(nfa, push_reversed, target);
                closure.sync(nfa);
            }
            for (auto x : s)
                if (nfa.add_eps(x, head[r]))
                    closure.on_eps_edge(nfa, x, head[r]);
        }
        changed = before != std::make_tuple(nfa.size(), nfa.gamma_edges().size(), nfa.eps_edges().size());
    }

    for (std::size_t r = 0; r < rules.size(); ++r)
        for (auto idx : rules[r].members) {
            const auto& id = p0.transitions[idx].id;
            if (reached[r])
                res.path_head_of.emplace(id, head[r]);
        }
    for (const auto& t : p0.transitions)
        if (!res.path_head_of.count(t.id))
            res.u1.push_back(t.id);
    // Pairs whose source never entered the automaton have an empty S.
    for (const auto& rule : rules)
        res.ssets.try_emplace({rule.source, nfa.symbols_of(rule.pop)});
    return res;
}

} // namespace pdaprune
