#ifndef PDAPRUNE_TESTS_SUPPORT_H
#define PDAPRUNE_TESTS_SUPPORT_H

#include <pdaprune/augment.h>
#include <pdaprune/forward.h>
#include <pdaprune/nfa.h>
#include <pdaprune/pda.h>
#include <pdaprune/text_format.h>

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <vector>

namespace testing {

using namespace pdaprune;

inline std::string fixture_path(const std::string& name) { return std::string(PDAPRUNE_FIXTURES) + "/" + name; }

inline Pda load_pda(const std::string& name) { return parse_pda(read_file(fixture_path(name))); }

inline Pda example1() { return load_pda("example1.pda"); }

inline PdaTransition trans(std::string id, std::string from, std::initializer_list<std::string_view> pop,
                           std::initializer_list<std::string_view> push, std::string to)
{
    return {TransitionId(std::move(id)), StateId(std::move(from)), std::nullopt, make_stack(pop),
            make_stack(push), StateId(std::move(to))};
}

/// Example 1's P0 as drawn, without the drain state: q3 pops b0 to reach qf.
inline AugmentedPda example1_restricted()
{
    AugmentedPda aug;
    aug.p0 = example1();
    aug.bottom_marker = Symbol("b0");
    aug.final_state = StateId("qf");
    aug.drain_state = StateId("qe");
    aug.p0.stack_alphabet.push_back(aug.bottom_marker);
    aug.p0.states.push_back(aug.final_state);
    aug.p0.finals = {aug.final_state};
    aug.p0.transitions.push_back(trans("t8", "q3", {"b0"}, {}, "qf"));
    aug.synthetic_ids.insert(TransitionId("t8"));
    for (const auto& t : aug.p0.transitions)
        if (!aug.is_synthetic(t.id))
            aug.origin_of.emplace(t.id, t.id);
    return aug;
}

inline NodeId node(const NfaSummary& nfa, const std::string& name)
{
    for (NodeId n = 0; n < nfa.size(); ++n)
        if (nfa.state(n).name() == name)
            return n;
    throw std::runtime_error("no node " + name);
}

inline std::set<std::string> node_names(const NfaSummary& nfa, const std::vector<NodeId>& nodes)
{
    std::set<std::string> out;
    for (auto n : nodes)
        out.insert(nfa.state(n).name());
    return out;
}

inline std::set<std::string> gamma_edge_names(const NfaSummary& nfa)
{
    std::set<std::string> out;
    for (const auto& e : nfa.gamma_edges())
        out.insert(nfa.state(e.from).name() + " " + nfa.label(e.label).str() + " " + nfa.state(e.to).name());
    return out;
}

inline std::set<std::string> eps_edge_names(const NfaSummary& nfa)
{
    std::set<std::string> out;
    for (const auto& e : nfa.eps_edges())
        out.insert(nfa.state(e.from).name() + ">" + nfa.state(e.to).name());
    return out;
}

template <typename T>
std::set<std::string> id_set(const std::vector<T>& ids)
{
    std::set<std::string> out;
    for (const auto& id : ids)
        out.insert(id.str());
    return out;
}

/// Whether some walk from `from` to `to` spells `word`, ε-edges anywhere.
/// Plain search over (node, position).
inline bool walks(const NfaSummary& nfa, NodeId from, const LabelString& word, NodeId to)
{
    std::set<std::pair<NodeId, std::size_t>> seen;
    std::deque<std::pair<NodeId, std::size_t>> work{{from, 0}};
    seen.insert({from, 0});
    while (!work.empty()) {
        auto [n, i] = work.front();
        work.pop_front();
        if (n == to && i == word.size())
            return true;
        for (auto m : nfa.eps_out(n))
            if (seen.insert({m, i}).second)
                work.push_back({m, i});
        if (i < word.size())
            for (const auto& e : nfa.gamma_out(n))
                if (e.label == word[i] && seen.insert({e.to, i + 1}).second)
                    work.push_back({e.to, i + 1});
    }
    return false;
}

/// S_{q,σ} by definition: non-final n with n --a--> y and a walk y ==σ'^R==> q.
inline std::vector<NodeId> brute_force_s(const NfaSummary& nfa, NodeId q, const LabelString& pop)
{
    if (pop.empty())
        return {q};
    const LabelString rest(pop.rbegin() + 1, pop.rend());
    std::vector<NodeId> out;
    for (const auto& e : nfa.gamma_edges())
        if (e.label == pop.back() && !nfa.is_final(e.from) && walks(nfa, e.to, rest, q))
            out.push_back(e.from);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// ε-edges on some walk x --a--> z ==σ'^R==> q, by checking each edge:
/// (u,v) qualifies iff some split of σ'^R gives x..u and v..q walks.
inline std::set<EpsEdge> brute_force_scan(const NfaSummary& nfa, NodeId x, const LabelString& pop, NodeId q)
{
    std::set<EpsEdge> out;
    const LabelString rest(pop.rbegin() + 1, pop.rend());
    for (const auto& g : nfa.gamma_out(x)) {
        if (g.label != pop.back())
            continue;
        for (const auto& e : nfa.eps_edges())
            for (std::size_t i = 0; i <= rest.size(); ++i) {
                const LabelString head(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(i));
                const LabelString tail(rest.begin() + static_cast<std::ptrdiff_t>(i), rest.end());
                if (walks(nfa, g.to, head, e.from) && walks(nfa, e.to, tail, q))
                    out.insert(e);
            }
    }
    return out;
}

/// Configurations (r, σ) with |σ| <= h such that σ^R leads from m0 to Inherited(r).
inline std::set<Configuration> nfa_configurations(const NfaSummary& nfa, std::size_t h)
{
    std::set<std::pair<NodeId, LabelString>> seen;
    std::deque<std::pair<NodeId, LabelString>> work{{NfaSummary::m0(), {}}};
    seen.insert(work.front());
    std::set<Configuration> out;
    while (!work.empty()) {
        auto [n, w] = work.front();
        work.pop_front();
        if (nfa.is_final(n)) {
            auto s = nfa.symbols_of(w);
            std::reverse(s.begin(), s.end());
            out.insert({nfa.state(n).pda_state, s});
        }
        for (auto m : nfa.eps_out(n))
            if (seen.insert({m, w}).second)
                work.push_back({m, w});
        if (w.size() < h)
            for (const auto& e : nfa.gamma_out(n)) {
                auto w2 = w;
                w2.push_back(e.label);
                if (seen.insert({e.to, w2}).second)
                    work.push_back({e.to, std::move(w2)});
            }
    }
    return out;
}

} // namespace testing

#endif
