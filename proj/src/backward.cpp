#include <pdaprune/backward.h>
#include <pdaprune/error.h>

#include "rules.h"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <unordered_set>

namespace pdaprune {

Pda cull(const Pda& p0, const std::vector<TransitionId>& u1)
{
    const std::unordered_set<TransitionId> drop(u1.begin(), u1.end());
    Pda p1 = p0;
    std::erase_if(p1.transitions, [&](const PdaTransition& t) { return drop.count(t.id) != 0; });
    return p1;
}

GammaPath unique_gamma_path(const NfaSummary& nfa, NodeId y)
{
    GammaPath path{{}, y};
    std::size_t guard = 0;
    while (!nfa.is_final(path.end)) {
        const auto& out = nfa.gamma_out(path.end);
        if (out.size() != 1)
            throw IntegrityError("node " + nfa.state(path.end).name() + " has " + std::to_string(out.size()) +
                                 " outgoing stack-symbol edges");
        path.labels.push_back(out.front().label);
        path.end = out.front().to;
        if (++guard > nfa.size())
            throw IntegrityError("stack-symbol cycle through " + nfa.state(y).name());
    }
    return path;
}

namespace {

/// Per (q, σ) state shared by all scans toward q popping σ.
struct PathScanCache {
    /// behind[j]: nodes that reach q reading pop[j-1..0] backwards, with ε anywhere.
    std::vector<NodeSet> behind;
    /// visited[j]: nodes whose ε-edges were already scanned at layer j.
    std::vector<NodeSet> visited;
};

PathScanCache make_cache(const NfaSummary& nfa, std::span<const LabelId> pop, NodeId q,
                         const BackwardEpsClosure& closure)
{
    const std::size_t k = pop.size();
    PathScanCache cache;
    cache.behind.resize(k);
    cache.visited.assign(k, closure.empty_set());
    cache.behind[0] = closure.of(nfa, q);
    for (std::size_t j = 1; j < k; ++j) {
        NodeSet prev = closure.empty_set();
        const auto& frontier = cache.behind[j - 1];
        for (auto y = frontier.find_first(); y != NodeSet::npos; y = frontier.find_next(y))
            for (const auto& e : nfa.gamma_in(static_cast<NodeId>(y)))
                if (e.label == pop[j - 1])
                    prev.set(e.from);
        cache.behind[j] = closure.expand(nfa, prev);
    }
    return cache;
}

void scan(const NfaSummary& nfa, NodeId x, std::span<const LabelId> pop, const BackwardEpsClosure& closure,
          PathScanCache& cache, EpsEdgeSet& memo, std::vector<EpsEdge>& found)
{
    const std::size_t k = pop.size();
    // Forward layers from the Γ-edge x --pop[k-1]--> z; layer j still has to
    // read pop[j-1], ..., pop[0].
    NodeSet layer = closure.empty_set();
    for (const auto& e : nfa.gamma_out(x))
        if (e.label == pop[k - 1])
            layer.set(e.to);
    for (std::size_t j = k; j-- > 0;) {
        const auto& behind = cache.behind[j];
        auto& visited = cache.visited[j];
        layer &= behind;
        layer -= visited;
        visited |= layer;
        std::vector<NodeId> work;
        for (auto u = layer.find_first(); u != NodeSet::npos; u = layer.find_next(u))
            work.push_back(static_cast<NodeId>(u));
        while (!work.empty()) {
            auto u = work.back();
            work.pop_back();
            for (auto v : nfa.eps_out(u)) {
                if (!behind.test(v))
                    continue;
                EpsEdge edge{u, v};
                if (memo.insert(edge))
                    found.push_back(edge);
                if (!visited.test(v)) {
                    visited.set(v);
                    layer.set(v);
                    work.push_back(v);
                }
            }
        }
        if (j == 0 || layer.none())
            break;
        NodeSet next = closure.empty_set();
        for (auto u = layer.find_first(); u != NodeSet::npos; u = layer.find_next(u))
            for (const auto& e : nfa.gamma_out(static_cast<NodeId>(u)))
                if (e.label == pop[j - 1])
                    next.set(e.to);
        layer = std::move(next);
    }
}

} // namespace

std::vector<EpsEdge> scan_eps_on_paths(const NfaSummary& nfa, NodeId x, std::span<const LabelId> pop, NodeId q,
                                       const BackwardEpsClosure& closure, EpsEdgeSet& memo)
{
    std::vector<EpsEdge> found;
    if (pop.empty())
        return found;
    auto cache = make_cache(nfa, pop, q, closure);
    scan(nfa, x, pop, closure, cache, memo, found);
    std::sort(found.begin(), found.end());
    return found;
}

BackwardResult run_backward(const ForwardResult& fwd, const AugmentedPda& aug, const Pda& p1,
                            BackwardOptions options)
{
    const NfaSummary& nfa = fwd.nfa;
    BackwardResult res;

    const auto qf = nfa.inherited(aug.final_state);
    if (!qf || !nfa.has_eps(NfaSummary::m0(), *qf)) {
        res.empty_language = true;
        res.u2 = p1.transition_ids();
        return res;
    }

    struct Candidate {
        NodeId source;
        LabelString pop;
        const std::vector<NodeId>* s;
        std::size_t rule;
    };
    const auto rules = detail::build_rules(p1, nfa);
    std::map<std::pair<NodeId, LabelString>, std::vector<Candidate>> by_push_path;
    for (std::size_t r = 0; r < rules.size(); ++r) {
        const auto& rule = rules[r];
        const auto* s = fwd.s_set(rule.source, nfa.symbols_of(rule.pop));
        auto target = nfa.inherited(rule.target);
        auto source = nfa.inherited(rule.source);
        if (!s || !target || !source)
            throw IntegrityError("transition " + p1.transitions[rule.members.front()].id.str() +
                                 " is not reachable in the summary");
        const LabelString path_labels(rule.push.rbegin(), rule.push.rend());
        by_push_path[{*target, path_labels}].push_back({*source, rule.pop, s, r});
    }

    std::vector<char> useful(rules.size(), 0);
    std::size_t remaining = p1.transitions.size();
    EpsEdgeSet enqueued;
    std::map<std::pair<NodeId, LabelString>, PathScanCache> caches;
    std::vector<EpsEdge> pending;
    std::mt19937_64 rng(options.shuffle_seed.value_or(0));

    const EpsEdge start{NfaSummary::m0(), *qf};
    enqueued.insert(start);
    pending.push_back(start);
    std::size_t next = 0;

    while (next < pending.size()) {
        if (options.shuffle_seed) {
            std::uniform_int_distribution<std::size_t> pick(next, pending.size() - 1);
            std::swap(pending[next], pending[pick(rng)]);
        }
        const EpsEdge edge = pending[next++];
        res.processed.push_back(edge);

        const auto path = unique_gamma_path(nfa, edge.to);
        auto it = by_push_path.find({path.end, path.labels});
        if (it != by_push_path.end()) {
            for (const auto& c : it->second) {
                if (!std::binary_search(c.s->begin(), c.s->end(), edge.from))
                    continue;
                if (!useful[c.rule]) {
                    useful[c.rule] = 1;
                    remaining -= rules[c.rule].members.size();
                }
                if (c.pop.empty())
                    continue;
                std::vector<EpsEdge> found;
                if (options.memoize) {
                    auto [slot, fresh] = caches.try_emplace({c.source, c.pop});
                    if (fresh)
                        slot->second = make_cache(nfa, c.pop, c.source, fwd.closure);
                    scan(nfa, edge.from, c.pop, fwd.closure, slot->second, enqueued, found);
                } else {
                    found = scan_eps_on_paths(nfa, edge.from, c.pop, c.source, fwd.closure, enqueued);
                }
                pending.insert(pending.end(), found.begin(), found.end());
            }
        }
        res.u2_sizes.push_back(remaining);
    }

    std::vector<char> member_useful(p1.transitions.size(), 0);
    for (std::size_t r = 0; r < rules.size(); ++r)
        if (useful[r])
            for (auto i : rules[r].members)
                member_useful[i] = 1;
    for (std::size_t i = 0; i < p1.transitions.size(); ++i)
        if (!member_useful[i])
            res.u2.push_back(p1.transitions[i].id);
    return res;
}

} // namespace pdaprune
