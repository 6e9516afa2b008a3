#ifndef PDAPRUNE_FORWARD_H
#define PDAPRUNE_FORWARD_H

#include <pdaprune/augment.h>
#include <pdaprune/closure.h>
#include <pdaprune/nfa.h>

#include <map>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pdaprune {

/// S_{q,σ} per (source, pop) pair of the augmented automaton: the non-final
/// nodes n with n --a--> y ==σ'^R==> q where σ = σ'a. For σ = ε it is {q}.
/// Node lists are sorted ascending.
using SSets = std::map<std::pair<StateId, StackString>, std::vector<NodeId>>;

struct ForwardOptions {
    /// Keep B(s) incrementally; when false every closure query searches ε-edges.
    bool maintain_closure = true;
};

struct ForwardResult {
    NfaSummary nfa;
    /// Unreachable transitions of P0, in P0 order.
    std::vector<TransitionId> u1;
    /// Values from the final (unchanging) pass.
    SSets ssets;
    /// First node of the established push path of every reachable transition.
    std::unordered_map<TransitionId, NodeId> path_head_of;
    BackwardEpsClosure closure;
    std::size_t passes = 0;

    [[nodiscard]] bool unreachable(const TransitionId& id) const;
    /// Stored S_{q,σ}; nullptr when (q, σ) is not the source/pop of any transition.
    [[nodiscard]] const std::vector<NodeId>* s_set(const StateId& q, const StackString& pop) const;
};

/// Builds the summary automaton by repeating full passes over the transitions
/// of `aug.p0` until a pass leaves it unchanged.
[[nodiscard]] ForwardResult run_forward(const AugmentedPda& aug, ForwardOptions options = {});

/// S_{q,σ} evaluated on the current automaton. `pop` is top-first.
[[nodiscard]] std::vector<NodeId> compute_s(const NfaSummary& nfa, NodeId q, std::span<const LabelId> pop,
                                            const BackwardEpsClosure& closure);
/// Name-based form; empty when q has no node or σ uses an unknown symbol.
[[nodiscard]] std::vector<NodeId> compute_s(const NfaSummary& nfa, const StateId& q, const StackString& pop,
                                            const BackwardEpsClosure& closure);

/// Ensures a path z' --a1--> ... --ak--> z of Γ-edges exists, sharing the
/// longest existing suffix, and returns its first node. New intermediates are
/// only created when no non-final node carries the required edge.
NodeId establish_path(NfaSummary& nfa, std::span<const LabelId> labels, NodeId z);

} // namespace pdaprune

#endif
