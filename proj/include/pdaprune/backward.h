#ifndef PDAPRUNE_BACKWARD_H
#define PDAPRUNE_BACKWARD_H

#include <pdaprune/forward.h>

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

namespace pdaprune {

struct BackwardOptions {
    /// Share path-scan work across scans toward the same (q, σ): a node already
    /// explored at some depth is not explored again.
    bool memoize = true;
    /// Pick worklist edges in a seeded random order instead of FIFO.
    std::optional<std::uint64_t> shuffle_seed;
};

struct BackwardResult {
    /// Transitions of P1 that cannot lead to the final state, in P1 order.
    std::vector<TransitionId> u2;
    /// True when m0 -ε-> q_f is absent, i.e. the accepted language is empty.
    bool empty_language = false;
    /// ε-edges in the order they were processed.
    std::vector<EpsEdge> processed;
    /// Snapshot of |u2| after each processed edge.
    std::vector<std::size_t> u2_sizes;
};

/// P0 without the transitions listed in `u1`.
[[nodiscard]] Pda cull(const Pda& p0, const std::vector<TransitionId>& u1);

/// Propagates usefulness backwards over the ε-edges of `fwd.nfa`, starting
/// from m0 -ε-> q_f. `p1` must be P0 with the unreachable transitions removed.
[[nodiscard]] BackwardResult run_backward(const ForwardResult& fwd, const AugmentedPda& aug, const Pda& p1,
                                          BackwardOptions options = {});

/// Set of ε-edges keyed by their endpoints.
class EpsEdgeSet {
public:
    /// Returns false when the edge was already present.
    bool insert(EpsEdge e) { return keys_.insert(key(e)).second; }
    [[nodiscard]] bool contains(EpsEdge e) const { return keys_.count(key(e)) != 0; }
    [[nodiscard]] std::size_t size() const noexcept { return keys_.size(); }

private:
    static std::uint64_t key(EpsEdge e) { return (std::uint64_t{e.from} << 32) | e.to; }
    std::unordered_set<std::uint64_t> keys_;
};

struct GammaPath {
    /// Labels along the path, in path order (the pushed string reversed).
    LabelString labels;
    NodeId end;
};

/// Follows the unique outgoing Γ-edge from `y` until a final node. Throws
/// IntegrityError when a non-final node lacks exactly one such edge.
[[nodiscard]] GammaPath unique_gamma_path(const NfaSummary& nfa, NodeId y);

/// The ε-edges lying on any path x --a--> z ==σ'^R==> q where σ = σ'a
/// is non-empty and top-first. Edges already in `memo` are skipped; the
/// returned edges are added to it.
std::vector<EpsEdge> scan_eps_on_paths(const NfaSummary& nfa, NodeId x, std::span<const LabelId> pop, NodeId q,
                                       const BackwardEpsClosure& closure, EpsEdgeSet& memo);

} // namespace pdaprune

#endif
