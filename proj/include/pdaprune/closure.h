#ifndef PDAPRUNE_CLOSURE_H
#define PDAPRUNE_CLOSURE_H

#include <pdaprune/nfa.h>

#include <boost/dynamic_bitset.hpp>

#include <vector>

namespace pdaprune {

using NodeSet = boost::dynamic_bitset<>;

/// B(s): the nodes that reach s through ε-edges only, s included.
///
/// In incremental mode the sets are stored and grown on every new ε-edge.
/// In on-demand mode nothing is stored and each query walks ε-edges
/// backwards; both modes answer identically.
class BackwardEpsClosure {
public:
    enum class Mode { Incremental, OnDemand };

    explicit BackwardEpsClosure(Mode mode = Mode::Incremental) : mode_(mode) {}

    [[nodiscard]] Mode mode() const noexcept { return mode_; }

    /// Registers nodes created since the last call; each new node starts with B(n) = {n}.
    void sync(const NfaSummary& nfa);

    /// Must be called once right after the ε-edge `from -> to` is inserted.
    void on_eps_edge(const NfaSummary& nfa, NodeId from, NodeId to);

    /// Width of every set handed out; at least the node count seen by `sync`.
    [[nodiscard]] std::size_t width() const noexcept { return width_; }
    [[nodiscard]] NodeSet empty_set() const { return NodeSet(width_); }

    /// B(s).
    [[nodiscard]] NodeSet of(const NfaSummary& nfa, NodeId s) const;

    /// The union of B(s) over all s in `set`.
    [[nodiscard]] NodeSet expand(const NfaSummary& nfa, const NodeSet& set) const;

private:
    void grow(std::size_t nodes);

    Mode mode_;
    std::size_t nodes_ = 0;
    std::size_t width_ = 0;
    std::vector<NodeSet> rows_;
};

/// B(s) for every node, recomputed from scratch by graph search.
[[nodiscard]] std::vector<NodeSet> backward_closure_from_scratch(const NfaSummary& nfa);

} // namespace pdaprune

#endif
