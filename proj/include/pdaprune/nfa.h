#ifndef PDAPRUNE_NFA_H
#define PDAPRUNE_NFA_H

#include <pdaprune/names.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace pdaprune {

using NodeId = std::uint32_t;
using LabelId = std::uint32_t;
using LabelString = std::vector<LabelId>;

/// A state of the stack-summary automaton. Inherited states mirror pda
/// states and are the only final ones.
struct NfaState {
    enum class Kind : std::uint8_t { M0, Inherited, Intermediate };

    Kind kind = Kind::M0;
    StateId pda_state;     // Inherited only
    std::size_t index = 0; // Intermediate only, 1-based creation order

    static NfaState m0() { return {}; }
    static NfaState inherited(StateId q) { return {Kind::Inherited, std::move(q), 0}; }
    static NfaState intermediate(std::size_t i) { return {Kind::Intermediate, {}, i}; }

    [[nodiscard]] bool is_final() const noexcept { return kind == Kind::Inherited; }
    /// `m0`, the pda state name, or `n<k>`.
    [[nodiscard]] std::string name() const;

    friend auto operator<=>(const NfaState&, const NfaState&) = default;
    friend bool operator==(const NfaState&, const NfaState&) = default;
};

struct GammaEdge {
    NodeId from;
    LabelId label;
    NodeId to;
    friend auto operator<=>(const GammaEdge&, const GammaEdge&) = default;
};

struct EpsEdge {
    NodeId from;
    NodeId to;
    friend auto operator<=>(const EpsEdge&, const EpsEdge&) = default;
};

/// Finite automaton over the stack alphabet whose language at an inherited
/// state q is the set of reversed stacks reachable at q. Nodes are numbered
/// in creation order; node 0 is m0. Edges are never removed.
class NfaSummary {
public:
    explicit NfaSummary(std::vector<Symbol> labels);

    [[nodiscard]] static constexpr NodeId m0() noexcept { return 0; }
    [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
    [[nodiscard]] const NfaState& state(NodeId n) const { return nodes_.at(n); }
    [[nodiscard]] bool is_final(NodeId n) const { return nodes_[n].is_final(); }
    [[nodiscard]] std::optional<NodeId> find(const NfaState& s) const;
    [[nodiscard]] std::optional<NodeId> inherited(const StateId& q) const;

    NodeId ensure_inherited(const StateId& q);
    NodeId add_intermediate();
    void add_gamma(NodeId from, LabelId label, NodeId to);
    /// Returns false when the edge already exists.
    bool add_eps(NodeId from, NodeId to);

    [[nodiscard]] bool has_eps(NodeId from, NodeId to) const;
    [[nodiscard]] bool has_eps(const NfaState& from, const NfaState& to) const;

    [[nodiscard]] const std::vector<Symbol>& labels() const noexcept { return labels_; }
    [[nodiscard]] const Symbol& label(LabelId l) const { return labels_.at(l); }
    [[nodiscard]] std::optional<LabelId> label_of(const Symbol& a) const;
    /// Translates a stack string; nullopt when a symbol is not a label.
    [[nodiscard]] std::optional<LabelString> labels_of(const StackString& s) const;
    [[nodiscard]] StackString symbols_of(std::span<const LabelId> labels) const;

    [[nodiscard]] const std::vector<GammaEdge>& gamma_edges() const noexcept { return gamma_; }
    [[nodiscard]] const std::vector<EpsEdge>& eps_edges() const noexcept { return eps_; }

    /// Outgoing Γ-edges of `n`; at most one once construction is complete.
    [[nodiscard]] const std::vector<GammaEdge>& gamma_out(NodeId n) const { return gamma_out_[n]; }
    [[nodiscard]] const std::vector<GammaEdge>& gamma_in(NodeId n) const { return gamma_in_[n]; }
    [[nodiscard]] const std::vector<NodeId>& eps_out(NodeId n) const { return eps_out_[n]; }
    [[nodiscard]] const std::vector<NodeId>& eps_in(NodeId n) const { return eps_in_[n]; }

    /// The non-final source of a Γ-edge `label` into `to`, if any.
    [[nodiscard]] std::optional<NodeId> nonfinal_source(LabelId label, NodeId to) const;

private:
    NodeId add_node(NfaState s);

    std::vector<Symbol> labels_;
    std::unordered_map<Symbol, LabelId> label_index_;
    std::vector<NfaState> nodes_;
    std::unordered_map<StateId, NodeId> inherited_;
    std::size_t intermediates_ = 0;
    std::vector<GammaEdge> gamma_;
    std::vector<EpsEdge> eps_;
    std::unordered_set<std::uint64_t> eps_index_;
    std::vector<std::vector<GammaEdge>> gamma_out_;
    std::vector<std::vector<GammaEdge>> gamma_in_;
    std::vector<std::vector<NodeId>> eps_out_;
    std::vector<std::vector<NodeId>> eps_in_;
};

/// Checks the shape every completed summary must have: all nodes reachable
/// from m0; final nodes have no outgoing Γ-edge and non-final nodes exactly
/// one; at most one non-final source per (label, target); at most one
/// ε-edge per ordered pair. Returns one message per violation.
[[nodiscard]] std::vector<std::string> check_structure(const NfaSummary& nfa);

} // namespace pdaprune

#endif
