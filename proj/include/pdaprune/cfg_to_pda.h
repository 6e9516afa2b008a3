#ifndef PDAPRUNE_CFG_TO_PDA_H
#define PDAPRUNE_CFG_TO_PDA_H

#include <pdaprune/grammar.h>
#include <pdaprune/pda.h>

namespace pdaprune {

/// Top-down (predictive) pda for a grammar. States qs, ql, qa with qa final;
/// transitions, in order:
///
///     start:     qs --ε, -/S,Z--> ql        Z a fresh end marker
///     p<i>:      ql --ε, A/α--> ql          for production i: A -> α
///     m_<a>:     ql --a, a/---> ql          for each terminal a
///     end:       ql --ε, Z/---> qa
///
/// Throws Error when the grammar has no start symbol or a symbol name is
/// not a valid pda name.
[[nodiscard]] Pda cfg_to_pda(const Grammar& g);

/// Id of the transition simulating production `index`.
[[nodiscard]] TransitionId production_transition_id(std::size_t index);

} // namespace pdaprune

#endif
