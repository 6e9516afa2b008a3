#ifndef PDAPRUNE_DOT_H
#define PDAPRUNE_DOT_H

#include <pdaprune/nfa.h>
#include <pdaprune/pda.h>

#include <string>

namespace pdaprune {

/// Graphviz renderings: one node statement per state, one edge statement per
/// transition. Final states are double circles, the initial state is bold,
/// ε is written `eps`.
[[nodiscard]] std::string export_dot(const Pda& pda);
[[nodiscard]] std::string export_dot(const NfaSummary& nfa);

} // namespace pdaprune

#endif
