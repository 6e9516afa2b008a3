#ifndef PDAPRUNE_AUGMENT_H
#define PDAPRUNE_AUGMENT_H

#include <pdaprune/pda.h>

#include <unordered_map>
#include <unordered_set>

namespace pdaprune {

/// The input automaton extended so that acceptance means "reach the unique
/// final state with an empty stack". The initial stack is `[bottom_marker]`.
///
/// Synthetic transitions, in order:
///   q --ε/ε--> drain          for each original final q
///   drain --a/ε--> drain      for each original stack symbol a
///   drain --bottom/ε--> final
struct AugmentedPda {
    Pda p0;
    Symbol bottom_marker;
    StateId drain_state;
    StateId final_state;
    std::unordered_set<TransitionId> synthetic_ids;
    /// P0 id -> original id; identity on non-synthetic ids, absent for synthetic ones.
    std::unordered_map<TransitionId, TransitionId> origin_of;

    [[nodiscard]] bool is_synthetic(const TransitionId& id) const { return synthetic_ids.count(id) != 0; }
};

/// Prefix carried by every synthetic transition id.
inline constexpr std::string_view kSyntheticPrefix = "__aug_";

/// Throws ValidationError when `pda` is not well formed.
[[nodiscard]] AugmentedPda augment(const Pda& pda);

/// Equivalent automaton whose runs start with `initial_stack` on the stack:
/// a fresh initial state pushes it with one ε-move. Identity for ε.
[[nodiscard]] Pda support_initial_stack(const Pda& pda, const StackString& initial_stack);

} // namespace pdaprune

#endif
