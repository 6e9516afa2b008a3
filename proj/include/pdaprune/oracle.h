#ifndef PDAPRUNE_ORACLE_H
#define PDAPRUNE_ORACLE_H

#include <pdaprune/augment.h>
#include <pdaprune/grammar.h>
#include <pdaprune/pda.h>

#include <cstddef>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

/// Independent verifiers for the analysis: explicit bounded search over
/// configurations, and an exact check through a pda-to-grammar translation.
namespace pdaprune::oracle {

using Word = std::vector<Symbol>;

/// Transitions used on some run from (q0, ε) to a final state with at most
/// `max_moves` moves and every intermediate stack of height <= `max_stack`.
/// Sound but not complete. Declaration order.
[[nodiscard]] std::vector<TransitionId> bounded_useful(const Pda& pda, std::size_t max_stack,
                                                       std::size_t max_moves);

/// Input strings of length <= `max_len` labelling a bounded accepting run.
[[nodiscard]] std::set<Word> bounded_language(const Pda& pda, std::size_t max_len, std::size_t max_stack,
                                              std::size_t max_moves);

/// Configurations reachable from `start` with intermediate stacks of height
/// <= `max_stack` and, when given, at most `max_moves` moves.
[[nodiscard]] std::set<Configuration> reachable_configurations(const Pda& pda, const Configuration& start,
                                                               std::size_t max_stack,
                                                               std::optional<std::size_t> max_moves = {});

/// Augmented automaton rewritten so that every transition pops exactly one
/// symbol and pushes at most two. Each original transition becomes one or
/// more chains through fresh states; the first element of each chain carries
/// the original's input symbol and is its designated representative. Transitions
/// already in that form are kept unchanged.
struct NormalizedPda {
    Pda pda;
    Symbol bottom_marker;
    StateId final_state;
    /// Designated representative id -> original transition id.
    std::unordered_map<TransitionId, TransitionId> provenance;
};

[[nodiscard]] NormalizedPda normalize(const AugmentedPda& aug);
/// Augments first; throws ValidationError on a malformed pda.
[[nodiscard]] NormalizedPda normalize(const Pda& pda);

struct TripleGrammar {
    Grammar grammar;
    /// Per production: the original transition whose marker it carries.
    std::vector<std::optional<TransitionId>> origin;
};

/// Standard triple construction: [p,X,q] derives the inputs of runs from
/// (p, Xρ) to (q, ρ). Productions of designated representatives also carry a
/// fresh marker terminal for their original transition.
[[nodiscard]] TripleGrammar pda_to_grammar(const NormalizedPda& npda);

/// Exact set of useless transitions: an original transition is useless iff
/// every production carrying its marker is useless. Declaration order.
[[nodiscard]] std::vector<TransitionId> exact_useless(const Pda& pda);

} // namespace pdaprune::oracle

#endif
