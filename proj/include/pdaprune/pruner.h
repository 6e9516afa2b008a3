#ifndef PDAPRUNE_PRUNER_H
#define PDAPRUNE_PRUNER_H

#include <pdaprune/backward.h>
#include <pdaprune/forward.h>
#include <pdaprune/pda.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace pdaprune {

struct AnalysisOptions {
    ForwardOptions forward;
    BackwardOptions backward;
};

struct AnalysisStats {
    std::size_t nfa_states = 0;
    std::size_t gamma_edges = 0;
    std::size_t eps_edges = 0;
    std::size_t forward_passes = 0;
    std::size_t backward_iterations = 0;
};

/// Classification of the original transitions. The three id lists partition
/// the transitions and keep their declaration order.
struct AnalysisReport {
    std::vector<TransitionId> unreachable;
    std::vector<TransitionId> dead;
    std::vector<TransitionId> useful;
    bool empty_language = false;
    AnalysisStats stats;

    /// unreachable followed by dead, in declaration order of the automaton.
    [[nodiscard]] std::vector<TransitionId> useless() const;
    [[nodiscard]] std::size_t size() const { return unreachable.size() + dead.size() + useful.size(); }
};

/// Everything the pipeline computed, for callers that need more than the report.
struct Analysis {
    AugmentedPda augmented;
    ForwardResult forward;
    BackwardResult backward;
    AnalysisReport report;
};

/// Throws ValidationError when `pda` is not well formed.
[[nodiscard]] Analysis run_analysis(const Pda& pda, const AnalysisOptions& options = {});
[[nodiscard]] AnalysisReport analyze(const Pda& pda, const AnalysisOptions& options = {});

/// Drops every unreachable and dead transition; states, alphabets, initial
/// and final states are kept. Throws Error when `report` does not describe
/// exactly the transitions of `pda`.
[[nodiscard]] Pda prune(const Pda& pda, const AnalysisReport& report);

/// Removes states that are neither initial nor touched by any transition.
[[nodiscard]] Pda remove_orphan_states(const Pda& pda);

} // namespace pdaprune

#endif
