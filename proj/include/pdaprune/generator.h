#ifndef PDAPRUNE_GENERATOR_H
#define PDAPRUNE_GENERATOR_H

#include <pdaprune/grammar.h>
#include <pdaprune/pda.h>

#include <cstdint>

namespace pdaprune {

struct RandomPdaParams {
    std::size_t max_states = 6;
    std::size_t max_transitions = 12;
    std::size_t max_pop_push = 2;
    std::size_t gamma_size = 3;
    std::size_t input_size = 2;
    double final_prob = 0.3;
    /// Probability that a transition reads no input.
    double epsilon_prob = 0.5;
    /// When set, exactly max_states states and max_transitions transitions.
    bool exact_size = false;
    /// When no state was drawn final, make one random state final.
    bool require_final = false;
};

/// Deterministic for a fixed seed on every platform; the result always validates.
[[nodiscard]] Pda random_pda(std::uint64_t seed, const RandomPdaParams& params = {});

struct RandomGrammarParams {
    std::size_t max_nonterminals = 6;
    std::size_t max_productions = 12;
    std::size_t terminals = 2;
    std::size_t max_rhs = 3;
    double terminal_prob = 0.4;
};

/// Nonterminals A, B, ... (start A), terminals a, b, ...
[[nodiscard]] Grammar random_grammar(std::uint64_t seed, const RandomGrammarParams& params = {});

} // namespace pdaprune

#endif
