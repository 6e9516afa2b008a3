#ifndef PDAPRUNE_PDA_H
#define PDAPRUNE_PDA_H

#include <pdaprune/names.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pdaprune {

/// A transition `source --input, pop/push--> target`. An absent input is ε.
struct PdaTransition {
    TransitionId id;
    StateId source;
    std::optional<Symbol> input;
    StackString pop;
    StackString push;
    StateId target;

    friend bool operator==(const PdaTransition&, const PdaTransition&) = default;
};

/// Nondeterministic pushdown automaton accepting by final state, starting
/// from the empty stack. Every collection keeps declaration order, which is
/// the canonical iteration order used throughout the library.
struct Pda {
    std::vector<StateId> states;
    std::vector<Symbol> input_alphabet;
    std::vector<Symbol> stack_alphabet;
    std::vector<PdaTransition> transitions;
    StateId initial;
    std::vector<StateId> finals;

    [[nodiscard]] bool has_state(const StateId& q) const;
    [[nodiscard]] bool is_final(const StateId& q) const;
    [[nodiscard]] bool has_stack_symbol(const Symbol& a) const;
    [[nodiscard]] bool has_input_symbol(const Symbol& a) const;
    [[nodiscard]] const PdaTransition* find(const TransitionId& id) const;
    [[nodiscard]] std::vector<TransitionId> transition_ids() const;

    friend bool operator==(const Pda&, const Pda&) = default;
};

struct Configuration {
    StateId state;
    StackString stack;

    friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

struct Diagnostic {
    enum class Kind {
        UnknownState,
        DuplicateState,
        DuplicateId,
        DuplicateSymbol,
        UnknownStackSymbol,
        UnknownInputSymbol,
        InvalidName,
    };
    Kind kind;
    std::string message;
};

[[nodiscard]] std::string_view to_string(Diagnostic::Kind kind) noexcept;

/// Returns one diagnostic per violated well-formedness rule; empty when the
/// automaton is well formed.
[[nodiscard]] std::vector<Diagnostic> validate(const Pda& pda);

struct Move {
    TransitionId via;
    Configuration to;

    friend auto operator<=>(const Move&, const Move&) = default;
};

/// All single moves from `cfg`, in transition order. Input symbols are
/// ignored: any input is assumed available.
[[nodiscard]] std::vector<Move> step(const Pda& pda, const Configuration& cfg);

/// Human-readable form `q --x, c,a/d--> r`.
[[nodiscard]] std::string describe(const PdaTransition& t);

} // namespace pdaprune

#endif
