#ifndef PDAPRUNE_GRAMMAR_H
#define PDAPRUNE_GRAMMAR_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pdaprune {

/// Context-free grammar with interned symbols. Symbols are referred to by
/// index; each is either a terminal or a nonterminal, fixed at creation.
class Grammar {
public:
    using SymbolRef = std::uint32_t;

    struct Production {
        SymbolRef lhs;
        std::vector<SymbolRef> rhs;
        friend bool operator==(const Production&, const Production&) = default;
    };

    /// Returns the existing symbol when the name is already declared with the
    /// same kind; throws Error on a kind clash.
    SymbolRef add_terminal(std::string name);
    SymbolRef add_nonterminal(std::string name);

    std::size_t add_production(SymbolRef lhs, std::vector<SymbolRef> rhs);
    void set_start(SymbolRef s) { start_ = s; }

    [[nodiscard]] std::optional<SymbolRef> find(std::string_view name) const;
    [[nodiscard]] const std::string& name(SymbolRef s) const { return names_.at(s); }
    [[nodiscard]] bool is_terminal(SymbolRef s) const { return terminal_.at(s) != 0; }
    [[nodiscard]] std::size_t symbol_count() const noexcept { return names_.size(); }
    [[nodiscard]] std::vector<SymbolRef> terminals() const;
    [[nodiscard]] std::vector<SymbolRef> nonterminals() const;
    [[nodiscard]] const std::vector<Production>& productions() const noexcept { return productions_; }
    [[nodiscard]] std::optional<SymbolRef> start() const noexcept { return start_; }

    /// `A -> x y` (`A -> -` for an empty right-hand side).
    [[nodiscard]] std::string describe(std::size_t production) const;

    friend bool operator==(const Grammar& a, const Grammar& b)
    {
        return a.names_ == b.names_ && a.terminal_ == b.terminal_ && a.productions_ == b.productions_ &&
               a.start_ == b.start_;
    }

private:
    SymbolRef add_symbol(std::string name, bool terminal);

    std::vector<std::string> names_;
    std::vector<char> terminal_;
    std::unordered_map<std::string, SymbolRef> index_;
    std::vector<Production> productions_;
    std::optional<SymbolRef> start_;
};

/// Indices of productions that occur in no derivation from the start symbol
/// to a terminal string: first the generating nonterminals are computed as a
/// fixpoint, then reachability from the start symbol through productions
/// whose symbols all generate. A grammar without a start symbol has only
/// useless productions. Ascending order.
[[nodiscard]] std::vector<std::size_t> grammar_useless(const Grammar& g);

} // namespace pdaprune

#endif
