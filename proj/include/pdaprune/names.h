#ifndef PDAPRUNE_NAMES_H
#define PDAPRUNE_NAMES_H

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pdaprune {

/// Strongly typed name. Two values compare equal iff their names are equal,
/// so a `Name` behaves as an interned symbol without a global table.
template <typename Tag>
class Name {
public:
    Name() = default;
    explicit Name(std::string name) : name_(std::move(name)) {}

    [[nodiscard]] const std::string& str() const noexcept { return name_; }
    [[nodiscard]] bool empty() const noexcept { return name_.empty(); }

    friend auto operator<=>(const Name&, const Name&) = default;
    friend bool operator==(const Name&, const Name&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Name& n) { return os << n.name_; }

private:
    std::string name_;
};

struct SymbolTag {};
struct StateTag {};
struct TransitionTag {};

using Symbol = Name<SymbolTag>;
using StateId = Name<StateTag>;
using TransitionId = Name<TransitionTag>;

/// Stack contents, written top-first: index 0 is the top of the stack.
using StackString = std::vector<Symbol>;

[[nodiscard]] StackString reversed(StackString s);
[[nodiscard]] StackString concat(const StackString& top, const StackString& rest);

/// Builds a stack string from bare names, top-first.
[[nodiscard]] StackString make_stack(std::initializer_list<std::string_view> names);

/// Comma-joined, `-` for the empty string.
[[nodiscard]] std::string to_string(const StackString& s);

/// A symbol, state, or transition name must be non-empty and contain no
/// whitespace, comma, or `#`.
[[nodiscard]] bool is_valid_name(std::string_view name) noexcept;

} // namespace pdaprune

template <typename Tag>
struct std::hash<pdaprune::Name<Tag>> {
    std::size_t operator()(const pdaprune::Name<Tag>& n) const noexcept
    {
        return std::hash<std::string>{}(n.str());
    }
};

#endif
