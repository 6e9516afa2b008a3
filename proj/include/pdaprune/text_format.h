#ifndef PDAPRUNE_TEXT_FORMAT_H
#define PDAPRUNE_TEXT_FORMAT_H

#include <pdaprune/grammar.h>
#include <pdaprune/pda.h>

#include <string>
#include <string_view>

namespace pdaprune {

/// Line-based pda documents. `#` starts a comment. Directives:
///
///     state <name> [initial] [final]
///     input <sym>...
///     stack <sym>...
///     trans <id> <from> <input|-> <pop|-> <push|-> <to>
///
/// pop and push are comma-separated, top-first; `-` is ε. Exactly one state
/// is initial. Throws ParseError carrying the offending line number.
[[nodiscard]] Pda parse_pda(std::string_view text);
/// Canonical form; parse_pda(print_pda(p)) == p whenever p.finals follows state order.
[[nodiscard]] std::string print_pda(const Pda& pda);

/// Grammar documents: `A -> x y | z` lines and an optional `%start A`
/// (default: the first left-hand side). A symbol is a nonterminal iff it
/// appears on a left-hand side or is the start symbol; `-` is an empty
/// alternative.
[[nodiscard]] Grammar parse_grammar(std::string_view text);
/// One production per line, in production order.
[[nodiscard]] std::string print_grammar(const Grammar& g);

[[nodiscard]] std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

} // namespace pdaprune

#endif
