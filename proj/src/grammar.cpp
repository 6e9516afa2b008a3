#include <pdaprune/error.h>
#include <pdaprune/grammar.h>

namespace pdaprune {

Grammar::SymbolRef Grammar::add_symbol(std::string name, bool terminal)
{
    if (auto it = index_.find(name); it != index_.end()) {
        if ((terminal_[it->second] != 0) != terminal)
            throw Error("symbol '" + name + "' used both as terminal and nonterminal");
        return it->second;
    }
    auto ref = static_cast<SymbolRef>(names_.size());
    index_.emplace(name, ref);
    names_.push_back(std::move(name));
    terminal_.push_back(terminal ? 1 : 0);
    return ref;
}

Grammar::SymbolRef Grammar::add_terminal(std::string name) { return add_symbol(std::move(name), true); }
Grammar::SymbolRef Grammar::add_nonterminal(std::string name) { return add_symbol(std::move(name), false); }

std::size_t Grammar::add_production(SymbolRef lhs, std::vector<SymbolRef> rhs)
{
    if (is_terminal(lhs))
        throw Error("terminal '" + name(lhs) + "' on a left-hand side");
    for (auto s : rhs)
        if (s >= names_.size())
            throw Error("undeclared symbol in production");
    productions_.push_back({lhs, std::move(rhs)});
    return productions_.size() - 1;
}

std::optional<Grammar::SymbolRef> Grammar::find(std::string_view name) const
{
    auto it = index_.find(std::string(name));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::vector<Grammar::SymbolRef> Grammar::terminals() const
{
    std::vector<SymbolRef> out;
    for (SymbolRef s = 0; s < names_.size(); ++s)
        if (terminal_[s])
            out.push_back(s);
    return out;
}

std::vector<Grammar::SymbolRef> Grammar::nonterminals() const
{
    std::vector<SymbolRef> out;
    for (SymbolRef s = 0; s < names_.size(); ++s)
        if (!terminal_[s])
            out.push_back(s);
    return out;
}

std::string Grammar::describe(std::size_t production) const
{
    const auto& p = productions_.at(production);
    std::string out = names_[p.lhs] + " ->";
    if (p.rhs.empty())
        out += " -";
    for (auto s : p.rhs)
        out += " " + names_[s];
    return out;
}

std::vector<std::size_t> grammar_useless(const Grammar& g)
{
    const auto& prods = g.productions();
    const auto n = g.symbol_count();

    std::vector<char> generating(n, 0);
    for (Grammar::SymbolRef s = 0; s < n; ++s)
        generating[s] = g.is_terminal(s) ? 1 : 0;

    std::vector<std::size_t> missing(prods.size(), 0);
    std::vector<std::vector<std::size_t>> occurrences(n);
    std::vector<std::vector<std::size_t>> by_lhs(n);
    std::vector<Grammar::SymbolRef> work;
    auto mark = [&](Grammar::SymbolRef a) {
        if (!generating[a]) {
            generating[a] = 1;
            work.push_back(a);
        }
    };
    for (std::size_t p = 0; p < prods.size(); ++p) {
        by_lhs[prods[p].lhs].push_back(p);
        for (auto s : prods[p].rhs)
            if (!g.is_terminal(s)) {
                ++missing[p];
                occurrences[s].push_back(p);
            }
    }
    for (std::size_t p = 0; p < prods.size(); ++p)
        if (missing[p] == 0)
            mark(prods[p].lhs);
    while (!work.empty()) {
        auto a = work.back();
        work.pop_back();
        for (auto p : occurrences[a])
            if (--missing[p] == 0)
                mark(prods[p].lhs);
    }

    auto all_generating = [&](const Grammar::Production& p) {
        if (!generating[p.lhs])
            return false;
        for (auto s : p.rhs)
            if (!generating[s])
                return false;
        return true;
    };

    std::vector<char> reachable(n, 0);
    if (auto start = g.start(); start && generating[*start]) {
        reachable[*start] = 1;
        work.push_back(*start);
    }
    while (!work.empty()) {
        auto a = work.back();
        work.pop_back();
        for (auto p : by_lhs[a]) {
            if (!all_generating(prods[p]))
                continue;
            for (auto s : prods[p].rhs)
                if (!g.is_terminal(s) && !reachable[s]) {
                    reachable[s] = 1;
                    work.push_back(s);
                }
        }
    }

    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < prods.size(); ++p)
        if (!reachable[prods[p].lhs] || !all_generating(prods[p]))
            out.push_back(p);
    return out;
}

} // namespace pdaprune
