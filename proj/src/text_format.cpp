#include <pdaprune/error.h>
#include <pdaprune/text_format.h>

#include <fstream>
#include <sstream>
#include <unordered_set>

namespace pdaprune {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        ++number;
        auto raw = text.substr(pos, end - pos);
        if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        std::istringstream in{std::string(raw)};
        Line line{number, {}};
        for (std::string tok; in >> tok;)
            line.tokens.push_back(std::move(tok));
        if (!line.tokens.empty())
            lines.push_back(std::move(line));
        pos = end + 1;
    }
    return lines;
}

} // namespace

Pda parse_pda(std::string_view text)
{
    Pda pda;
    std::unordered_set<StateId> states;
    std::unordered_set<Symbol> sigma;
    std::unordered_set<Symbol> gamma;
    std::unordered_set<TransitionId> ids;
    std::size_t initial_count = 0;

    auto name = [](const Line& l, const std::string& tok, const char* what) {
        if (!is_valid_name(tok) || tok == "-")
            throw ParseError(l.number, std::string("invalid ") + what + " '" + tok + "'");
        return tok;
    };
    auto stack_string = [&](const Line& l, const std::string& tok) {
        StackString out;
        if (tok == "-")
            return out;
        std::size_t start = 0;
        while (true) {
            auto comma = tok.find(',', start);
            auto part = tok.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            Symbol a(part);
            if (part.empty())
                throw ParseError(l.number, "empty symbol in '" + tok + "'");
            if (!gamma.count(a))
                throw ParseError(l.number, "unknown stack symbol '" + part + "'");
            out.push_back(std::move(a));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
        return out;
    };
    auto state = [&](const Line& l, const std::string& tok) {
        StateId q(tok);
        if (!states.count(q))
            throw ParseError(l.number, "unknown state '" + tok + "'");
        return q;
    };

    for (const auto& l : tokenize(text)) {
        const auto& t = l.tokens;
        const auto& directive = t[0];
        if (directive == "state") {
            if (t.size() < 2)
                throw ParseError(l.number, "syntax error: expected 'state <name> [initial] [final]'");
            StateId q(name(l, t[1], "state name"));
            if (!states.insert(q).second)
                throw ParseError(l.number, "duplicate state '" + t[1] + "'");
            pda.states.push_back(q);
            bool initial = false;
            bool final = false;
            for (std::size_t i = 2; i < t.size(); ++i) {
                if (t[i] == "initial" && !initial)
                    initial = true;
                else if (t[i] == "final" && !final)
                    final = true;
                else
                    throw ParseError(l.number, "syntax error: unexpected '" + t[i] + "'");
            }
            if (initial) {
                if (++initial_count > 1)
                    throw ParseError(l.number, "second initial state '" + t[1] + "'");
                pda.initial = q;
            }
            if (final)
                pda.finals.push_back(q);
        } else if (directive == "input" || directive == "stack") {
            auto& seen = directive == "input" ? sigma : gamma;
            auto& alphabet = directive == "input" ? pda.input_alphabet : pda.stack_alphabet;
            for (std::size_t i = 1; i < t.size(); ++i) {
                Symbol a(name(l, t[i], "symbol"));
                if (!seen.insert(a).second)
                    throw ParseError(l.number, "duplicate symbol '" + t[i] + "'");
                alphabet.push_back(std::move(a));
            }
        } else if (directive == "trans") {
            if (t.size() != 7)
                throw ParseError(l.number,
                                 "syntax error: expected 'trans <id> <from> <input|-> <pop|-> <push|-> <to>'");
            TransitionId id(name(l, t[1], "transition id"));
            if (!ids.insert(id).second)
                throw ParseError(l.number, "duplicate id '" + t[1] + "'");
            std::optional<Symbol> input;
            if (t[3] != "-") {
                input = Symbol(t[3]);
                if (!sigma.count(*input))
                    throw ParseError(l.number, "unknown input symbol '" + t[3] + "'");
            }
            pda.transitions.push_back(
                {id, state(l, t[2]), std::move(input), stack_string(l, t[4]), stack_string(l, t[5]), state(l, t[6])});
        } else {
            throw ParseError(l.number, "syntax error: unknown directive '" + directive + "'");
        }
    }
    if (initial_count == 0)
        throw ParseError(0, "no initial state");
    if (auto diags = validate(pda); !diags.empty())
        throw ValidationError(std::move(diags));
    return pda;
}

std::string print_pda(const Pda& pda)
{
    std::ostringstream out;
    for (const auto& q : pda.states) {
        out << "state " << q;
        if (q == pda.initial)
            out << " initial";
        if (pda.is_final(q))
            out << " final";
        out << '\n';
    }
    auto alphabet = [&](const char* directive, const std::vector<Symbol>& symbols) {
        if (symbols.empty())
            return;
        out << directive;
        for (const auto& a : symbols)
            out << ' ' << a;
        out << '\n';
    };
    alphabet("input", pda.input_alphabet);
    alphabet("stack", pda.stack_alphabet);
    for (const auto& t : pda.transitions)
        out << "trans " << t.id << ' ' << t.source << ' ' << (t.input ? t.input->str() : "-") << ' '
            << to_string(t.pop) << ' ' << to_string(t.push) << ' ' << t.target << '\n';
    return out.str();
}

Grammar parse_grammar(std::string_view text)
{
    const auto lines = tokenize(text);
    std::unordered_set<std::string> lhs;
    std::optional<std::string> start;
    for (const auto& l : lines) {
        const auto& t = l.tokens;
        if (t[0] == "%start") {
            if (t.size() != 2)
                throw ParseError(l.number, "syntax error: expected '%start <symbol>'");
            if (start)
                throw ParseError(l.number, "second %start");
            start = t[1];
        } else if (t.size() >= 2 && t[1] == "->") {
            if (t[0] == "-" || t[0] == "|")
                throw ParseError(l.number, "invalid left-hand side '" + t[0] + "'");
            lhs.insert(t[0]);
            if (!start)
                start = t[0];
        } else {
            throw ParseError(l.number, "syntax error: expected 'A -> ...' or '%start A'");
        }
    }

    Grammar g;
    auto symbol = [&](const std::string& name) {
        return lhs.count(name) || name == start ? g.add_nonterminal(name) : g.add_terminal(name);
    };
    for (const auto& l : lines) {
        const auto& t = l.tokens;
        if (t[0] == "%start") {
            g.set_start(symbol(t[1]));
            continue;
        }
        const auto head = symbol(t[0]);
        std::vector<std::vector<std::string>> alternatives(1);
        for (std::size_t i = 2; i < t.size(); ++i) {
            if (t[i] == "|")
                alternatives.emplace_back();
            else
                alternatives.back().push_back(t[i]);
        }
        for (const auto& alt : alternatives) {
            std::vector<Grammar::SymbolRef> rhs;
            if (alt.empty())
                throw ParseError(l.number, "empty alternative; write '-' for an empty right-hand side");
            if (alt.size() == 1 && alt[0] == "-") {
                g.add_production(head, {});
                continue;
            }
            for (const auto& s : alt) {
                if (s == "-")
                    throw ParseError(l.number, "'-' must stand alone");
                rhs.push_back(symbol(s));
            }
            g.add_production(head, std::move(rhs));
        }
    }
    if (start && !g.start())
        g.set_start(*g.find(*start));
    return g;
}

std::string print_grammar(const Grammar& g)
{
    std::ostringstream out;
    if (auto s = g.start())
        out << "%start " << g.name(*s) << '\n';
    for (std::size_t p = 0; p < g.productions().size(); ++p)
        out << g.describe(p) << '\n';
    return out.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !out.write(contents.data(), static_cast<std::streamsize>(contents.size())))
        throw Error("cannot write '" + path + "'");
}

} // namespace pdaprune
