#include <pdaprune/error.h>
#include <pdaprune/oracle.h>

#include <unordered_set>

namespace pdaprune::oracle {

namespace {

class Namer {
public:
    template <typename Range>
    explicit Namer(const Range& taken)
    {
        for (const auto& n : taken)
            taken_.insert(n.str());
    }

    std::string fresh(const std::string& base)
    {
        std::string name = base;
        for (std::size_t i = 1; !taken_.insert(name).second; ++i)
            name = base + "." + std::to_string(i);
        return name;
    }

private:
    std::unordered_set<std::string> taken_;
};

} // namespace

NormalizedPda normalize(const AugmentedPda& aug)
{
    const Pda& p0 = aug.p0;
    NormalizedPda out;
    out.bottom_marker = aug.bottom_marker;
    out.final_state = aug.final_state;
    Pda& n = out.pda;
    n.states = p0.states;
    n.input_alphabet = p0.input_alphabet;
    n.stack_alphabet = p0.stack_alphabet;
    n.initial = p0.initial;
    n.finals = p0.finals;

    Namer states(p0.states);
    Namer ids(p0.transition_ids());

    for (const auto& t : p0.transitions) {
        std::optional<TransitionId> origin;
        if (auto it = aug.origin_of.find(t.id); it != aug.origin_of.end())
            origin = it->second;
        if (t.pop.size() == 1 && t.push.size() <= 2) {
            if (origin)
                out.provenance.emplace(t.id, *origin);
            n.transitions.push_back(t);
            continue;
        }
        std::size_t part = 0;

        auto emit = [&](StateId from, std::optional<Symbol> input, Symbol pop, StackString push, StateId to,
                        bool designated) {
            TransitionId id(ids.fresh(t.id.str() + "." + std::to_string(part++)));
            if (designated && origin)
                out.provenance.emplace(id, *origin);
            n.transitions.push_back({id, std::move(from), std::move(input), {std::move(pop)}, std::move(push),
                                     std::move(to)});
        };
        auto fresh_state = [&] {
            StateId s(states.fresh(t.id.str() + ".s"));
            n.states.push_back(s);
            return s;
        };
        // from --pop x, push y1..ym--> to using pushes of at most two symbols:
        // each step replaces the current top by the next symbol above it.
        auto pop_push = [&](StateId from, std::optional<Symbol> input, Symbol x, const StackString& push,
                            const StateId& to, bool designated) {
            if (push.size() <= 2) {
                emit(std::move(from), std::move(input), std::move(x), push, to, designated);
                return;
            }
            const auto m = push.size();
            StateId cur = fresh_state();
            emit(std::move(from), std::move(input), std::move(x), {push[m - 2], push[m - 1]}, cur, designated);
            for (std::size_t top = m - 2; top > 0; --top) {
                StateId nxt = top == 1 ? to : fresh_state();
                emit(cur, std::nullopt, push[top], {push[top - 1], push[top]}, nxt, false);
                cur = std::move(nxt);
            }
        };

        if (t.pop.empty()) {
            for (const auto& x : p0.stack_alphabet)
                pop_push(t.source, t.input, x, concat(t.push, {x}), t.target, true);
            continue;
        }
        StateId cur = t.source;
        for (std::size_t i = 0; i + 1 < t.pop.size(); ++i) {
            StateId nxt = fresh_state();
            emit(cur, i == 0 ? t.input : std::nullopt, t.pop[i], {}, nxt, i == 0);
            cur = std::move(nxt);
        }
        pop_push(cur, t.pop.size() == 1 ? t.input : std::nullopt, t.pop.back(), t.push, t.target,
                 t.pop.size() == 1);
    }
    return out;
}

NormalizedPda normalize(const Pda& pda) { return normalize(augment(pda)); }

TripleGrammar pda_to_grammar(const NormalizedPda& npda)
{
    const Pda& pda = npda.pda;
    TripleGrammar out;
    Grammar& g = out.grammar;

    std::unordered_map<StateId, std::size_t> state_index;
    for (std::size_t i = 0; i < pda.states.size(); ++i)
        state_index.emplace(pda.states[i], i);
    std::unordered_map<Symbol, std::size_t> symbol_index;
    for (std::size_t i = 0; i < pda.stack_alphabet.size(); ++i)
        symbol_index.emplace(pda.stack_alphabet[i], i);
    const std::size_t nq = pda.states.size();
    const std::size_t ng = pda.stack_alphabet.size();

    std::unordered_map<Symbol, Grammar::SymbolRef> inputs;
    for (const auto& a : pda.input_alphabet)
        inputs.emplace(a, g.add_terminal(a.str()));
    std::string start_name = "S";
    while (g.find(start_name))
        start_name += "'";
    auto start = g.add_nonterminal(start_name);
    g.set_start(start);

    std::vector<std::optional<Grammar::SymbolRef>> triples(nq * ng * nq);
    auto triple = [&](std::size_t p, std::size_t x, std::size_t q) {
        auto& slot = triples[(p * ng + x) * nq + q];
        if (!slot)
            slot = g.add_nonterminal("[" + pda.states[p].str() + "," + pda.stack_alphabet[x].str() + "," +
                                     pda.states[q].str() + "]");
        return *slot;
    };

    auto add = [&](Grammar::SymbolRef lhs, std::vector<Grammar::SymbolRef> rhs, std::optional<TransitionId> origin) {
        g.add_production(lhs, std::move(rhs));
        out.origin.push_back(std::move(origin));
    };
    add(start,
        {triple(state_index.at(pda.initial), symbol_index.at(npda.bottom_marker), state_index.at(npda.final_state))},
        std::nullopt);

    std::unordered_map<TransitionId, Grammar::SymbolRef> markers;
    auto marker_of = [&](const TransitionId& origin) {
        if (auto it = markers.find(origin); it != markers.end())
            return it->second;
        std::string name = "<" + origin.str() + ">";
        while (g.find(name))
            name += "'";
        return markers.emplace(origin, g.add_terminal(name)).first->second;
    };

    for (const auto& t : pda.transitions) {
        if (t.pop.size() != 1 || t.push.size() > 2)
            throw Error("transition " + t.id.str() + " is not in normal form");
        std::vector<Grammar::SymbolRef> prefix;
        std::optional<TransitionId> origin;
        if (auto it = npda.provenance.find(t.id); it != npda.provenance.end()) {
            origin = it->second;
            prefix.push_back(marker_of(it->second));
        }
        if (t.input)
            prefix.push_back(inputs.at(*t.input));

        const auto p = state_index.at(t.source);
        const auto r = state_index.at(t.target);
        const auto x = symbol_index.at(t.pop.front());
        if (t.push.empty()) {
            add(triple(p, x, r), prefix, origin);
        } else if (t.push.size() == 1) {
            const auto y = symbol_index.at(t.push[0]);
            for (std::size_t s = 0; s < nq; ++s) {
                auto rhs = prefix;
                rhs.push_back(triple(r, y, s));
                add(triple(p, x, s), std::move(rhs), origin);
            }
        } else {
            const auto y1 = symbol_index.at(t.push[0]);
            const auto y2 = symbol_index.at(t.push[1]);
            for (std::size_t u = 0; u < nq; ++u)
                for (std::size_t s = 0; s < nq; ++s) {
                    auto rhs = prefix;
                    rhs.push_back(triple(r, y1, u));
                    rhs.push_back(triple(u, y2, s));
                    add(triple(p, x, s), std::move(rhs), origin);
                }
        }
    }
    return out;
}

std::vector<TransitionId> exact_useless(const Pda& pda)
{
    const auto tg = pda_to_grammar(normalize(pda));
    std::vector<char> useless_production(tg.grammar.productions().size(), 0);
    for (auto p : grammar_useless(tg.grammar))
        useless_production[p] = 1;
    std::unordered_set<TransitionId> useful;
    for (std::size_t p = 0; p < tg.origin.size(); ++p)
        if (tg.origin[p] && !useless_production[p])
            useful.insert(*tg.origin[p]);
    std::vector<TransitionId> out;
    for (const auto& t : pda.transitions)
        if (!useful.count(t.id))
            out.push_back(t.id);
    return out;
}

} // namespace pdaprune::oracle
