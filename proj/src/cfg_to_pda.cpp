#include <pdaprune/cfg_to_pda.h>
#include <pdaprune/error.h>

namespace pdaprune {

TransitionId production_transition_id(std::size_t index) { return TransitionId("p" + std::to_string(index)); }

Pda cfg_to_pda(const Grammar& g)
{
    const auto start = g.start();
    if (!start)
        throw Error("grammar has no start symbol");
    for (Grammar::SymbolRef s = 0; s < g.symbol_count(); ++s)
        if (!is_valid_name(g.name(s)) || g.name(s) == "-")
            throw Error("grammar symbol '" + g.name(s) + "' is not a valid pda symbol");

    Pda pda;
    const StateId qs("qs"), ql("ql"), qa("qa");
    pda.states = {qs, ql, qa};
    pda.initial = qs;
    pda.finals = {qa};

    auto sym = [&](Grammar::SymbolRef s) { return Symbol(g.name(s)); };
    std::string end_name = "Z";
    while (g.find(end_name))
        end_name += "'";
    const Symbol end(end_name);

    for (Grammar::SymbolRef s = 0; s < g.symbol_count(); ++s) {
        pda.stack_alphabet.push_back(sym(s));
        if (g.is_terminal(s))
            pda.input_alphabet.push_back(sym(s));
    }
    pda.stack_alphabet.push_back(end);

    pda.transitions.push_back({TransitionId("start"), qs, std::nullopt, {}, {sym(*start), end}, ql});
    for (std::size_t i = 0; i < g.productions().size(); ++i) {
        const auto& p = g.productions()[i];
        StackString push;
        for (auto s : p.rhs)
            push.push_back(sym(s));
        pda.transitions.push_back({production_transition_id(i), ql, std::nullopt, {sym(p.lhs)}, std::move(push), ql});
    }
    for (auto a : g.terminals())
        pda.transitions.push_back({TransitionId("m_" + g.name(a)), ql, sym(a), {sym(a)}, {}, ql});
    pda.transitions.push_back({TransitionId("end"), ql, std::nullopt, {end}, {}, qa});
    return pda;
}

} // namespace pdaprune
