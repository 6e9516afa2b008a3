#include <pdaprune/error.h>
#include <pdaprune/generator.h>

#include <random>

namespace pdaprune {

namespace {

/// Draws from mt19937_64, whose output sequence is fixed by the standard;
/// the std distributions are not, so ranges are mapped by hand.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}

    std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n); }
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
    double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return unit() < p; }

private:
    std::mt19937_64 rng_;
};

std::string letter_name(std::size_t i, char base)
{
    std::string out(1, static_cast<char>(base + i % 26));
    if (i >= 26)
        out += std::to_string(i / 26);
    return out;
}

} // namespace

Pda random_pda(std::uint64_t seed, const RandomPdaParams& params)
{
    if (params.max_states == 0 || params.gamma_size == 0)
        throw Error("random pda needs at least one state and one stack symbol");
    Draw draw(seed);
    Pda pda;
    const auto n = params.exact_size ? params.max_states : draw.between(1, params.max_states);
    for (std::size_t i = 0; i < n; ++i)
        pda.states.emplace_back("q" + std::to_string(i));
    pda.initial = pda.states.front();
    for (const auto& q : pda.states)
        if (draw.chance(params.final_prob))
            pda.finals.push_back(q);
    if (params.require_final && pda.finals.empty())
        pda.finals.push_back(pda.states[draw.below(n)]);
    for (std::size_t i = 0; i < params.input_size; ++i)
        pda.input_alphabet.emplace_back(i < 3 ? std::string(1, "xyz"[i]) : "x" + std::to_string(i));
    for (std::size_t i = 0; i < params.gamma_size; ++i)
        pda.stack_alphabet.emplace_back(letter_name(i, 'a'));

    const auto m = params.exact_size ? params.max_transitions : draw.between(1, params.max_transitions);
    auto stack_string = [&] {
        StackString s(draw.between(0, params.max_pop_push));
        for (auto& a : s)
            a = pda.stack_alphabet[draw.below(pda.stack_alphabet.size())];
        return s;
    };
    for (std::size_t i = 0; i < m; ++i) {
        PdaTransition t;
        t.id = TransitionId("t" + std::to_string(i + 1));
        t.source = pda.states[draw.below(n)];
        if (!pda.input_alphabet.empty() && !draw.chance(params.epsilon_prob))
            t.input = pda.input_alphabet[draw.below(pda.input_alphabet.size())];
        t.pop = stack_string();
        t.push = stack_string();
        t.target = pda.states[draw.below(n)];
        pda.transitions.push_back(std::move(t));
    }
    return pda;
}

Grammar random_grammar(std::uint64_t seed, const RandomGrammarParams& params)
{
    if (params.max_nonterminals == 0)
        throw Error("random grammar needs at least one nonterminal");
    Draw draw(seed);
    Grammar g;
    const auto nn = draw.between(1, params.max_nonterminals);
    std::vector<Grammar::SymbolRef> nts;
    for (std::size_t i = 0; i < nn; ++i)
        nts.push_back(g.add_nonterminal(letter_name(i, 'A')));
    std::vector<Grammar::SymbolRef> ts;
    for (std::size_t i = 0; i < params.terminals; ++i)
        ts.push_back(g.add_terminal(letter_name(i, 'a')));
    g.set_start(nts.front());
    const auto np = draw.between(0, params.max_productions);
    for (std::size_t p = 0; p < np; ++p) {
        const auto lhs = nts[draw.below(nn)];
        std::vector<Grammar::SymbolRef> rhs(draw.between(0, params.max_rhs));
        for (auto& s : rhs)
            s = !ts.empty() && draw.chance(params.terminal_prob) ? ts[draw.below(ts.size())] : nts[draw.below(nn)];
        g.add_production(lhs, std::move(rhs));
    }
    return g;
}

} // namespace pdaprune
