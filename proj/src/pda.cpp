#include <pdaprune/pda.h>

#include <algorithm>
#include <unordered_set>

namespace pdaprune {

bool Pda::has_state(const StateId& q) const
{
    return std::find(states.begin(), states.end(), q) != states.end();
}

bool Pda::is_final(const StateId& q) const
{
    return std::find(finals.begin(), finals.end(), q) != finals.end();
}

bool Pda::has_stack_symbol(const Symbol& a) const
{
    return std::find(stack_alphabet.begin(), stack_alphabet.end(), a) != stack_alphabet.end();
}

bool Pda::has_input_symbol(const Symbol& a) const
{
    return std::find(input_alphabet.begin(), input_alphabet.end(), a) != input_alphabet.end();
}

const PdaTransition* Pda::find(const TransitionId& id) const
{
    auto it = std::find_if(transitions.begin(), transitions.end(),
                           [&](const PdaTransition& t) { return t.id == id; });
    return it == transitions.end() ? nullptr : &*it;
}

std::vector<TransitionId> Pda::transition_ids() const
{
    std::vector<TransitionId> ids;
    ids.reserve(transitions.size());
    for (const auto& t : transitions)
        ids.push_back(t.id);
    return ids;
}

std::string_view to_string(Diagnostic::Kind kind) noexcept
{
    switch (kind) {
    case Diagnostic::Kind::UnknownState: return "unknown state";
    case Diagnostic::Kind::DuplicateState: return "duplicate state";
    case Diagnostic::Kind::DuplicateId: return "duplicate id";
    case Diagnostic::Kind::DuplicateSymbol: return "duplicate symbol";
    case Diagnostic::Kind::UnknownStackSymbol: return "unknown stack symbol";
    case Diagnostic::Kind::UnknownInputSymbol: return "unknown input symbol";
    case Diagnostic::Kind::InvalidName: return "invalid name";
    }
    return "unknown";
}

std::vector<Diagnostic> validate(const Pda& pda)
{
    std::vector<Diagnostic> out;
    auto report = [&](Diagnostic::Kind kind, const std::string& detail) {
        out.push_back({kind, std::string(to_string(kind)) + ": " + detail});
    };
    auto check_name = [&](const std::string& name, const char* what) {
        if (!is_valid_name(name))
            report(Diagnostic::Kind::InvalidName, std::string(what) + " '" + name + "'");
    };

    std::unordered_set<StateId> states;
    for (const auto& q : pda.states) {
        check_name(q.str(), "state");
        if (!states.insert(q).second)
            report(Diagnostic::Kind::DuplicateState, q.str());
    }
    auto check_symbols = [&](const std::vector<Symbol>& alphabet, const char* what) {
        std::unordered_set<Symbol> seen;
        for (const auto& a : alphabet) {
            check_name(a.str(), what);
            if (!seen.insert(a).second)
                report(Diagnostic::Kind::DuplicateSymbol, std::string(what) + " " + a.str());
        }
        return seen;
    };
    const auto sigma = check_symbols(pda.input_alphabet, "input symbol");
    const auto gamma = check_symbols(pda.stack_alphabet, "stack symbol");

    if (!states.count(pda.initial))
        report(Diagnostic::Kind::UnknownState, "initial state '" + pda.initial.str() + "'");
    for (const auto& f : pda.finals)
        if (!states.count(f))
            report(Diagnostic::Kind::UnknownState, "final state '" + f.str() + "'");

    std::unordered_set<TransitionId> ids;
    for (const auto& t : pda.transitions) {
        check_name(t.id.str(), "transition id");
        if (!ids.insert(t.id).second)
            report(Diagnostic::Kind::DuplicateId, t.id.str());
        if (!states.count(t.source))
            report(Diagnostic::Kind::UnknownState, "'" + t.source.str() + "' in transition " + t.id.str());
        if (!states.count(t.target))
            report(Diagnostic::Kind::UnknownState, "'" + t.target.str() + "' in transition " + t.id.str());
        if (t.input && !sigma.count(*t.input))
            report(Diagnostic::Kind::UnknownInputSymbol, "'" + t.input->str() + "' in transition " + t.id.str());
        for (const auto* part : {&t.pop, &t.push})
            for (const auto& a : *part)
                if (!gamma.count(a))
                    report(Diagnostic::Kind::UnknownStackSymbol,
                           "'" + a.str() + "' in transition " + t.id.str());
    }
    return out;
}

std::vector<Move> step(const Pda& pda, const Configuration& cfg)
{
    std::vector<Move> out;
    for (const auto& t : pda.transitions) {
        if (t.source != cfg.state || t.pop.size() > cfg.stack.size())
            continue;
        if (!std::equal(t.pop.begin(), t.pop.end(), cfg.stack.begin()))
            continue;
        Configuration next{t.target, t.push};
        next.stack.insert(next.stack.end(), cfg.stack.begin() + static_cast<std::ptrdiff_t>(t.pop.size()),
                          cfg.stack.end());
        out.push_back({t.id, std::move(next)});
    }
    return out;
}

std::string describe(const PdaTransition& t)
{
    return t.source.str() + " --" + (t.input ? t.input->str() : std::string("eps")) + ", " + to_string(t.pop) +
           "/" + to_string(t.push) + "--> " + t.target.str();
}

} // namespace pdaprune
