#include <pdaprune/augment.h>
#include <pdaprune/error.h>

#include <string>

namespace pdaprune {

namespace {

template <typename Taken>
std::string fresh(const std::string& base, Taken&& taken)
{
    if (!taken(base))
        return base;
    for (std::size_t i = 1;; ++i) {
        auto candidate = base + std::to_string(i);
        if (!taken(candidate))
            return candidate;
    }
}

} // namespace

AugmentedPda augment(const Pda& pda)
{
    if (auto diags = validate(pda); !diags.empty())
        throw ValidationError(std::move(diags));

    AugmentedPda out;
    out.p0 = pda;
    out.bottom_marker = Symbol(fresh("__bot", [&](const std::string& n) { return pda.has_stack_symbol(Symbol(n)); }));
    out.drain_state = StateId(fresh("__qe", [&](const std::string& n) { return pda.has_state(StateId(n)); }));
    out.final_state = StateId(fresh("__qf", [&](const std::string& n) {
        return pda.has_state(StateId(n)) || StateId(n) == out.drain_state;
    }));

    auto& p0 = out.p0;
    p0.stack_alphabet.push_back(out.bottom_marker);
    p0.states.push_back(out.drain_state);
    p0.states.push_back(out.final_state);
    p0.finals = {out.final_state};

    std::unordered_set<TransitionId> used;
    for (const auto& t : pda.transitions) {
        used.insert(t.id);
        out.origin_of.emplace(t.id, t.id);
    }
    auto add = [&](const std::string& base, StateId from, StackString pop, StateId to) {
        TransitionId id(fresh(std::string(kSyntheticPrefix) + base,
                              [&](const std::string& n) { return used.count(TransitionId(n)) != 0; }));
        used.insert(id);
        out.synthetic_ids.insert(id);
        p0.transitions.push_back({id, std::move(from), std::nullopt, std::move(pop), {}, std::move(to)});
    };
    for (const auto& q : pda.finals)
        add("exit_" + q.str(), q, {}, out.drain_state);
    for (const auto& a : pda.stack_alphabet)
        add("drain_" + a.str(), out.drain_state, {a}, out.drain_state);
    add("accept", out.drain_state, {out.bottom_marker}, out.final_state);
    return out;
}

Pda support_initial_stack(const Pda& pda, const StackString& initial_stack)
{
    if (initial_stack.empty())
        return pda;
    Pda out = pda;
    StateId start(fresh("__init", [&](const std::string& n) { return pda.has_state(StateId(n)); }));
    TransitionId id(fresh("__init", [&](const std::string& n) { return pda.find(TransitionId(n)) != nullptr; }));
    out.states.insert(out.states.begin(), start);
    out.transitions.insert(out.transitions.begin(),
                           PdaTransition{id, start, std::nullopt, {}, initial_stack, pda.initial});
    out.initial = start;
    return out;
}

} // namespace pdaprune
