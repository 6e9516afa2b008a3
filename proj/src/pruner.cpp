#include <pdaprune/augment.h>
#include <pdaprune/error.h>
#include <pdaprune/pruner.h>

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace pdaprune {

std::vector<TransitionId> AnalysisReport::useless() const
{
    std::vector<TransitionId> out = unreachable;
    out.insert(out.end(), dead.begin(), dead.end());
    return out;
}

Analysis run_analysis(const Pda& pda, const AnalysisOptions& options)
{
    auto augmented = augment(pda);
    auto forward = run_forward(augmented, options.forward);
    const Pda p1 = cull(augmented.p0, forward.u1);
    auto backward = run_backward(forward, augmented, p1, options.backward);

    const std::unordered_set<TransitionId> u1(forward.u1.begin(), forward.u1.end());
    const std::unordered_set<TransitionId> u2(backward.u2.begin(), backward.u2.end());
    AnalysisReport report;
    for (const auto& t : pda.transitions) {
        if (u1.count(t.id))
            report.unreachable.push_back(t.id);
        else if (u2.count(t.id))
            report.dead.push_back(t.id);
        else
            report.useful.push_back(t.id);
    }
    report.empty_language = backward.empty_language;
    report.stats = {forward.nfa.size(), forward.nfa.gamma_edges().size(), forward.nfa.eps_edges().size(),
                    forward.passes, backward.processed.size()};
    return {std::move(augmented), std::move(forward), std::move(backward), std::move(report)};
}

AnalysisReport analyze(const Pda& pda, const AnalysisOptions& options)
{
    return run_analysis(pda, options).report;
}

Pda prune(const Pda& pda, const AnalysisReport& report)
{
    std::unordered_map<TransitionId, bool> keep;
    for (const auto* part : {&report.useful, &report.unreachable, &report.dead})
        for (const auto& id : *part)
            if (!keep.emplace(id, part == &report.useful).second)
                throw Error("report lists transition " + id.str() + " more than once");
    if (keep.size() != pda.transitions.size())
        throw Error("report does not match the pda: " + std::to_string(keep.size()) + " classified vs " +
                    std::to_string(pda.transitions.size()) + " transitions");
    Pda out = pda;
    out.transitions.clear();
    for (const auto& t : pda.transitions) {
        auto it = keep.find(t.id);
        if (it == keep.end())
            throw Error("report does not mention transition " + t.id.str());
        if (it->second)
            out.transitions.push_back(t);
    }
    return out;
}

Pda remove_orphan_states(const Pda& pda)
{
    std::unordered_set<StateId> used{pda.initial};
    for (const auto& t : pda.transitions) {
        used.insert(t.source);
        used.insert(t.target);
    }
    Pda out = pda;
    std::erase_if(out.states, [&](const StateId& q) { return !used.count(q); });
    std::erase_if(out.finals, [&](const StateId& q) { return !used.count(q); });
    return out;
}

} // namespace pdaprune
