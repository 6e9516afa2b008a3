#include <pdaprune/closure.h>

#include <algorithm>

namespace pdaprune {

void BackwardEpsClosure::grow(std::size_t nodes)
{
    if (nodes <= width_)
        return;
    width_ = std::max<std::size_t>({nodes, 2 * width_, 64});
    for (auto& row : rows_)
        row.resize(width_);
}

void BackwardEpsClosure::sync(const NfaSummary& nfa)
{
    grow(nfa.size());
    while (nodes_ < nfa.size()) {
        if (mode_ == Mode::Incremental) {
            rows_.emplace_back(width_);
            rows_.back().set(nodes_);
        }
        ++nodes_;
    }
}

void BackwardEpsClosure::on_eps_edge(const NfaSummary& nfa, NodeId from, NodeId to)
{
    sync(nfa);
    if (mode_ != Mode::Incremental)
        return;
    // New ε-paths are u ~> from -> to ~> s over pre-existing edges.
    const NodeSet source = rows_[from];
    for (auto& row : rows_)
        if (row.test(to))
            row |= source;
}

NodeSet BackwardEpsClosure::of(const NfaSummary& nfa, NodeId s) const
{
    NodeSet one(width_);
    one.set(s);
    return expand(nfa, one);
}

NodeSet BackwardEpsClosure::expand(const NfaSummary& nfa, const NodeSet& set) const
{
    NodeSet out(width_);
    if (mode_ == Mode::Incremental) {
        for (auto s = set.find_first(); s != NodeSet::npos; s = set.find_next(s))
            out |= rows_[s];
        return out;
    }
    std::vector<NodeId> work;
    for (auto s = set.find_first(); s != NodeSet::npos; s = set.find_next(s)) {
        out.set(s);
        work.push_back(static_cast<NodeId>(s));
    }
    while (!work.empty()) {
        auto y = work.back();
        work.pop_back();
        for (auto x : nfa.eps_in(y))
            if (!out.test(x)) {
                out.set(x);
                work.push_back(x);
            }
    }
    return out;
}

std::vector<NodeSet> backward_closure_from_scratch(const NfaSummary& nfa)
{
    const auto n = nfa.size();
    std::vector<NodeSet> out(n, NodeSet(n));
    for (NodeId s = 0; s < n; ++s) {
        std::vector<NodeId> work{s};
        out[s].set(s);
        while (!work.empty()) {
            auto y = work.back();
            work.pop_back();
            for (auto x : nfa.eps_in(y))
                if (!out[s].test(x)) {
                    out[s].set(x);
                    work.push_back(x);
                }
        }
    }
    return out;
}

} // namespace pdaprune
