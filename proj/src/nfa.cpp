#include <pdaprune/nfa.h>

#include <algorithm>
#include <map>
#include <set>

namespace pdaprune {

namespace {

std::uint64_t pair_key(NodeId a, NodeId b) { return (static_cast<std::uint64_t>(a) << 32) | b; }

} // namespace

std::string NfaState::name() const
{
    switch (kind) {
    case Kind::M0: return "m0";
    case Kind::Inherited: return pda_state.str();
    case Kind::Intermediate: return "n" + std::to_string(index);
    }
    return "?";
}

NfaSummary::NfaSummary(std::vector<Symbol> labels) : labels_(std::move(labels))
{
    for (LabelId i = 0; i < labels_.size(); ++i)
        label_index_.emplace(labels_[i], i);
    add_node(NfaState::m0());
}

NodeId NfaSummary::add_node(NfaState s)
{
    auto id = static_cast<NodeId>(nodes_.size());
    nodes_.push_back(std::move(s));
    gamma_out_.emplace_back();
    gamma_in_.emplace_back();
    eps_out_.emplace_back();
    eps_in_.emplace_back();
    return id;
}

std::optional<NodeId> NfaSummary::find(const NfaState& s) const
{
    switch (s.kind) {
    case NfaState::Kind::M0: return m0();
    case NfaState::Kind::Inherited: return inherited(s.pda_state);
    case NfaState::Kind::Intermediate: {
        auto it = std::find(nodes_.begin(), nodes_.end(), s);
        if (it == nodes_.end())
            return std::nullopt;
        return static_cast<NodeId>(it - nodes_.begin());
    }
    }
    return std::nullopt;
}

std::optional<NodeId> NfaSummary::inherited(const StateId& q) const
{
    auto it = inherited_.find(q);
    if (it == inherited_.end())
        return std::nullopt;
    return it->second;
}

NodeId NfaSummary::ensure_inherited(const StateId& q)
{
    if (auto n = inherited(q))
        return *n;
    auto id = add_node(NfaState::inherited(q));
    inherited_.emplace(q, id);
    return id;
}

NodeId NfaSummary::add_intermediate() { return add_node(NfaState::intermediate(++intermediates_)); }

void NfaSummary::add_gamma(NodeId from, LabelId label, NodeId to)
{
    GammaEdge e{from, label, to};
    gamma_.push_back(e);
    gamma_out_[from].push_back(e);
    gamma_in_[to].push_back(e);
}

bool NfaSummary::add_eps(NodeId from, NodeId to)
{
    if (!eps_index_.insert(pair_key(from, to)).second)
        return false;
    eps_.push_back({from, to});
    eps_out_[from].push_back(to);
    eps_in_[to].push_back(from);
    return true;
}

bool NfaSummary::has_eps(NodeId from, NodeId to) const { return eps_index_.count(pair_key(from, to)) != 0; }

bool NfaSummary::has_eps(const NfaState& from, const NfaState& to) const
{
    auto a = find(from);
    auto b = find(to);
    return a && b && has_eps(*a, *b);
}

std::optional<LabelId> NfaSummary::label_of(const Symbol& a) const
{
    auto it = label_index_.find(a);
    if (it == label_index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<LabelString> NfaSummary::labels_of(const StackString& s) const
{
    LabelString out;
    out.reserve(s.size());
    for (const auto& a : s) {
        auto l = label_of(a);
        if (!l)
            return std::nullopt;
        out.push_back(*l);
    }
    return out;
}

StackString NfaSummary::symbols_of(std::span<const LabelId> labels) const
{
    StackString out;
    out.reserve(labels.size());
    for (auto l : labels)
        out.push_back(labels_.at(l));
    return out;
}

std::optional<NodeId> NfaSummary::nonfinal_source(LabelId label, NodeId to) const
{
    for (const auto& e : gamma_in_[to])
        if (e.label == label && !is_final(e.from))
            return e.from;
    return std::nullopt;
}

std::vector<std::string> check_structure(const NfaSummary& nfa)
{
    std::vector<std::string> out;
    const auto n = nfa.size();

    std::vector<char> seen(n, 0);
    std::vector<NodeId> stack{NfaSummary::m0()};
    seen[NfaSummary::m0()] = 1;
    while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        auto visit = [&](NodeId y) {
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
        };
        for (const auto& e : nfa.gamma_out(x))
            visit(e.to);
        for (auto y : nfa.eps_out(x))
            visit(y);
    }
    for (NodeId x = 0; x < n; ++x) {
        const auto& s = nfa.state(x);
        if (!seen[x])
            out.push_back("state " + s.name() + " unreachable from m0");
        const auto outs = nfa.gamma_out(x).size();
        if (s.is_final() && outs != 0)
            out.push_back("final state " + s.name() + " has outgoing stack-symbol edges");
        if (!s.is_final() && outs != 1)
            out.push_back("non-final state " + s.name() + " has " + std::to_string(outs) +
                          " outgoing stack-symbol edges");
    }
    std::map<std::pair<LabelId, NodeId>, int> sources;
    for (const auto& e : nfa.gamma_edges())
        if (!nfa.is_final(e.from) && ++sources[{e.label, e.to}] == 2)
            out.push_back("two non-final sources for label " + nfa.label(e.label).str() + " into " +
                          nfa.state(e.to).name());
    std::set<EpsEdge> eps;
    for (const auto& e : nfa.eps_edges())
        if (!eps.insert(e).second)
            out.push_back("duplicate eps edge " + nfa.state(e.from).name() + " -> " + nfa.state(e.to).name());
    return out;
}

} // namespace pdaprune
