#include <pdaprune/dot.h>

#include <sstream>
#include <unordered_map>

namespace pdaprune {

namespace {

std::string quoted(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + '"';
}

} // namespace

std::string export_dot(const Pda& pda)
{
    std::ostringstream out;
    out << "digraph pda {\n  rankdir=LR;\n";
    std::unordered_map<StateId, std::size_t> index;
    for (std::size_t i = 0; i < pda.states.size(); ++i) {
        const auto& q = pda.states[i];
        index.emplace(q, i);
        out << "  s" << i << " [label=" << quoted(q.str())
            << ", shape=" << (pda.is_final(q) ? "doublecircle" : "circle");
        if (q == pda.initial)
            out << ", style=bold";
        out << "];\n";
    }
    for (const auto& t : pda.transitions) {
        const std::string label = t.id.str() + ": " + (t.input ? t.input->str() : "eps") + ", " +
                                  (t.pop.empty() ? "eps" : to_string(t.pop)) + "/" +
                                  (t.push.empty() ? "eps" : to_string(t.push));
        out << "  s" << index.at(t.source) << " -> s" << index.at(t.target) << " [label=" << quoted(label)
            << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_dot(const NfaSummary& nfa)
{
    std::ostringstream out;
    out << "digraph nfa {\n  rankdir=LR;\n";
    for (NodeId n = 0; n < nfa.size(); ++n) {
        const auto& s = nfa.state(n);
        out << "  s" << n << " [label=" << quoted(s.name()) << ", shape=" << (s.is_final() ? "doublecircle" : "circle");
        if (n == NfaSummary::m0())
            out << ", style=bold";
        out << "];\n";
    }
    for (const auto& e : nfa.gamma_edges())
        out << "  s" << e.from << " -> s" << e.to << " [label=" << quoted(nfa.label(e.label).str()) << "];\n";
    for (const auto& e : nfa.eps_edges())
        out << "  s" << e.from << " -> s" << e.to << " [label=\"eps\", style=dashed];\n";
    out << "}\n";
    return out.str();
}

} // namespace pdaprune
