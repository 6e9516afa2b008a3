#include <pdaprune/error.h>
#include <pdaprune/oracle.h>

#include <deque>
#include <limits>
#include <string>
#include <unordered_map>

namespace pdaprune::oracle {

namespace {

using Key = std::u16string;

/// The automaton with states and symbols replaced by small integers so that a
/// configuration packs into one string: [state, top, ..., bottom].
struct Packed {
    struct Rule {
        char16_t source;
        char16_t target;
        int input;
        Key pop;
        Key push;
    };
    std::vector<Rule> rules;
    std::vector<std::vector<std::size_t>> by_source;
    std::vector<char> final;
    std::vector<StateId> states;
    std::vector<Symbol> stack_symbols;
    std::vector<Symbol> input_symbols;
    std::unordered_map<StateId, char16_t> state_index;
    std::unordered_map<Symbol, char16_t> stack_index;

    explicit Packed(const Pda& pda)
        : states(pda.states), stack_symbols(pda.stack_alphabet), input_symbols(pda.input_alphabet)
    {
        if (auto d = validate(pda); !d.empty())
            throw ValidationError(std::move(d));
        if (pda.states.size() >= 0xFFFF || pda.stack_alphabet.size() >= 0xFFFF)
            throw Error("automaton too large for explicit search");
        for (std::size_t i = 0; i < states.size(); ++i)
            state_index.emplace(states[i], static_cast<char16_t>(i));
        for (std::size_t i = 0; i < stack_symbols.size(); ++i)
            stack_index.emplace(stack_symbols[i], static_cast<char16_t>(i));
        std::unordered_map<Symbol, int> input_index;
        for (std::size_t i = 0; i < input_symbols.size(); ++i)
            input_index.emplace(input_symbols[i], static_cast<int>(i));
        final.assign(states.size(), 0);
        for (const auto& f : pda.finals)
            final[state_index.at(f)] = 1;
        by_source.resize(states.size());
        for (const auto& t : pda.transitions) {
            Rule r{state_index.at(t.source), state_index.at(t.target), t.input ? input_index.at(*t.input) : -1,
                   pack(t.pop), pack(t.push)};
            by_source[r.source].push_back(rules.size());
            rules.push_back(std::move(r));
        }
    }

    [[nodiscard]] Key pack(const StackString& s) const
    {
        Key k;
        for (const auto& a : s)
            k.push_back(stack_index.at(a));
        return k;
    }

    [[nodiscard]] Key pack(const Configuration& c) const
    {
        Key k(1, state_index.at(c.state));
        k += pack(c.stack);
        return k;
    }

    [[nodiscard]] Configuration unpack(const Key& k) const
    {
        Configuration c{states[k[0]], {}};
        for (std::size_t i = 1; i < k.size(); ++i)
            c.stack.push_back(stack_symbols[k[i]]);
        return c;
    }

    /// Successor of configuration `k` (stack starting at `offset`) by rule `r`,
    /// or empty when the rule does not apply.
    [[nodiscard]] bool apply(const Rule& r, const Key& k, std::size_t offset, std::size_t stack_len, Key& out) const
    {
        if (k[0] != r.source || r.pop.size() > stack_len)
            return false;
        if (k.compare(offset, r.pop.size(), r.pop) != 0)
            return false;
        out.assign(1, r.target);
        out += r.push;
        out.append(k, offset + r.pop.size(), stack_len - r.pop.size());
        return true;
    }
};

struct Graph {
    std::vector<Key> nodes;
    std::vector<std::size_t> depth;
    struct Edge {
        std::size_t from;
        std::size_t rule;
        std::size_t to;
    };
    std::vector<Edge> edges;
};

Graph explore(const Packed& packed, const Key& start, std::size_t max_stack, std::size_t max_moves)
{
    Graph g;
    std::unordered_map<Key, std::size_t> index;
    g.nodes.push_back(start);
    g.depth.push_back(0);
    index.emplace(start, 0);
    Key next;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        if (g.depth[i] >= max_moves)
            continue;
        const Key cur = g.nodes[i];
        for (auto r : packed.by_source[cur[0]]) {
            const auto& rule = packed.rules[r];
            if (!packed.apply(rule, cur, 1, cur.size() - 1, next) || next.size() - 1 > max_stack)
                continue;
            auto [it, inserted] = index.try_emplace(next, g.nodes.size());
            if (inserted) {
                g.nodes.push_back(next);
                g.depth.push_back(g.depth[i] + 1);
            }
            g.edges.push_back({i, r, it->second});
        }
    }
    return g;
}

} // namespace

std::vector<TransitionId> bounded_useful(const Pda& pda, std::size_t max_stack, std::size_t max_moves)
{
    const Packed packed(pda);
    const Key start = packed.pack(Configuration{pda.initial, {}});
    const Graph g = explore(packed, start, max_stack, max_moves);

    constexpr auto kFar = std::numeric_limits<std::size_t>::max() / 2;
    std::vector<std::size_t> to_accept(g.nodes.size(), kFar);
    std::vector<std::vector<std::size_t>> incoming(g.nodes.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        incoming[g.edges[e].to].push_back(e);
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        if (packed.final[g.nodes[i][0]]) {
            to_accept[i] = 0;
            queue.push_back(i);
        }
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto e : incoming[v]) {
            auto u = g.edges[e].from;
            if (to_accept[u] == kFar) {
                to_accept[u] = to_accept[v] + 1;
                queue.push_back(u);
            }
        }
    }

    std::vector<char> used(packed.rules.size(), 0);
    for (const auto& e : g.edges)
        if (g.depth[e.from] + 1 + to_accept[e.to] <= max_moves)
            used[e.rule] = 1;
    std::vector<TransitionId> out;
    for (std::size_t r = 0; r < pda.transitions.size(); ++r)
        if (used[r])
            out.push_back(pda.transitions[r].id);
    return out;
}

std::set<Word> bounded_language(const Pda& pda, std::size_t max_len, std::size_t max_stack, std::size_t max_moves)
{
    const Packed packed(pda);
    // Node layout: [state, stack height, stack..., word...].
    auto make = [](const Key& cfg, const Key& word) {
        Key k(1, cfg[0]);
        k.push_back(static_cast<char16_t>(cfg.size() - 1));
        k.append(cfg, 1);
        k += word;
        return k;
    };
    std::set<Word> words;
    std::vector<Key> nodes{make(packed.pack(Configuration{pda.initial, {}}), {})};
    std::vector<std::size_t> depth{0};
    std::unordered_map<Key, std::size_t> index{{nodes.front(), 0}};
    Key next;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Key cur = nodes[i];
        const std::size_t height = cur[1];
        const Key word = cur.substr(2 + height);
        if (packed.final[cur[0]]) {
            Word w;
            for (auto c : word)
                w.push_back(packed.input_symbols[c]);
            words.insert(std::move(w));
        }
        if (depth[i] >= max_moves)
            continue;
        for (auto r : packed.by_source[cur[0]]) {
            const auto& rule = packed.rules[r];
            if (!packed.apply(rule, cur, 2, height, next) || next.size() - 1 > max_stack)
                continue;
            Key w = word;
            if (rule.input >= 0) {
                if (w.size() >= max_len)
                    continue;
                w.push_back(static_cast<char16_t>(rule.input));
            }
            Key node = make(next, w);
            auto [it, inserted] = index.try_emplace(node, nodes.size());
            if (inserted) {
                nodes.push_back(std::move(node));
                depth.push_back(depth[i] + 1);
            }
        }
    }
    return words;
}

std::set<Configuration> reachable_configurations(const Pda& pda, const Configuration& start, std::size_t max_stack,
                                                 std::optional<std::size_t> max_moves)
{
    const Packed packed(pda);
    const Graph g = explore(packed, packed.pack(start), max_stack,
                            max_moves.value_or(std::numeric_limits<std::size_t>::max()));
    std::set<Configuration> out;
    for (const auto& k : g.nodes)
        out.insert(packed.unpack(k));
    return out;
}

} // namespace pdaprune::oracle
