#include "support.h"

#include <pdaprune/error.h>
#include <pdaprune/generator.h>
#include <pdaprune/oracle.h>
#include <pdaprune/pruner.h>

#include <doctest.h>

using namespace testing;

namespace {

/// Transitions that fire from some configuration reachable within the bounds.
std::set<std::string> fired(const Pda& p, std::size_t max_stack)
{
    std::set<std::string> out;
    for (const auto& c : oracle::reachable_configurations(p, {p.initial, {}}, max_stack))
        for (const auto& m : step(p, c))
            if (m.to.stack.size() <= max_stack)
                out.insert(m.via.str());
    return out;
}

} // namespace

TEST_CASE("analyze example 1")
{
    const auto report = analyze(example1());
    CHECK(report.unreachable.empty());
    CHECK(id_set(report.dead) == std::set<std::string>{"t3"});
    CHECK(id_set(report.useful) == std::set<std::string>{"t1", "t2", "t4", "t5", "t6", "t7"});
    CHECK_FALSE(report.empty_language);
    CHECK(report.size() == 7);
    CHECK(report.stats.gamma_edges == 6);
    CHECK(report.stats.eps_edges == 9);
    CHECK(report.stats.nfa_states == 12);
}

TEST_CASE("analyze without final states")
{
    auto p = example1();
    p.finals.clear();
    const auto report = analyze(p);
    CHECK(report.empty_language);
    CHECK(report.useful.empty());
    CHECK(report.useless().size() == p.transitions.size());
}

TEST_CASE("a reachable transition into a dead end is dead")
{
    Pda p;
    p.states = {StateId("q0"), StateId("q1")};
    p.initial = StateId("q0");
    p.finals = {StateId("q0")};
    p.stack_alphabet = {Symbol("a")};
    p.transitions = {trans("t1", "q0", {}, {"a"}, "q1")};
    const auto report = analyze(p);
    CHECK_FALSE(report.empty_language);
    CHECK(report.unreachable.empty());
    CHECK(id_set(report.dead) == std::set<std::string>{"t1"});
}

TEST_CASE("analyze rejects malformed input")
{
    auto p = example1();
    p.transitions[2].pop = make_stack({"zz"});
    CHECK_THROWS_AS((void)analyze(p), ValidationError);
}

TEST_CASE("prune")
{
    const auto p = example1();
    const auto report = analyze(p);

    SUBCASE("example 1 loses t3")
    {
        const auto pruned = prune(p, report);
        CHECK(pruned.transitions.size() == 6);
        CHECK_FALSE(pruned.find(TransitionId("t3")));
        CHECK(pruned.states == p.states);
        CHECK(pruned.finals == p.finals);
        CHECK(pruned.stack_alphabet == p.stack_alphabet);
    }

    SUBCASE("nothing useless is the identity")
    {
        const auto pruned = prune(p, report);
        CHECK(prune(pruned, analyze(pruned)) == pruned);
    }

    SUBCASE("empty language removes everything")
    {
        auto q = p;
        q.finals.clear();
        const auto pruned = prune(q, analyze(q));
        CHECK(pruned.transitions.empty());
        CHECK(pruned.states == q.states);
    }

    SUBCASE("mismatched reports")
    {
        auto bad = report;
        bad.useful.pop_back();
        CHECK_THROWS_AS((void)prune(p, bad), Error);
        bad = report;
        bad.dead.push_back(bad.useful.front());
        CHECK_THROWS_AS((void)prune(p, bad), Error);
        bad = report;
        bad.useful.front() = TransitionId("t99");
        CHECK_THROWS_AS((void)prune(p, bad), Error);
        bad = report;
        bad.useful.push_back(bad.useful.front());
        bad.dead.clear();
        CHECK_THROWS_AS((void)prune(p, bad), Error);
    }
}

TEST_CASE("remove_orphan_states")
{
    auto p = example1();
    p.states.emplace_back("lonely");
    p.finals.emplace_back("lonely");
    const auto q = remove_orphan_states(p);
    CHECK(q.states.size() == 4);
    CHECK(q.finals == std::vector{StateId("q3")});

    Pda bare;
    bare.states = {StateId("s"), StateId("t")};
    bare.initial = StateId("s");
    CHECK(remove_orphan_states(bare).states == std::vector{StateId("s")});
}

TEST_CASE("transitions that differ only in input share a verdict")
{
    auto p = example1();
    p.input_alphabet = {Symbol("x"), Symbol("y")};
    const auto base = p.transitions;
    for (const auto& t : base) {
        auto copy = t;
        copy.id = TransitionId(t.id.str() + "x");
        copy.input = Symbol("x");
        p.transitions.push_back(copy);
    }
    const auto report = analyze(p);
    CHECK(id_set(report.dead) == std::set<std::string>{"t3", "t3x"});
    CHECK(report.useful.size() == 12);
}

TEST_CASE("analysis is deterministic")
{
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const auto p = random_pda(seed);
        const auto a = analyze(p);
        const auto b = analyze(p);
        CHECK(a.unreachable == b.unreachable);
        CHECK(a.dead == b.dead);
        CHECK(a.useful == b.useful);
    }
}

TEST_CASE("pruner properties on random pdas")
{
    RandomPdaParams params;
    params.require_final = true;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        CAPTURE(seed);
        const auto p = random_pda(seed, params);
        const auto report = analyze(p);
        const auto useless = id_set(report.useless());

        // Partition.
        CHECK(report.size() == p.transitions.size());
        CHECK(useless.size() + report.useful.size() == p.transitions.size());
        if (report.empty_language)
            CHECK(report.useful.empty());

        // Idempotence and language preservation.
        const auto pruned = prune(p, report);
        CHECK(analyze(pruned).useless().empty());
        CHECK(oracle::bounded_language(p, 6, 5, 14) == oracle::bounded_language(pruned, 6, 5, 14));

        // Witnessed transitions are useful.
        for (const auto& id : oracle::bounded_useful(p, 5, 14))
            CHECK_FALSE(useless.count(id.str()));

        // Fired transitions are reachable; with room to spare they are exactly the reachable ones.
        const auto f = fired(p, 9);
        for (const auto& id : report.unreachable)
            CHECK_FALSE(f.count(id.str()));
        CHECK(f.size() == p.transitions.size() - report.unreachable.size());
    }
}
