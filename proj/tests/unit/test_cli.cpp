#include "support.h"

#include <pdaprune/cli.h>

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

using namespace testing;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir()
    {
        path = fs::temp_directory_path() / ("pdaprune-cli-" + std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    [[nodiscard]] std::string file(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("analyze")
{
    const auto ex = fixture_path("example1.pda");
    const auto r = cli({"analyze", ex});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("t3  dead") != std::string::npos);
    CHECK(r.out.find("useless transitions: 1 (0 unreachable, 1 dead)") != std::string::npos);

    const auto m = cli({"analyze", ex, "--format", "machine"});
    CHECK(m.code == kExitOk);
    CHECK(m.out ==
          "pdaprune-report 1\ntransitions 7\nempty-language no\nUSEFUL t1\nUSEFUL t2\nUSELESS t3 dead\n"
          "USEFUL t4\nUSEFUL t5\nUSEFUL t6\nUSEFUL t7\n");

    const auto s = cli({"--stats", "analyze", ex, "--format", "machine"});
    CHECK(s.out.find("STAT gamma-edges 6\n") != std::string::npos);
    CHECK(cli({"analyze", ex, "--stats"}).out.find("  eps-edges: 9") != std::string::npos);

    CHECK(cli({"analyze", ex, "--debug-no-closure", "--debug-no-memo", "--format", "machine"}).out == m.out);
    CHECK(cli({"analyze", ex}).out == r.out);
}

TEST_CASE("exit codes")
{
    TempDir tmp;
    write_file(tmp.file("empty.pda"), "state q0 initial\nstack a\ntrans t1 q0 - - a q0\n");
    write_file(tmp.file("broken.pda"), "state q0 initial\ntrans t1 q0 - - - q7\n");

    CHECK(cli({"analyze", tmp.file("empty.pda")}).code == kExitEmptyLanguage);
    const auto broken = cli({"analyze", tmp.file("broken.pda")});
    CHECK(broken.code == kExitInput);
    CHECK(broken.err.find("line 2") != std::string::npos);
    CHECK(cli({"analyze", tmp.file("missing.pda")}).code == kExitInput);
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"frobnicate"}).code == kExitUsage);
    CHECK(cli({"analyze"}).code == kExitUsage);
    CHECK(cli({"analyze", "x", "--format", "xml"}).code == kExitUsage);
    CHECK(cli({"--help"}).code == kExitOk);
    const auto v = cli({"--version"});
    CHECK(v.code == kExitOk);
    CHECK(v.out == "pdaprune 0.1.0\n");
}

TEST_CASE("prune, nfa, cfg2pda")
{
    TempDir tmp;
    const auto ex = fixture_path("example1.pda");
    auto r = cli({"prune", ex, "-o", tmp.file("pruned.pda")});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "removed 1 of 7 transitions\n");
    const auto pruned = parse_pda(read_file(tmp.file("pruned.pda")));
    CHECK(pruned.transitions.size() == 6);
    CHECK(cli({"verify", tmp.file("pruned.pda")}).code == kExitOk);

    auto orphan = example1();
    orphan.states.emplace_back("spare");
    write_file(tmp.file("orphan.pda"), print_pda(orphan));
    CHECK(cli({"prune", tmp.file("orphan.pda"), "-o", tmp.file("o.pda"), "--drop-orphans"}).code == kExitOk);
    CHECK(parse_pda(read_file(tmp.file("o.pda"))).states.size() == 4);

    r = cli({"nfa", ex, "--dot", tmp.file("n.dot")});
    CHECK(r.code == kExitOk);
    CHECK(read_file(tmp.file("n.dot")).starts_with("digraph"));

    write_file(tmp.file("g.cfg"), "S -> a S b | -\nB -> b\n");
    r = cli({"cfg2pda", tmp.file("g.cfg"), "-o", tmp.file("g.pda")});
    CHECK(r.code == kExitOk);
    const auto m = cli({"analyze", tmp.file("g.pda"), "--format", "machine"});
    CHECK(m.out.find("USELESS p2 unreachable") != std::string::npos);
}

TEST_CASE("verify")
{
    const auto ex = fixture_path("example1.pda");
    auto r = cli({"verify", ex, "--exact"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "MATCH\n");
    CHECK(cli({"verify", ex}).out == "MATCH\n");
    r = cli({"verify", ex, "--bounded", "4", "8"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "MATCH\n");
    CHECK(cli({"verify", ex, "--bounded", "4"}).code == kExitUsage);
    CHECK(cli({"verify", ex, "--exact", "--bounded", "4", "8"}).code == kExitUsage);
}

TEST_CASE("gen")
{
    TempDir tmp;
    const auto a = cli({"gen", "--seed", "9"});
    const auto b = cli({"gen", "--seed", "9"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(parse_pda(a.out).transitions.size() <= 12);
    CHECK(cli({"gen", "--seed", "9", "-o", tmp.file("g.pda")}).code == kExitOk);
    CHECK(read_file(tmp.file("g.pda")) == a.out);

    const auto big = cli({"gen", "--seed", "2", "--states", "50", "--transitions", "300", "--exact-size"});
    const auto p = parse_pda(big.out);
    CHECK(p.states.size() == 50);
    CHECK(p.transitions.size() == 300);

    ::setenv("PDAPRUNE_SEED", "9", 1);
    CHECK(cli({"gen"}).out == a.out);
    ::setenv("PDAPRUNE_SEED", "nine", 1);
    CHECK(cli({"gen"}).code == kExitUsage);
    ::unsetenv("PDAPRUNE_SEED");
    CHECK(cli({"gen"}).out == cli({"gen", "--seed", "1"}).out);
}
