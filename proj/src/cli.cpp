#include <pdaprune/cfg_to_pda.h>
#include <pdaprune/cli.h>
#include <pdaprune/dot.h>
#include <pdaprune/error.h>
#include <pdaprune/generator.h>
#include <pdaprune/oracle.h>
#include <pdaprune/text_format.h>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace pdaprune {

namespace {

void append_stats(std::ostream& out, const AnalysisStats& s, const char* prefix, const char* sep)
{
    out << prefix << "nfa-states" << sep << s.nfa_states << '\n';
    out << prefix << "gamma-edges" << sep << s.gamma_edges << '\n';
    out << prefix << "eps-edges" << sep << s.eps_edges << '\n';
    out << prefix << "forward-passes" << sep << s.forward_passes << '\n';
    out << prefix << "backward-iterations" << sep << s.backward_iterations << '\n';
}

} // namespace

std::string format_report(const Pda& pda, const AnalysisReport& report, ReportFormat format, bool with_stats)
{
    std::map<TransitionId, const char*> reason;
    for (const auto& id : report.unreachable)
        reason[id] = "unreachable";
    for (const auto& id : report.dead)
        reason[id] = "dead";

    std::ostringstream out;
    if (format == ReportFormat::Machine) {
        out << "pdaprune-report 1\n";
        out << "transitions " << pda.transitions.size() << '\n';
        out << "empty-language " << (report.empty_language ? "yes" : "no") << '\n';
        if (with_stats)
            append_stats(out, report.stats, "STAT ", " ");
        for (const auto& t : pda.transitions) {
            if (auto it = reason.find(t.id); it != reason.end())
                out << "USELESS " << t.id << ' ' << it->second << '\n';
            else
                out << "USEFUL " << t.id << '\n';
        }
        return out.str();
    }

    out << "pda: " << pda.states.size() << " states, " << pda.transitions.size() << " transitions\n";
    out << "language: " << (report.empty_language ? "empty" : "non-empty") << '\n';
    out << "useless transitions: " << report.unreachable.size() + report.dead.size() << " ("
        << report.unreachable.size() << " unreachable, " << report.dead.size() << " dead)\n";
    for (const auto& t : pda.transitions)
        if (auto it = reason.find(t.id); it != reason.end())
            out << "  " << t.id << "  " << it->second << "  " << describe(t) << '\n';
    out << "useful transitions: " << report.useful.size() << '\n';
    if (with_stats) {
        out << "stats:\n";
        append_stats(out, report.stats, "  ", ": ");
    }
    return out.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Detect and remove useless transitions in pushdown automata", "pdaprune"};
    app.require_subcommand(0, 1);
    app.fallthrough();
    bool version = false;
    bool stats = false;
    app.add_flag("--version", version, "Print the version and exit");
    app.add_flag("--stats", stats, "Report analysis statistics");

    std::string input;
    std::string output;

    auto* analyze_cmd = app.add_subcommand("analyze", "Classify every transition");
    std::string format = "human";
    bool no_closure = false;
    bool no_memo = false;
    analyze_cmd->add_option("pda", input, "Pda document")->required();
    analyze_cmd->add_option("--format", format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
    analyze_cmd->add_flag("--debug-no-closure", no_closure, "Recompute eps-closures instead of maintaining them");
    analyze_cmd->add_flag("--debug-no-memo", no_memo, "Disable path-scan memoization");

    auto* prune_cmd = app.add_subcommand("prune", "Write the pda without its useless transitions");
    bool drop_orphans = false;
    prune_cmd->add_option("pda", input, "Pda document")->required();
    prune_cmd->add_option("-o,--output", output, "Output file")->required();
    prune_cmd->add_flag("--drop-orphans", drop_orphans, "Also remove states no transition touches");

    auto* nfa_cmd = app.add_subcommand("nfa", "Export the stack-summary automaton");
    nfa_cmd->add_option("pda", input, "Pda document")->required();
    nfa_cmd->add_option("--dot", output, "Graphviz output file")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Cross-check the analysis against an oracle");
    bool exact = false;
    std::vector<std::size_t> bounded;
    verify_cmd->add_option("pda", input, "Pda document")->required();
    auto* exact_opt = verify_cmd->add_flag("--exact", exact, "Exact grammar-based oracle (default)");
    verify_cmd->add_option("--bounded", bounded, "Bounded search with max stack H and max moves M")
        ->expected(2)
        ->excludes(exact_opt);

    auto* gen_cmd = app.add_subcommand("gen", "Generate a random pda");
    std::optional<std::uint64_t> seed;
    RandomPdaParams params;
    gen_cmd->add_option("--seed", seed, "Seed (default: $PDAPRUNE_SEED or 1)");
    gen_cmd->add_option("--states", params.max_states, "Maximum number of states")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--transitions", params.max_transitions, "Maximum number of transitions")
        ->check(CLI::PositiveNumber);
    gen_cmd->add_option("--max-pop-push", params.max_pop_push, "Maximum pop/push length");
    gen_cmd->add_option("--gamma", params.gamma_size, "Stack alphabet size")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--inputs", params.input_size, "Input alphabet size");
    gen_cmd->add_option("--final-prob", params.final_prob, "Probability that a state is final")
        ->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_flag("--exact-size", params.exact_size, "Use exactly the maximum sizes");
    gen_cmd->add_flag("--require-final", params.require_final, "Make one state final when none was drawn");
    gen_cmd->add_option("-o,--output", output, "Output file (default: stdout)");

    auto* cfg_cmd = app.add_subcommand("cfg2pda", "Translate a grammar into a top-down pda");
    cfg_cmd->add_option("grammar", input, "Grammar document")->required();
    cfg_cmd->add_option("-o,--output", output, "Output file")->required();

    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    try {
        app.parse(reversed_args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "pdaprune: " << e.what() << '\n';
        return kExitUsage;
    }

    if (version) {
        out << "pdaprune " << kVersion << '\n';
        return kExitOk;
    }
    if (app.get_subcommands().empty()) {
        err << app.help();
        return kExitUsage;
    }

    try {
        if (*analyze_cmd) {
            const Pda pda = parse_pda(read_file(input));
            AnalysisOptions options;
            options.forward.maintain_closure = !no_closure;
            options.backward.memoize = !no_memo;
            const auto report = analyze(pda, options);
            out << format_report(pda, report, format == "machine" ? ReportFormat::Machine : ReportFormat::Human,
                                 stats);
            return report.empty_language ? kExitEmptyLanguage : kExitOk;
        }
        if (*prune_cmd) {
            const Pda pda = parse_pda(read_file(input));
            const auto report = analyze(pda);
            Pda pruned = prune(pda, report);
            if (drop_orphans)
                pruned = remove_orphan_states(pruned);
            write_file(output, print_pda(pruned));
            out << "removed " << pda.transitions.size() - pruned.transitions.size() << " of "
                << pda.transitions.size() << " transitions\n";
            if (stats)
                append_stats(out, report.stats, "  ", ": ");
            return kExitOk;
        }
        if (*nfa_cmd) {
            const Pda pda = parse_pda(read_file(input));
            const auto analysis = run_analysis(pda);
            write_file(output, export_dot(analysis.forward.nfa));
            out << "nfa: " << analysis.forward.nfa.size() << " states, " << analysis.forward.nfa.gamma_edges().size()
                << " stack-symbol edges, " << analysis.forward.nfa.eps_edges().size() << " eps edges\n";
            if (stats)
                append_stats(out, analysis.report.stats, "  ", ": ");
            return kExitOk;
        }
        if (*verify_cmd) {
            const Pda pda = parse_pda(read_file(input));
            const auto report = analyze(pda);
            const auto useless = report.useless();
            const std::set<TransitionId> claimed(useless.begin(), useless.end());
            std::vector<std::string> problems;
            if (bounded.empty()) {
                const auto truth = oracle::exact_useless(pda);
                const std::set<TransitionId> expected(truth.begin(), truth.end());
                for (const auto& t : pda.transitions)
                    if (claimed.count(t.id) != expected.count(t.id))
                        problems.push_back(t.id.str() + ": analyze says " +
                                           (claimed.count(t.id) ? "useless" : "useful") + ", exact oracle says " +
                                           (expected.count(t.id) ? "useless" : "useful"));
            } else {
                for (const auto& id : oracle::bounded_useful(pda, bounded[0], bounded[1]))
                    if (claimed.count(id))
                        problems.push_back(id.str() + ": analyze says useless, bounded search found an accepting run");
            }
            if (problems.empty()) {
                out << "MATCH\n";
                return kExitOk;
            }
            out << "MISMATCH\n";
            for (const auto& p : problems)
                out << "  " << p << '\n';
            return kExitMismatch;
        }
        if (*gen_cmd) {
            if (!seed) {
                seed = 1;
                if (const char* env = std::getenv("PDAPRUNE_SEED"); env && *env) {
                    try {
                        seed = std::stoull(env);
                    } catch (const std::exception&) {
                        err << "pdaprune: PDAPRUNE_SEED is not a number\n";
                        return kExitUsage;
                    }
                }
            }
            const auto text = print_pda(random_pda(*seed, params));
            if (output.empty())
                out << text;
            else
                write_file(output, text);
            return kExitOk;
        }
        if (*cfg_cmd) {
            const Grammar g = parse_grammar(read_file(input));
            write_file(output, print_pda(cfg_to_pda(g)));
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "pdaprune: " << e.what() << '\n';
        return kExitInput;
    }
    err << app.help();
    return kExitUsage;
}

} // namespace pdaprune
