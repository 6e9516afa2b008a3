#include <pdaprune/cfg_to_pda.h>
#include <pdaprune/cli.h>
#include <pdaprune/dot.h>
#include <pdaprune/error.h>
#include <pdaprune/generator.h>
#include <pdaprune/oracle.h>
#include <pdaprune/pruner.h>
#include <pdaprune/text_format.h>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pdaprune;

namespace {

template <typename N>
std::vector<std::string> strs(const std::vector<N>& names)
{
    std::vector<std::string> out;
    out.reserve(names.size());
    for (const auto& n : names)
        out.push_back(n.str());
    return out;
}

std::vector<std::string> stack_strs(const StackString& s) { return strs(s); }

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Useless-transition detection for pushdown automata";
    m.attr("__version__") = std::string(kVersion);

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());

    py::class_<PdaTransition>(m, "Transition")
        .def_property_readonly("id", [](const PdaTransition& t) { return t.id.str(); })
        .def_property_readonly("source", [](const PdaTransition& t) { return t.source.str(); })
        .def_property_readonly("input",
                               [](const PdaTransition& t) -> std::optional<std::string> {
                                   if (t.input)
                                       return t.input->str();
                                   return std::nullopt;
                               })
        .def_property_readonly("pop", [](const PdaTransition& t) { return stack_strs(t.pop); })
        .def_property_readonly("push", [](const PdaTransition& t) { return stack_strs(t.push); })
        .def_property_readonly("target", [](const PdaTransition& t) { return t.target.str(); })
        .def("__repr__", [](const PdaTransition& t) { return "<Transition " + t.id.str() + ": " + describe(t) + ">"; });

    py::class_<Pda>(m, "Pda")
        .def_property_readonly("states", [](const Pda& p) { return strs(p.states); })
        .def_property_readonly("input_alphabet", [](const Pda& p) { return strs(p.input_alphabet); })
        .def_property_readonly("stack_alphabet", [](const Pda& p) { return strs(p.stack_alphabet); })
        .def_property_readonly("transitions", [](const Pda& p) { return p.transitions; })
        .def_property_readonly("initial", [](const Pda& p) { return p.initial.str(); })
        .def_property_readonly("finals", [](const Pda& p) { return strs(p.finals); })
        .def("__eq__", [](const Pda& a, const Pda& b) { return a == b; })
        .def("__str__", [](const Pda& p) { return print_pda(p); })
        .def("__repr__", [](const Pda& p) {
            return "<Pda " + std::to_string(p.states.size()) + " states, " + std::to_string(p.transitions.size()) +
                   " transitions>";
        });

    py::class_<AnalysisReport>(m, "AnalysisReport")
        .def_property_readonly("unreachable", [](const AnalysisReport& r) { return strs(r.unreachable); })
        .def_property_readonly("dead", [](const AnalysisReport& r) { return strs(r.dead); })
        .def_property_readonly("useful", [](const AnalysisReport& r) { return strs(r.useful); })
        .def_property_readonly("useless", [](const AnalysisReport& r) { return strs(r.useless()); })
        .def_readonly("empty_language", &AnalysisReport::empty_language)
        .def_property_readonly("stats", [](const AnalysisReport& r) {
            py::dict d;
            d["nfa_states"] = r.stats.nfa_states;
            d["gamma_edges"] = r.stats.gamma_edges;
            d["eps_edges"] = r.stats.eps_edges;
            d["forward_passes"] = r.stats.forward_passes;
            d["backward_iterations"] = r.stats.backward_iterations;
            return d;
        });

    m.def("parse_pda", [](const std::string& text) { return parse_pda(text); }, py::arg("text"));
    m.def("print_pda", &print_pda, py::arg("pda"));
    m.def("validate", [](const Pda& p) {
        std::vector<std::string> out;
        for (const auto& d : validate(p))
            out.push_back(d.message);
        return out;
    });
    m.def(
        "analyze",
        [](const Pda& p, bool maintain_closure, bool memoize) {
            AnalysisOptions o;
            o.forward.maintain_closure = maintain_closure;
            o.backward.memoize = memoize;
            return analyze(p, o);
        },
        py::arg("pda"), py::arg("maintain_closure") = true, py::arg("memoize") = true);
    m.def("prune", &prune, py::arg("pda"), py::arg("report"));
    m.def("remove_orphan_states", &remove_orphan_states, py::arg("pda"));
    m.def("exact_useless", [](const Pda& p) { return strs(oracle::exact_useless(p)); }, py::arg("pda"));
    m.def(
        "bounded_useful",
        [](const Pda& p, std::size_t max_stack, std::size_t max_moves) {
            return strs(oracle::bounded_useful(p, max_stack, max_moves));
        },
        py::arg("pda"), py::arg("max_stack"), py::arg("max_moves"));
    m.def(
        "bounded_language",
        [](const Pda& p, std::size_t max_len, std::size_t max_stack, std::size_t max_moves) {
            std::vector<std::vector<std::string>> out;
            for (const auto& w : oracle::bounded_language(p, max_len, max_stack, max_moves))
                out.push_back(strs(w));
            return out;
        },
        py::arg("pda"), py::arg("max_len"), py::arg("max_stack"), py::arg("max_moves"));
    m.def(
        "random_pda",
        [](std::uint64_t seed, std::size_t max_states, std::size_t max_transitions, std::size_t max_pop_push,
           std::size_t gamma_size, double final_prob) {
            RandomPdaParams params;
            params.max_states = max_states;
            params.max_transitions = max_transitions;
            params.max_pop_push = max_pop_push;
            params.gamma_size = gamma_size;
            params.final_prob = final_prob;
            return random_pda(seed, params);
        },
        py::arg("seed"), py::arg("max_states") = 6, py::arg("max_transitions") = 12, py::arg("max_pop_push") = 2,
        py::arg("gamma_size") = 3, py::arg("final_prob") = 0.3);
    m.def("cfg_to_pda", [](const std::string& grammar) { return cfg_to_pda(parse_grammar(grammar)); },
          py::arg("grammar"));
    m.def("export_dot", [](const Pda& p) { return export_dot(p); }, py::arg("pda"));
    m.def(
        "nfa_dot", [](const Pda& p) { return export_dot(run_analysis(p).forward.nfa); }, py::arg("pda"));
}
