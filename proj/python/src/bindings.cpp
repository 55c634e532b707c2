#include "rekit/automaton_io.hpp"
#include "rekit/build.hpp"
#include "rekit/error.hpp"
#include "rekit/harness.hpp"
#include "rekit/oracle.hpp"
#include "rekit/reduce_nfa.hpp"
#include "rekit/regen.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace rekit;

namespace {

py::list transitionList(const Nfa &a) {
    py::list out;
    for (const Transition &t : a.transitions())
        out.append(py::make_tuple(t.from, symbolName(a.symbolOf(t.label)), t.to));
    return out;
}

py::object bigInt(const BigInt &n) { return py::int_(py::str(n.str())); }

} // namespace

PYBIND11_MODULE(_rekit, m) {
    m.doc() = "Regular expression to NFA constructions, reductions and random generation";

    auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", error.ptr());

    py::class_<Regex>(m, "Regex")
        .def_property_readonly("size", &ordinarySize)
        .def_property_readonly("alph", &Regex::alph)
        .def_property_readonly("rpn", &Regex::rpn)
        .def_property_readonly("nullable", &Regex::nullable)
        .def("__str__", &render)
        .def("__repr__", [](const Regex &r) { return "Regex('" + render(r) + "')"; })
        .def("__eq__", [](const Regex &a, const Regex &b) { return a == b; })
        .def("__hash__", &Regex::hash);

    m.def("parse", [](std::string_view text) { return parse(text); }, py::arg("text"));
    m.def("reduce", &reduce);
    m.def("is_reduced", &isReduced);
    m.def("is_snf", &isSnf);
    m.def("to_snf", &toSnf);
    m.def("measures", [](const Regex &r) {
        const Measures x = measures(r);
        py::dict d;
        d["size"] = x.size;
        d["alph"] = x.alph;
        d["rpn"] = x.rpn;
        return d;
    });

    py::class_<Nfa>(m, "Nfa")
        .def_property_readonly("num_states", &Nfa::numStates)
        .def_property_readonly("num_transitions", &Nfa::numTransitions)
        .def_property_readonly("size", &Nfa::size)
        .def_property_readonly("initials", &Nfa::initials)
        .def_property_readonly("finals", &Nfa::finals)
        .def_property_readonly("alphabet",
                               [](const Nfa &a) {
                                   std::vector<std::string> out;
                                   for (Symbol s : a.alphabet())
                                       out.push_back(symbolName(s));
                                   return out;
                               })
        .def_property_readonly("transitions", &transitionList)
        .def_property_readonly("is_deterministic", &isDeterministic)
        .def_property_readonly("is_homogeneous", &isHomogeneous)
        .def("to_json", [](const Nfa &a) { return toJson(a).dump(); })
        .def("to_dot", [](const Nfa &a) { return toDot(a); })
        .def_static("from_json", [](const std::string &text) {
            try {
                return nfaFromJson(nlohmann::json::parse(text));
            } catch (const nlohmann::json::exception &e) {
                throw Error(std::string("invalid JSON: ") + e.what());
            }
        })
        .def("__eq__", [](const Nfa &a, const Nfa &b) { return a == b; });

    m.def("position_automaton", &positionAutomaton);
    m.def("position_automaton_snf", &positionAutomatonSnf);
    m.def("follow_automaton", &followAutomaton);
    m.def("pd_automaton", &pdAutomaton);
    m.def("reverse", &reverse);
    m.def("r_equiv", &rEquiv);
    m.def("l_equiv", &lEquiv);
    m.def("lr_equiv", &lrEquiv);
    m.def("autobisimulation", [](const Nfa &a) { return autobisimulation(a).blocks(); });
    m.def("isomorphic", &isomorphic);
    m.def("minimal_dfa", [](const Nfa &a) { return minimize(determinize(a)).toNfa(); },
          "Minimal trimmed DFA of the automaton, as an Nfa");

    m.def("language", [](const Regex &r, std::size_t maxLen) { return enumerateRe(r, maxLen).renderedWords(); },
          py::arg("re"), py::arg("max_len"));
    m.def("language", [](const Nfa &a, std::size_t maxLen) { return enumerateNfa(a, maxLen).renderedWords(); },
          py::arg("nfa"), py::arg("max_len"));

    m.def("count_words", [](std::size_t k, std::size_t n) { return bigInt(countWords(reGrammar(k), n)); },
          py::arg("k"), py::arg("n"), "Number of regular expressions of size n over k letters");
    m.def("count_words_grammar",
          [](const std::string &grammar, std::size_t k, std::size_t n) {
              return bigInt(countWords(parseGrammar(grammar, k), n));
          },
          py::arg("grammar"), py::arg("k"), py::arg("n"));
    m.def("generate",
          [](std::size_t k, std::size_t size, std::size_t count, std::uint64_t seed) {
              std::vector<std::string> out;
              for (const SampleRecord &r : emitDataset(k, size, count, seed))
                  out.push_back(r.text);
              return out;
          },
          py::arg("k"), py::arg("size"), py::arg("count"), py::arg("seed") = 0);
    m.def("grammar_text", [] { return std::string(reGrammarText()); });

    m.def("run_experiment",
          [](std::vector<std::size_t> sizes, std::size_t k, std::size_t samples, std::uint64_t seed,
             std::size_t oracleLength, double oracleFraction, unsigned threads) {
              ExperimentConfig cfg{std::move(sizes), k, samples, seed, oracleLength, oracleFraction, threads};
              ExperimentResult result;
              {
                  py::gil_scoped_release release;
                  result = runExperiment(cfg);
              }
              std::ostringstream out;
              writeStatsCsv(out, result.stats);
              return out.str();
          },
          py::arg("sizes"), py::arg("k"), py::arg("samples"), py::arg("seed") = 0, py::arg("oracle_len") = 6,
          py::arg("oracle_fraction") = 0.05, py::arg("threads") = 0, "Statistics CSV for the given sample sizes");
}
