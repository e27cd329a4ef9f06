#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "defarg/error.hpp"
#include "defarg/forget.hpp"
#include "defarg/oracle.hpp"
#include "defarg/reasoner.hpp"
#include "defarg/report.hpp"
#include "defarg/selftest.hpp"

namespace py = pybind11;
using namespace defarg;

namespace {

std::vector<std::string> literals(const Term& t) {
    std::vector<std::string> out;
    for (const auto& l : t)
        out.push_back(l.to_string());
    return out;
}

std::vector<std::vector<std::string>> term_lists(const std::vector<Term>& terms) {
    std::vector<std::vector<std::string>> out;
    for (const auto& t : terms)
        out.push_back(literals(t));
    return out;
}

std::vector<std::string> clause_strings(const ClauseSet& clauses) {
    std::vector<std::string> out;
    for (const auto& c : clauses)
        out.push_back(to_string(c));
    return out;
}

std::vector<std::string> formula_strings(const TheorySet& t) {
    std::vector<std::string> out;
    for (const auto& f : t)
        out.push_back(f.to_string());
    return out;
}

TheorySet theory_from(const std::vector<std::string>& formulas) {
    TheorySet t;
    for (const auto& f : formulas)
        t.insert(parse_formula(f));
    return t;
}

std::optional<InconsistencyBackend> backend_from(const std::optional<std::string>& name) {
    if (!name)
        return std::nullopt;
    if (*name == "sat")
        return InconsistencyBackend::satisfiability;
    if (*name == "contradictions")
        return InconsistencyBackend::minimal_contradictions;
    throw py::value_error("backend must be 'sat' or 'contradictions'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Default logic reasoning through propositional argumentation";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    auto with = [&](PyObject* builtin) {
        return py::make_tuple(error, py::reinterpret_borrow<py::object>(builtin));
    };
    py::register_exception<ParseError>(m, "ParseError", with(PyExc_ValueError));
    py::register_exception<TheoryError>(m, "TheoryError", with(PyExc_ValueError));
    py::register_exception<LookupError>(m, "LookupError", with(PyExc_LookupError));
    py::register_exception<QueryError>(m, "QueryError", with(PyExc_ValueError));
    py::register_exception<InvariantViolation>(m, "InvariantViolation", error);
    py::register_exception<BoundExceeded>(m, "BoundExceeded", error);

    py::class_<Formula>(m, "Formula")
        .def("__str__", &Formula::to_string)
        .def("__repr__", [](const Formula& f) { return "Formula('" + f.to_string() + "')"; })
        .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
        .def("__hash__", &Formula::hash)
        .def_property_readonly("vocabulary", &Formula::vocabulary);
    m.def("parse_formula", [](const std::string& s) { return parse_formula(s); });

    py::class_<DefaultTheory>(m, "DefaultTheory")
        .def_property_readonly("facts", [](const DefaultTheory& t) { return formula_strings(t.facts()); })
        .def_property_readonly("default_names",
                               [](const DefaultTheory& t) {
                                   std::vector<std::string> out;
                                   for (const auto& d : t.defaults())
                                       out.push_back(d.name);
                                   return out;
                               })
        .def("__str__", [](const DefaultTheory& t) { return to_string(t); });
    m.def("parse_theory", [](const std::string& s) { return parse_theory(s); });

    py::class_<ArgumentationSystem>(m, "ArgumentationSystem")
        .def(py::init([](const std::vector<std::string>& formulas, std::vector<std::string> assumptions) {
                 return ArgumentationSystem(theory_from(formulas), std::move(assumptions));
             }),
             py::arg("theory"), py::arg("assumptions"))
        .def_property_readonly("theory", [](const ArgumentationSystem& s) { return formula_strings(s.theory()); })
        .def_property_readonly("assumptions", &ArgumentationSystem::assumptions)
        .def_property_readonly("source_vars", &ArgumentationSystem::source_vars)
        .def("__str__", [](const ArgumentationSystem& s) { return to_theory_text(s); });
    m.def("translate", &translate);

    m.def("minimal_contradictions",
          [](const ArgumentationSystem& s) { return term_lists(minimal_contradictions(s)); });
    m.def("supporting_arguments", [](const ArgumentationSystem& s, const std::string& hypothesis) {
        return term_lists(supporting_arguments(s, parse_formula(hypothesis)));
    });
    m.def("forget", [](const std::vector<std::string>& formulas, const Vocabulary& keep) {
        return clause_strings(forget(theory_from(formulas), keep));
    });

    py::class_<DefaultReasoner>(m, "Reasoner")
        .def(py::init([](const ArgumentationSystem& system, std::optional<std::string> backend, bool trace_routes) {
                 ReasonerOptions options;
                 options.backend = backend_from(backend);
                 options.trace_routes = trace_routes;
                 return std::make_unique<DefaultReasoner>(system, options);
             }),
             py::arg("system"), py::arg("backend") = py::none(), py::arg("trace_routes") = false)
        .def_property_readonly("backend",
                               [](const DefaultReasoner& r) {
                                   return r.backend() == InconsistencyBackend::satisfiability ? "sat"
                                                                                             : "contradictions";
                               })
        .def("default_terms",
             [](const DefaultReasoner& r) {
                 std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> out;
                 for (const auto& t : r.default_terms())
                     out.emplace_back(t.anchor, t.sequence);
                 return out;
             })
        .def("classify", [](const DefaultReasoner& r) { return r.classify().to_string(); })
        .def("extension",
             [](const DefaultReasoner& r, const std::vector<std::string>& anchor) {
                 auto h = r.extension_of(anchor);
                 py::dict d;
                 d["default_term"] = h.default_term.anchor;
                 d["generating_defaults"] = h.generating_defaults;
                 d["marginal"] = clause_strings(h.marginal);
                 return d;
             })
        .def("in_extension",
             [](const DefaultReasoner& r, const std::vector<std::string>& anchor, const std::string& f) {
                 return r.in_extension(anchor, parse_formula(f));
             })
        .def("credulous", [](const DefaultReasoner& r, const std::string& f) { return r.credulous(parse_formula(f)); })
        .def("skeptical", [](const DefaultReasoner& r, const std::string& f) { return r.skeptical(parse_formula(f)); })
        .def("routes", &DefaultReasoner::routes)
        .def("report", [](const DefaultReasoner& r, bool marginal, bool json) {
            return render_extensions(r, marginal, json);
        }, py::arg("marginal") = true, py::arg("json") = true);

    m.def(
        "oracle_extensions",
        [](const DefaultTheory& t, std::size_t max_defaults) {
            std::vector<py::dict> out;
            for (const auto& e : oracle_extensions(t, {max_defaults})) {
                py::dict d;
                d["generating_defaults"] = e.generating_defaults;
                d["base"] = formula_strings(e.base);
                d["inconsistent"] = e.inconsistent;
                out.push_back(std::move(d));
            }
            return out;
        },
        py::arg("theory"), py::arg("max_defaults") = OracleOptions{}.max_defaults);
    m.def(
        "oracle_report",
        [](const DefaultTheory& t, bool marginal, bool json, std::size_t max_defaults) {
            return render_oracle(t, oracle_extensions(t, {max_defaults}), marginal, json);
        },
        py::arg("theory"), py::arg("marginal") = true, py::arg("json") = true,
        py::arg("max_defaults") = OracleOptions{}.max_defaults);

    m.def("golden_suite", [] {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& c : golden_suite())
            out.emplace_back(c.name, c.passed, c.detail);
        return out;
    });
    m.def(
        "oracle_equivalence",
        [](std::uint64_t seed, std::size_t theories, std::size_t probes) {
            EquivalenceOptions options;
            options.seed = seed;
            options.theories = theories;
            options.probes = probes;
            EquivalenceReport r;
            {
                py::gil_scoped_release release;
                r = oracle_equivalence(options);
            }
            py::dict d;
            d["theories"] = r.theories;
            d["extensions"] = r.extensions;
            d["queries"] = r.queries;
            d["disagreements"] = r.disagreements;
            d["shared_anchors"] = r.shared_anchors;
            d["permutation_violations"] = r.permutation_violations;
            d["failures"] = r.failures;
            return d;
        },
        py::arg("seed") = 1, py::arg("theories") = 300, py::arg("probes") = 10);
}
