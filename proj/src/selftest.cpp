#include "defarg/selftest.hpp"

#include <algorithm>
#include <functional>

#include "defarg/fixtures.hpp"
#include "defarg/oracle.hpp"
#include "defarg/reasoner.hpp"
#include "defarg/report.hpp"
#include "defarg/error.hpp"
#include "defarg/sat.hpp"

namespace defarg {

namespace {

TheorySet theory_of(std::initializer_list<const char*> formulas) {
    TheorySet t;
    for (const char* f : formulas)
        t.insert(parse_formula(f));
    return t;
}

std::vector<std::string> term_strings(const std::vector<Term>& terms) {
    std::vector<std::string> out;
    for (const auto& t : terms)
        out.push_back(t.to_string());
    return out;
}

std::vector<std::vector<std::string>> anchors(const DefaultReasoner& r) {
    std::vector<std::vector<std::string>> out;
    for (const auto& t : r.default_terms())
        out.push_back(t.anchor);
    return out;
}

bool marginal_is(const DefaultReasoner& r, const std::vector<std::string>& anchor, const TheorySet& expected) {
    return equivalent(to_theory(r.extension_of(anchor).marginal), expected);
}

void run(std::vector<CheckResult>& out, const std::string& name, const std::function<std::string()>& body) {
    try {
        std::string problem = body();
        out.push_back({name, problem.empty(), problem});
    } catch (const std::exception& e) {
        out.push_back({name, false, std::string("exception: ") + e.what()});
    }
}

}  // namespace

std::vector<CheckResult> golden_suite() {
    std::vector<CheckResult> out;

    run(out, "two-extensions", [] {
        DefaultReasoner r(translate(load_fixture("two-extensions")));
        if (r.classify().to_string() != "extensions(2)")
            return "classification " + r.classify().to_string();
        const auto dt = anchors(r);
        std::vector<std::vector<std::string>> want = {{"@d1.c", "@d3.c"}, {"@d2.c"}};
        if (dt != want)
            return std::string("unexpected default terms");
        if (!marginal_is(r, want[0], theory_of({"b -> !a & !c", "a", "c"})) ||
            !marginal_is(r, want[1], theory_of({"b -> !a & !c", "b"})))
            return std::string("extension marginals differ");
        return std::string();
    });

    run(out, "self-defeating", [] {
        auto c = classify(translate(load_fixture("self-defeating")));
        return c.kind == TheoryClass::no_extension ? std::string() : "classification " + c.to_string();
    });

    run(out, "blocked", [] {
        DefaultReasoner r(translate(load_fixture("blocked")));
        if (r.classify().kind != TheoryClass::unique_trivial)
            return "classification " + r.classify().to_string();
        return marginal_is(r, {}, theory_of({"p", "q"})) ? std::string() : std::string("extension differs");
    });

    run(out, "translate", [] {
        auto system = translate(load_fixture("disjunctive"));
        std::vector<std::string> xi;
        for (const auto& f : system.theory())
            xi.push_back(f.to_string());
        std::vector<std::string> want_xi = {"e | o",         "@d1.p -> !e", "@d1.j1 -> r", "@d1.c -> r",
                                            "@d2.p -> !o",   "@d2.j1 -> r", "@d2.c -> r"};
        std::vector<std::string> want_a = {"@d1.p", "@d2.p", "@d1.j1", "@d2.j1", "@d1.c", "@d2.c"};
        if (xi != want_xi)
            return std::string("theory differs");
        return system.assumptions() == want_a ? std::string() : std::string("assumptions differ");
    });

    run(out, "contradictions-and-support", [] {
        ArgumentationSystem nogoods(theory_of({"a1 -> p", "a2 -> q", "!p", "!q"}), {"a1", "a2"});
        if (term_strings(minimal_contradictions(nogoods)) != std::vector<std::string>{"{a1}", "{a2}"})
            return std::string("minimal contradictions differ");
        ArgumentationSystem exclusive(theory_of({"a1 -> p", "a2 -> q", "p -> !q"}), {"a1", "a2"});
        if (term_strings(supporting_arguments(exclusive, parse_formula("p"))) !=
            std::vector<std::string>{"{a1, !a2}"})
            return std::string("supporting arguments for p differ");
        if (term_strings(supporting_arguments(exclusive, parse_formula("q"))) !=
            std::vector<std::string>{"{!a1, a2}"})
            return std::string("supporting arguments for q differ");
        return std::string();
    });

    run(out, "chain", [] {
        DefaultReasoner r(translate(load_fixture("chain")));
        std::vector<std::string> want = {"{@d1.c, @d2.j1}", "{@d1.p}", "{@d2.c, @d3.j1}", "{@d2.p}", "{@d3.p}"};
        if (term_strings(minimal_contradictions(r.system())) != want)
            return std::string("minimal contradictions differ");
        if (anchors(r) != std::vector<std::vector<std::string>>{{"@d1.c", "@d3.c"}})
            return std::string("unexpected default terms");
        return marginal_is(r, {"@d1.c", "@d3.c"}, theory_of({"!d", "!f"})) ? std::string()
                                                                           : std::string("extension differs");
    });

    run(out, "bd", [] {
        DefaultReasoner r(translate(load_fixture("bd")));
        if (anchors(r) != std::vector<std::vector<std::string>>{{"@d1.c"}, {"@d2.c"}})
            return std::string("unexpected default terms");
        auto f = [](const char* s) { return parse_formula(s); };
        if (!r.credulous(f("b")) || !r.credulous(f("c")))
            return std::string("b, c not credulous");
        if (!r.skeptical(f("b | c")) || !r.skeptical(f("d")))
            return std::string("b | c, d not skeptical");
        return r.skeptical(f("b")) ? std::string("b skeptical") : std::string();
    });

    run(out, "inconsistent-facts", [] {
        auto system = translate(load_fixture("inconsistent-facts"));
        auto mics = minimal_contradictions(system);
        if (mics.size() != 1 || !mics.front().empty())
            return std::string("minimal contradictions differ");
        auto c = classify(system);
        return c.kind == TheoryClass::inconsistent_facts ? std::string() : "classification " + c.to_string();
    });

    run(out, "unique-trivial", [] {
        DefaultReasoner r(translate(load_fixture("unique-trivial")));
        if (!minimal_contradictions(r.system()).empty())
            return std::string("unexpected contradictions");
        if (r.classify().kind != TheoryClass::unique_trivial)
            return "classification " + r.classify().to_string();
        return marginal_is(r, {}, theory_of({"e | o"})) ? std::string() : std::string("extension differs");
    });

    return out;
}

namespace {

struct TheoryRun {
    EquivalenceReport& report;
    const DefaultTheory& theory;

    void fail(const std::string& what) {
        ++report.disagreements;
        if (report.failures.size() < 20)
            report.failures.push_back(what + "\n" + to_string(theory));
    }
};

}  // namespace

EquivalenceReport oracle_equivalence(const EquivalenceOptions& options) {
    EquivalenceReport report;
    Generator gen(options.seed);
    for (std::size_t n = 0; n < options.theories; ++n) {
        const DefaultTheory theory = random_theory(gen, options.shape);
        TheoryRun run{report, theory};
        ++report.theories;

        const auto system = translate(theory);
        ReasonerOptions ro;
        ro.trace_routes = true;
        DefaultReasoner reasoner(system, ro);
        const auto oracle = oracle_extensions(theory);

        if (reasoner.classify().to_string() != classify_oracle(oracle).to_string())
            run.fail("classification " + reasoner.classify().to_string() + " vs oracle " +
                     classify_oracle(oracle).to_string());

        std::vector<TheorySet> bases;
        for (const auto& e : oracle)
            if (!e.inconsistent)
                bases.push_back(e.base);
        std::vector<bool> matched(bases.size(), false);
        for (const auto& t : reasoner.default_terms()) {
            ++report.extensions;
            const TheorySet marginal = to_theory(reasoner.extension_of(t.anchor).marginal);
            std::size_t hits = 0;
            for (std::size_t i = 0; i < bases.size(); ++i)
                if (equivalent(marginal, bases[i])) {
                    ++hits;
                    matched[i] = true;
                }
            if (hits != 1)
                run.fail("extension " + t.term().to_string() + " matches " + std::to_string(hits) +
                         " oracle extensions");
        }
        if (reasoner.default_terms().size() != bases.size() ||
            std::find(matched.begin(), matched.end(), false) != matched.end())
            run.fail("extension sets differ in size or coverage");

        if (options.compare_backends) {
            ReasonerOptions other;
            other.backend = reasoner.backend() == InconsistencyBackend::satisfiability
                                ? InconsistencyBackend::minimal_contradictions
                                : InconsistencyBackend::satisfiability;
            DefaultReasoner alt(system, other);
            if (anchors(alt) != anchors(reasoner))
                run.fail("inconsistency backends disagree");
        }

        std::vector<std::string> vocab(system.source_vars().begin(), system.source_vars().end());
        if (vocab.empty())
            vocab.push_back("p0");
        for (std::size_t q = 0; q < options.probes; ++q) {
            const Formula probe = gen.formula(vocab, 2);
            ++report.queries;
            try {
                if (reasoner.credulous(probe) != oracle_credulous(oracle, probe))
                    run.fail("credulous answer differs for " + probe.to_string());
                if (reasoner.skeptical(probe) != oracle_skeptical(oracle, probe))
                    run.fail("skeptical answer differs for " + probe.to_string());
            } catch (const InvariantViolation& e) {
                run.fail(e.what());
            }
        }

        for (const auto& [anchor, sequences] : reasoner.routes()) {
            if (sequences.size() < 2)
                continue;
            ++report.shared_anchors;
            auto sorted = [](std::vector<std::string> s) {
                std::sort(s.begin(), s.end());
                return s;
            };
            const auto first = sorted(sequences.front());
            for (const auto& s : sequences)
                if (sorted(s) != first) {
                    ++report.permutation_violations;
                    if (report.failures.size() < 20)
                        report.failures.push_back("routes to " + Term::positive(anchor).to_string() +
                                                  " use different defaults\n" + to_string(theory));
                    break;
                }
        }
    }
    return report;
}

}  // namespace defarg
