// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "brute.hpp"
#include "defarg/argumentation.hpp"
#include "defarg/forget.hpp"
#include "defarg/random.hpp"
#include "defarg/selftest.hpp"
#include "defarg/transform.hpp"

using namespace defarg;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool passed;
    std::string summary;
};

int failures = 0;

void report(int number, const std::function<Outcome()>& criterion) {
    Outcome o;
    try {
        o = criterion();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << number << ": " << o.summary << std::endl;
}

// Shared with criterion 6.
EquivalenceReport equivalence;

Outcome golden() {
    auto start = Clock::now();
    auto checks = golden_suite();
    double elapsed = seconds_since(start);
    std::size_t passed = std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
    std::ostringstream s;
    s << "worked examples " << passed << "/" << checks.size() << " in " << elapsed << " s";
    for (const auto& c : checks)
        if (!c.passed)
            s << "; " << c.name << ": " << c.detail;
    return {passed == checks.size() && elapsed < 1.0, s.str()};
}

Outcome oracle() {
    EquivalenceOptions options;
    options.seed = 20240601;
    options.theories = 300;
    options.probes = 10;
    auto start = Clock::now();
    equivalence = oracle_equivalence(options);
    double elapsed = seconds_since(start);
    std::ostringstream s;
    s << equivalence.theories << " theories, " << equivalence.extensions << " extensions, " << equivalence.queries
      << " probes, " << equivalence.disagreements << " disagreements in " << elapsed << " s";
    for (const auto& f : equivalence.failures)
        s << "\n  " << f;
    return {equivalence.disagreements == 0 && equivalence.theories == 300 && elapsed < 60.0, s.str()};
}

DefaultTheory scaled_theory(std::size_t n) {
    std::vector<Default> defaults;
    TheorySet facts{parse_formula("x0 | y0")};
    for (std::size_t i = 0; i < n; ++i) {
        auto x = Formula::atom("x" + std::to_string(i));
        auto y = Formula::atom("y" + std::to_string(i));
        auto z = Formula::atom("x" + std::to_string(i + 1));
        defaults.push_back({"d" + std::to_string(i + 1), x & y, {!y | z}, z});
    }
    return DefaultTheory(std::move(facts), std::move(defaults));
}

Outcome linearity() {
    Generator gen(7);
    std::size_t size_mismatches = 0;
    for (int i = 0; i < 100; ++i) {
        auto theory = random_theory(gen);
        std::size_t expected = 0;
        for (const auto& d : theory.defaults())
            expected += d.justifications.size() + 2;
        auto system = translate(theory);
        size_mismatches += system.theory().size() - theory.facts().size() != expected;
    }

    const std::vector<std::size_t> sizes = {10, 100, 250, 500, 750, 1000};
    // Rounds cycle through the sizes so drift affects every size alike;
    // within a round each size runs a warm block of trials.
    std::vector<DefaultTheory> theories;
    for (auto n : sizes)
        theories.push_back(scaled_theory(n));
    std::vector<double> times(sizes.size(), 1e9);
    for (int round = 0; round < 5; ++round)
        for (std::size_t i = 0; i < sizes.size(); ++i)
            for (int trial = 0; trial < 10; ++trial) {
                auto start = Clock::now();
                auto system = translate(theories[i]);
                times[i] = std::min(times[i], seconds_since(start));
            }
    // Least-squares line on relative error (weights 1/t^2), so the small
    // sizes are not swamped by absolute noise at the large ones.
    double sw = 0, mx = 0, my = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        double w = 1.0 / (times[i] * times[i]);
        sw += w;
        mx += w * sizes[i];
        my += w * times[i];
    }
    mx /= sw;
    my /= sw;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        double w = 1.0 / (times[i] * times[i]);
        sxy += w * (sizes[i] - mx) * (times[i] - my);
        sxx += w * (sizes[i] - mx) * (sizes[i] - mx);
    }
    double slope = sxy / sxx, intercept = my - slope * mx;

    bool monotone = std::is_sorted(times.begin(), times.end());
    bool near_fit = true;
    std::ostringstream s;
    s << "size mismatches " << size_mismatches << "/100; times(us)";
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        double fit = intercept + slope * sizes[i];
        double ratio = fit > 0 ? times[i] / fit : 1e9;
        near_fit = near_fit && ratio <= 2.0 && ratio >= 0.5;
        s << " " << sizes[i] << ":" << static_cast<long>(times[i] * 1e6) << "(x" << ratio << ")";
    }
    s << (monotone ? " monotone" : " NOT monotone") << (near_fit ? ", within 2x of linear fit" : ", off the fit");
    return {size_mismatches == 0 && monotone && near_fit, s.str()};
}

Outcome duality() {
    Generator gen(13);
    std::size_t systems = 0, checks = 0, disagreements = 0;
    auto check_system = [&](const ArgumentationSystem& system) {
        ++systems;
        const auto terms = brute::all_terms(system.assumptions());
        brute::System b(system);
        std::vector<bool> bad(terms.size());
        for (std::size_t i = 0; i < terms.size(); ++i)
            bad[i] = b.inconsistent(terms[i]);
        const auto mics = minimal_contradictions(system);
        for (const auto& t : terms) {
            bool exhaustive = true;
            for (std::size_t i = 0; i < terms.size() && exhaustive; ++i)
                if (bad[i] && t.is_subset_of(terms[i]))
                    exhaustive = false;
            checks += 2;
            disagreements += is_safe_term(mics, t) != exhaustive;
        }
    };
    for (std::size_t a = 1; a <= 6; ++a)
        for (int i = 0; i < 40; ++i)
            check_system(random_system(gen, a, gen.below(4), gen.below(10)));
    TheoryShape shape;
    shape.max_defaults = 2;
    shape.max_justifications = 1;
    for (int i = 0; i < 60; ++i)
        check_system(translate(random_theory(gen, shape)));
    std::ostringstream s;
    s << systems << " systems, " << checks << " checks, " << disagreements << " disagreements";
    return {disagreements == 0, s.str()};
}

Outcome marginalization() {
    Generator gen(19);
    std::size_t mismatches = 0;
    for (int i = 0; i < 100; ++i) {
        auto vars = Generator::names(1 + gen.below(6));
        TheorySet t = to_theory(gen.clauses(vars, 14, 3));
        t.insert(gen.formula(vars, 3));
        Vocabulary keep;
        for (const auto& v : vars)
            if (gen.coin())
                keep.insert(v);
        std::vector<std::string> kept(keep.begin(), keep.end());
        TheorySet marginal = to_theory(forget(t, keep));
        mismatches += brute::projected_models(marginal, vars, kept) != brute::projected_models(t, vars, kept);
    }
    std::ostringstream s;
    s << "100 theories, " << mismatches << " model-set mismatches";
    return {mismatches == 0, s.str()};
}

Outcome permutation() {
    std::ostringstream s;
    s << equivalence.shared_anchors << " anchors reached by several routes, " << equivalence.permutation_violations
      << " with differing default sets";
    return {equivalence.theories > 0 && equivalence.permutation_violations == 0, s.str()};
}

}  // namespace

int main() {
    report(1, golden);
    report(2, oracle);
    report(3, linearity);
    report(4, duality);
    report(5, marginalization);
    report(6, permutation);
    return failures;
}
