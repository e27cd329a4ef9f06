#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "defarg/error.hpp"
#include "defarg/oracle.hpp"
#include "defarg/reasoner.hpp"
#include "defarg/report.hpp"
#include "defarg/selftest.hpp"

using namespace defarg;

namespace {

constexpr int exit_usage = 1;
constexpr int exit_invariant = 2;
constexpr int exit_no = 10;

DefaultTheory load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot read '" + path + "'");
    std::stringstream text;
    text << in.rdbuf();
    try {
        return parse_theory(text.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), e.line(), e.column());
    }
}

int query(const std::string& path, const std::string& mode, const std::string& text, bool json) {
    DefaultReasoner reasoner(translate(load(path)));
    const Formula hypothesis = parse_formula(text);
    const bool holds = mode == "credulous" ? reasoner.credulous(hypothesis) : reasoner.skeptical(hypothesis);
    const auto c = reasoner.classify();
    const bool none = reasoner.default_terms().empty();
    if (json) {
        nlohmann::ordered_json out;
        out["classification"] = c.to_string();
        out["mode"] = mode;
        out["formula"] = hypothesis.to_string();
        out["warnings"] = none ? nlohmann::ordered_json::array({"no extensions"}) : nlohmann::ordered_json::array();
        out["holds"] = holds;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << c.to_string() << "\n";
        if (none)
            std::cout << "warning: no extensions\n";
        std::cout << (holds ? "yes" : "no") << "\n";
    }
    return holds ? 0 : exit_no;
}

int selftest(std::uint64_t seed, std::size_t theories, bool json) {
    const auto golden = golden_suite();
    EquivalenceOptions options;
    options.seed = seed;
    options.theories = theories;
    const auto report = oracle_equivalence(options);
    bool ok = report.ok();
    for (const auto& c : golden)
        ok = ok && c.passed;

    if (json) {
        nlohmann::ordered_json out;
        auto checks = nlohmann::ordered_json::array();
        for (const auto& c : golden)
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        out["golden"] = std::move(checks);
        out["random"] = {{"seed", seed},
                         {"theories", report.theories},
                         {"extensions", report.extensions},
                         {"queries", report.queries},
                         {"disagreements", report.disagreements},
                         {"sharedAnchors", report.shared_anchors},
                         {"permutationViolations", report.permutation_violations},
                         {"failures", report.failures}};
        out["passed"] = ok;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& c : golden)
            std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail)
                      << "\n";
        std::cout << (report.ok() ? "PASS " : "FAIL ") << "oracle-equivalence seed=" << seed
                  << " theories=" << report.theories << " extensions=" << report.extensions
                  << " queries=" << report.queries << " disagreements=" << report.disagreements
                  << " permutation-violations=" << report.permutation_violations << "\n";
        for (const auto& f : report.failures)
            std::cout << f << "\n";
    }
    return ok ? 0 : exit_invariant;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Default logic via propositional argumentation"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "JSON output");

    std::string path;
    auto with_file = [&](CLI::App* sub) {
        sub->add_option("theory", path, "Theory file")->required();
        return sub;
    };

    auto* translate_cmd = with_file(app.add_subcommand("translate", "Print the argumentation system"));
    auto* mics_cmd = with_file(app.add_subcommand("mics", "Print the minimal contradictions"));
    auto* terms_cmd = with_file(app.add_subcommand("terms", "Print default terms with generating sequences"));

    bool marginal = false;
    auto* ext_cmd = with_file(app.add_subcommand("extensions", "Classification and extensions"));
    ext_cmd->add_flag("--marginal", marginal, "Include extension marginals");

    std::string mode, formula;
    auto* query_cmd = with_file(app.add_subcommand("query", "Credulous or skeptical consequence"));
    query_cmd->add_option("--mode", mode, "credulous or skeptical")
        ->required()
        ->check(CLI::IsMember({"credulous", "skeptical"}));
    query_cmd->add_option("formula", formula, "Formula over the theory's propositions")->required();

    auto* check_cmd = with_file(app.add_subcommand("check", "Classification only"));

    std::size_t max_defaults = OracleOptions{}.max_defaults;
    auto* oracle_cmd = with_file(app.add_subcommand("oracle", "Brute-force extensions"));
    oracle_cmd->add_option("--max-defaults", max_defaults, "Enumeration bound");
    oracle_cmd->add_flag("--marginal", marginal, "Include extension bases");

    std::uint64_t seed = 1;
    std::size_t theories = EquivalenceOptions{}.theories;
    auto* self_cmd = app.add_subcommand("selftest", "Worked examples and randomized oracle comparison");
    self_cmd->add_option("--seed", seed, "Generator seed");
    self_cmd->add_option("--theories", theories, "Number of random theories");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : exit_usage;
    }

    try {
        if (*translate_cmd)
            std::cout << render_translate(translate(load(path)), json);
        else if (*mics_cmd)
            std::cout << render_contradictions(translate(load(path)), json);
        else if (*terms_cmd)
            std::cout << render_terms(DefaultReasoner(translate(load(path))), json);
        else if (*ext_cmd)
            std::cout << render_extensions(DefaultReasoner(translate(load(path))), marginal, json);
        else if (*query_cmd)
            return query(path, mode, formula, json);
        else if (*check_cmd)
            std::cout << render_classification(DefaultReasoner(translate(load(path))).classify(), json);
        else if (*oracle_cmd) {
            const auto theory = load(path);
            std::cout << render_oracle(theory, oracle_extensions(theory, {max_defaults}), marginal, json);
        } else if (*self_cmd)
            return selftest(seed, theories, json);
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return exit_invariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return 0;
}
