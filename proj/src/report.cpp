#include "defarg/report.hpp"

#include <algorithm>
#include <json.hpp>

#include "defarg/forget.hpp"

namespace defarg {

using Json = nlohmann::ordered_json;

namespace {

struct Row {
    std::vector<std::string> term;
    std::vector<std::string> generating;
    ClauseSet marginal;
};

Json clause_list(const ClauseSet& clauses) {
    Json out = Json::array();
    for (const auto& c : clauses)
        out.push_back(to_string(c));
    return out;
}

Json term_list(const Term& t) {
    Json out = Json::array();
    for (const auto& l : t)
        out.push_back(l.to_string());
    return out;
}

std::string joined(const std::vector<std::string>& xs, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? sep : "") + xs[i];
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string render_rows(const TheoryClassification& c, const std::vector<Row>& rows, bool with_marginal,
                        bool json) {
    if (json) {
        Json out;
        out["classification"] = c.to_string();
        Json exts = Json::array();
        for (const auto& r : rows) {
            Json e;
            e["defaultTerm"] = r.term;
            e["generatingDefaults"] = r.generating;
            if (with_marginal)
                e["marginal"] = clause_list(r.marginal);
            exts.push_back(std::move(e));
        }
        out["extensions"] = std::move(exts);
        return dump(out);
    }
    std::string out = "classification: " + c.to_string() + "\n";
    for (const auto& r : rows) {
        out += "extension {" + joined(r.term, ", ") + "}\n";
        out += "  generating: " + joined(r.generating, ", ") + "\n";
        if (with_marginal) {
            std::vector<std::string> cs;
            for (const auto& cl : r.marginal)
                cs.push_back(to_string(cl));
            out += "  marginal: " + (cs.empty() ? std::string("true") : joined(cs, "; ")) + "\n";
        }
    }
    return out;
}

}  // namespace

std::string render_translate(const ArgumentationSystem& system, bool json) {
    if (!json)
        return to_theory_text(system);
    Json out;
    Json xi = Json::array();
    for (const auto& f : system.theory())
        xi.push_back(f.to_string());
    out["xi"] = std::move(xi);
    Json assumptions = Json::object();
    for (const auto& a : system.registry().entries()) {
        Json entry;
        entry["p"] = a.prerequisite;
        entry["j"] = a.justifications;
        entry["c"] = a.consequence;
        assumptions[a.default_name] = std::move(entry);
    }
    out["assumptions"] = std::move(assumptions);
    return dump(out);
}

std::string render_contradictions(const ArgumentationSystem& system, bool json) {
    const auto mics = minimal_contradictions(system);
    if (json) {
        Json list = Json::array();
        for (const auto& m : mics)
            list.push_back(term_list(m));
        Json out;
        out["minimalContradictions"] = std::move(list);
        return dump(out);
    }
    std::string out;
    for (const auto& m : mics)
        out += m.to_string() + "\n";
    return out;
}

std::string render_terms(const DefaultReasoner& reasoner, bool json) {
    if (json) {
        Json list = Json::array();
        for (const auto& t : reasoner.default_terms()) {
            Json e;
            e["defaultTerm"] = t.anchor;
            e["sequence"] = t.sequence;
            list.push_back(std::move(e));
        }
        Json out;
        out["defaultTerms"] = std::move(list);
        return dump(out);
    }
    std::string out;
    for (const auto& t : reasoner.default_terms())
        out += t.term().to_string() + " <- " + (t.sequence.empty() ? "()" : joined(t.sequence, ", ")) + "\n";
    return out;
}

std::string render_extensions(const DefaultReasoner& reasoner, bool with_marginal, bool json) {
    std::vector<Row> rows;
    for (const auto& t : reasoner.default_terms()) {
        auto h = reasoner.extension_of(t.anchor);
        rows.push_back({t.anchor, h.generating_defaults, with_marginal ? h.marginal : ClauseSet{}});
    }
    return render_rows(reasoner.classify(), rows, with_marginal, json);
}

std::string render_classification(const TheoryClassification& c, bool json) {
    if (!json)
        return c.to_string() + "\n";
    Json out;
    out["classification"] = c.to_string();
    return dump(out);
}

TheoryClassification classify_oracle(const std::vector<CandidateExtension>& extensions) {
    if (extensions.size() == 1 && extensions.front().inconsistent)
        return {TheoryClass::inconsistent_facts, 0};
    if (extensions.empty())
        return {TheoryClass::no_extension, 0};
    if (extensions.size() == 1 && extensions.front().generating_defaults.empty())
        return {TheoryClass::unique_trivial, 1};
    return {TheoryClass::extensions, extensions.size()};
}

std::string render_oracle(const DefaultTheory& theory, const std::vector<CandidateExtension>& extensions,
                          bool with_marginal, bool json) {
    std::vector<Row> rows;
    const auto system = translate(theory);
    const auto source = vars(theory);
    for (const auto& e : extensions) {
        if (e.inconsistent)
            continue;
        Row r;
        for (const auto& name : e.generating_defaults)
            r.term.push_back(system.registry().of(name).consequence);
        std::sort(r.term.begin(), r.term.end());
        for (const auto& a : system.registry().entries())
            if (std::find(e.generating_defaults.begin(), e.generating_defaults.end(), a.default_name) !=
                e.generating_defaults.end())
                r.generating.push_back(a.default_name);
        if (with_marginal)
            r.marginal = forget(e.base, source);
        rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.term < b.term; });
    return render_rows(classify_oracle(extensions), rows, with_marginal, json);
}

}  // namespace defarg
