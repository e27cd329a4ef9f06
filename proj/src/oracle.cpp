#include "defarg/oracle.hpp"

#include <algorithm>

#include "defarg/error.hpp"
#include "defarg/sat.hpp"

namespace defarg {

namespace {

bool consistent_with(const TheorySet& base, const Formula& f) {
    TheorySet t = base;
    t.insert(f);
    return is_satisfiable(t);
}

TheorySet base_of(const DefaultTheory& theory, const std::vector<bool>& chosen) {
    TheorySet base = theory.facts();
    for (std::size_t i = 0; i < chosen.size(); ++i)
        if (chosen[i])
            base.insert(theory.defaults()[i].consequence);
    return base;
}

std::vector<std::string> names_of(const DefaultTheory& theory, const std::vector<bool>& chosen) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < chosen.size(); ++i)
        if (chosen[i])
            out.push_back(theory.defaults()[i].name);
    return out;
}

bool verify(const DefaultTheory& theory, const std::vector<bool>& guess) {
    const auto& ds = theory.defaults();
    const TheorySet guessed = base_of(theory, guess);
    std::vector<bool> applied(ds.size(), false);
    TheorySet current = theory.facts();
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<std::size_t> round;
        for (std::size_t i = 0; i < ds.size(); ++i) {
            if (applied[i] || !entails(current, ds[i].prerequisite))
                continue;
            bool justified = std::all_of(ds[i].justifications.begin(), ds[i].justifications.end(),
                                         [&](const Formula& j) { return consistent_with(guessed, j); });
            if (justified)
                round.push_back(i);
        }
        for (auto i : round) {
            applied[i] = true;
            current.insert(ds[i].consequence);
            changed = true;
        }
    }
    return applied == guess;
}

}  // namespace

bool is_extension(const DefaultTheory& theory, const std::vector<std::string>& generating) {
    std::vector<bool> guess(theory.defaults().size(), false);
    for (const auto& name : generating) {
        auto it = std::find_if(theory.defaults().begin(), theory.defaults().end(),
                               [&](const Default& d) { return d.name == name; });
        if (it == theory.defaults().end())
            throw LookupError("unknown default '" + name + "'");
        guess[it - theory.defaults().begin()] = true;
    }
    return verify(theory, guess);
}

std::vector<CandidateExtension> oracle_extensions(const DefaultTheory& theory, OracleOptions options) {
    const std::size_t n = theory.defaults().size();
    if (n > options.max_defaults)
        throw BoundExceeded("oracle bound exceeded: " + std::to_string(n) + " defaults > " +
                            std::to_string(options.max_defaults));
    if (!is_satisfiable(theory.facts()))
        return {CandidateExtension{{}, theory.facts(), true}};

    std::vector<CandidateExtension> found;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<bool> guess(n);
        for (std::size_t i = 0; i < n; ++i)
            guess[i] = (mask >> i) & 1;
        if (!verify(theory, guess))
            continue;
        CandidateExtension c{names_of(theory, guess), base_of(theory, guess), false};
        bool seen = std::any_of(found.begin(), found.end(),
                                [&](const CandidateExtension& e) { return equivalent(e.base, c.base); });
        if (!seen)
            found.push_back(std::move(c));
    }
    std::sort(found.begin(), found.end(), [](const CandidateExtension& a, const CandidateExtension& b) {
        return a.generating_defaults < b.generating_defaults;
    });
    return found;
}

bool oracle_credulous(const std::vector<CandidateExtension>& extensions, const Formula& hypothesis) {
    return std::any_of(extensions.begin(), extensions.end(), [&](const CandidateExtension& e) {
        return !e.inconsistent && entails(e.base, hypothesis);
    });
}

bool oracle_skeptical(const std::vector<CandidateExtension>& extensions, const Formula& hypothesis) {
    return std::all_of(extensions.begin(), extensions.end(), [&](const CandidateExtension& e) {
        return e.inconsistent || entails(e.base, hypothesis);
    });
}

}  // namespace defarg
