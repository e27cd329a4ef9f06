#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "defarg/formula.hpp"

namespace defarg {

/// pre : jus_1, ..., jus_k / con, with k >= 1.
struct Default {
    std::string name;
    Formula prerequisite;
    std::vector<Formula> justifications;
    Formula consequence;

    friend bool operator==(const Default&, const Default&) = default;
};

enum class Selector { pre, jus, con };

/// Facts plus an ordered list of named defaults.
class DefaultTheory {
public:
    DefaultTheory() = default;

    /// Throws TheoryError on duplicate or malformed default names, empty
    /// justification lists, or assumption-namespace propositions.
    DefaultTheory(TheorySet facts, std::vector<Default> defaults);

    const TheorySet& facts() const { return facts_; }
    const std::vector<Default>& defaults() const { return defaults_; }

    /// nullptr when absent.
    const Default* find(std::string_view name) const;

private:
    TheorySet facts_;
    std::vector<Default> defaults_;
};

/// Grammar:
///   file := stmt*
///   stmt := "fact" formula "." | "default" NAME "=" formula ":" formula ("," formula)* "/" formula "."
/// with `#` comments to end of line.
DefaultTheory parse_theory(std::string_view text);

/// Canonical text form; parses back to an identical theory.
std::string to_string(const DefaultTheory& theory);

/// Union of one selector over a subset of defaults, duplicate-free.
TheorySet select(std::span<const Default> defaults, Selector which);

/// Selector over the defaults of `theory` named in `names`. Throws
/// LookupError for unknown names.
TheorySet select(const DefaultTheory& theory, std::span<const std::string> names, Selector which);

/// Every proposition occurring in the facts or in any default.
Vocabulary vars(const DefaultTheory& theory);

}  // namespace defarg
