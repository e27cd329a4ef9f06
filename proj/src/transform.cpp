#include "defarg/transform.hpp"

#include <algorithm>

#include "defarg/error.hpp"

namespace defarg {

void AssumptionRegistry::add(const std::string& default_name, std::size_t justification_count) {
    DefaultAssumption a;
    a.default_name = default_name;
    const std::string base = std::string(1, assumption_marker) + default_name + ".";
    a.prerequisite = base + "p";
    for (std::size_t i = 1; i <= justification_count; ++i)
        a.justifications.push_back(base + "j" + std::to_string(i));
    a.consequence = base + "c";

    refs_.emplace(a.prerequisite, AssumptionRef{default_name, AssumptionKind::prerequisite, 0});
    a_p_.push_back(a.prerequisite);
    for (std::size_t i = 0; i < a.justifications.size(); ++i) {
        refs_.emplace(a.justifications[i], AssumptionRef{default_name, AssumptionKind::justification, i + 1});
        a_j_.push_back(a.justifications[i]);
    }
    refs_.emplace(a.consequence, AssumptionRef{default_name, AssumptionKind::consequence, 0});
    a_c_.push_back(a.consequence);

    by_default_.emplace(default_name, entries_.size());
    entries_.push_back(std::move(a));
}

const DefaultAssumption& AssumptionRegistry::of(std::string_view default_name) const {
    auto it = by_default_.find(std::string(default_name));
    if (it == by_default_.end())
        throw LookupError("unknown default '" + std::string(default_name) + "'");
    return entries_[it->second];
}

std::optional<AssumptionRef> AssumptionRegistry::lookup(std::string_view assumption) const {
    auto it = refs_.find(std::string(assumption));
    if (it == refs_.end())
        return std::nullopt;
    return it->second;
}

std::string assumption_of(const AssumptionRegistry& registry, std::string_view default_name,
                          AssumptionKind kind, std::optional<std::size_t> index) {
    const auto& a = registry.of(default_name);
    if (kind != AssumptionKind::justification) {
        if (index)
            throw LookupError("justification index given for a non-justificational assumption");
        return kind == AssumptionKind::prerequisite ? a.prerequisite : a.consequence;
    }
    if (!index || *index < 1 || *index > a.justifications.size())
        throw LookupError("justification index out of range for default '" + std::string(default_name) +
                          "' (has " + std::to_string(a.justifications.size()) + ")");
    return a.justifications[*index - 1];
}

ArgumentationSystem::ArgumentationSystem(TheorySet theory, std::vector<std::string> assumptions)
    : theory_(std::move(theory)), assumptions_(std::move(assumptions)) {
    for (const auto& name : theory_.vocabulary())
        if (std::find(assumptions_.begin(), assumptions_.end(), name) == assumptions_.end())
            source_vars_.insert(name);
    fact_count_ = theory_.size();
    compile();
}

ArgumentationSystem::ArgumentationSystem(TheorySet theory, AssumptionRegistry registry, Vocabulary source_vars,
                                         std::size_t fact_count)
    : theory_(std::move(theory)), registry_(std::move(registry)), source_vars_(std::move(source_vars)),
      fact_count_(fact_count) {
    const auto& r = registry_;
    assumptions_.reserve(r.prerequisitional().size() + r.justificational().size() + r.consequential().size());
    assumptions_.insert(assumptions_.end(), r.prerequisitional().begin(), r.prerequisitional().end());
    assumptions_.insert(assumptions_.end(), r.justificational().begin(), r.justificational().end());
    assumptions_.insert(assumptions_.end(), r.consequential().begin(), r.consequential().end());
    compile();
}

void ArgumentationSystem::compile() {
    for (const auto& a : assumptions_)
        assumption_index_.insert(a);
}

const Cnf& ArgumentationSystem::cnf() const {
    std::call_once(compiled_->once, [this] { compiled_->cnf = std::make_unique<const Cnf>(Cnf::from(theory_)); });
    return *compiled_->cnf;
}

bool ArgumentationSystem::is_assumption(std::string_view name) const {
    return assumption_index_.count(std::string(name)) != 0;
}

ArgumentationSystem translate(const DefaultTheory& theory) {
    TheorySet xi = theory.facts();
    AssumptionRegistry registry;
    for (const auto& d : theory.defaults()) {
        registry.add(d.name, d.justifications.size());
        const auto& a = registry.entries().back();
        xi.insert(implies(Formula::atom(a.prerequisite), !d.prerequisite));
        for (std::size_t i = 0; i < d.justifications.size(); ++i)
            xi.insert(implies(Formula::atom(a.justifications[i]), d.justifications[i]));
        xi.insert(implies(Formula::atom(a.consequence), d.consequence));
    }
    return ArgumentationSystem(std::move(xi), std::move(registry), vars(theory), theory.facts().size());
}

std::string to_theory_text(const ArgumentationSystem& system) {
    std::string out;
    for (const auto& f : system.theory())
        out += "fact " + f.to_string() + ".\n";
    for (const auto& a : system.registry().entries()) {
        out += "# " + a.default_name + ": p=" + a.prerequisite + " j=[";
        for (std::size_t i = 0; i < a.justifications.size(); ++i)
            out += (i ? ", " : "") + a.justifications[i];
        out += "] c=" + a.consequence + "\n";
    }
    if (system.registry().empty() && !system.assumptions().empty()) {
        out += "# assumptions:";
        for (const auto& a : system.assumptions())
            out += " " + a;
        out += "\n";
    }
    return out;
}

}  // namespace defarg
