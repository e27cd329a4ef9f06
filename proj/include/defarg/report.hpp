#pragma once

#include <string>
#include <vector>

#include "defarg/default_theory.hpp"
#include "defarg/oracle.hpp"
#include "defarg/reasoner.hpp"
#include "defarg/transform.hpp"

namespace defarg {

/// Canonical text and JSON renderings shared by the command-line tool and
/// the Python module. Every string ends with a newline.
std::string render_translate(const ArgumentationSystem& system, bool json);
std::string render_contradictions(const ArgumentationSystem& system, bool json);
std::string render_terms(const DefaultReasoner& reasoner, bool json);
std::string render_extensions(const DefaultReasoner& reasoner, bool with_marginal, bool json);
std::string render_classification(const TheoryClassification& c, bool json);

/// Same schema as `render_extensions`. Generating defaults are mapped to
/// their consequential assumptions so the two outputs can be diffed.
std::string render_oracle(const DefaultTheory& theory, const std::vector<CandidateExtension>& extensions,
                          bool with_marginal, bool json);

/// Classification of an oracle result, mirroring the reasoner's.
TheoryClassification classify_oracle(const std::vector<CandidateExtension>& extensions);

}  // namespace defarg
