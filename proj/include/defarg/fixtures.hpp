#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "defarg/default_theory.hpp"

namespace defarg {

/// Worked example theories in theory-file syntax.
struct Fixture {
    std::string name;
    std::string text;
};

const std::vector<Fixture>& fixtures();

/// Throws LookupError for an unknown name.
const Fixture& fixture(std::string_view name);
DefaultTheory load_fixture(std::string_view name);

}  // namespace defarg
