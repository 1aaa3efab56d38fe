#pragma once

#include <cstdint>
#include <string>

#include "dhh/config.hpp"

namespace dhh::verify {

using cli::json;

struct SuiteOptions {
    std::uint64_t seed = 7;
    std::uint32_t trials = 20;
    std::uint32_t max_degree = 4;
};

struct SuiteResult {
    std::string suite;
    std::uint32_t trials = 0;
    std::uint32_t failures = 0;
    bool pass = false;
    json details;  // seeded, deterministic, timing-free
};

// Suites: "complex" (d o d = 0, difference-linearity, C^0 = M),
// "bar" (bar differential, contracting homotopy, augmentation),
// "lowdeg" (degree 0/1 formulas against the complex),
// "ses", "les" (cone sequences on instances and random abstract complexes),
// "tensor" (hom-tensor adjunction, unit isos, associator),
// "universal" (tensor universal property).
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

std::vector<std::string> suite_names();

}  // namespace dhh::verify
