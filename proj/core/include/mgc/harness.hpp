// Randomized generation of small exact instances and property-suite execution
// with counterexample reporting.
#pragma once

#include "mgc/filtered.hpp"
#include "mgc/mixed.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace mgc {

struct GenConfig {
    std::uint64_t seed = 0;
    int max_dim = 4;
    int degree_lo = -6, degree_hi = 6;
    int weight_lo = -4, weight_hi = 4;
    int trials = 100;
};

// Generators are deterministic under the rng state and always produce
// validating objects (GenerationFailure after bounded retries otherwise).
ChainComplex gen_chain(std::mt19937_64& rng, const GenConfig& cfg);
GradedComplex gen_graded(std::mt19937_64& rng, const GenConfig& cfg);
MixedComplex gen_mixed(std::mt19937_64& rng, const GenConfig& cfg);
FilteredComplex gen_filtered(std::mt19937_64& rng, const GenConfig& cfg, bool constant_tail);

struct PropertyResult {
    std::string name;
    int passed = 0;
    int failed = 0;
};

struct VerificationReport {
    std::string suite;
    std::vector<PropertyResult> properties;
    bool ok = true;
    std::string failing_property; // first failure
    int failing_trial = -1;
    std::uint64_t seed = 0;
    std::string counterexample; // detail / embedded document text
};

// "core", "mixed-laws", "filtered-laws", "adjunction", "tstructure",
// "monoidal", "all".
std::vector<std::string> suite_names();

// Throws std::invalid_argument on an unknown suite name.
VerificationReport run_suite(const std::string& name, const GenConfig& cfg);

} // namespace mgc
