#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "zakfiber/instances.hpp"

/// The acceptance gate: every headline theorem instantiated by the library
/// is re-checked here against an independent route (dense linear algebra,
/// exhaustive sums, or frozen hand values), one criterion per theorem
/// cluster. The suite never weakens a tolerance to pass; a red line here
/// is a real defect.
namespace zakfiber::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    long cases = 0;        // individual comparisons performed
    double worst = 0.0;    // largest (scale-normalized) residual observed
    double budget = 0.0;   // tolerance `worst` is held to
    double seconds = 0.0;  // wall-clock time
    double time_budget = 0.0; // seconds allowed, 0 = unlimited
    std::string detail;    // first failure, or a short summary
};

/// scope: "all" or a comma-separated list of ids / names:
///   1 zak          unitarity + inversion over the pair matrix
///   2 intertwine   translation / modulation covariance, exhaustive
///   3 fiber-link   zak_to_fiber vs direct fiberization
///   4 weil         layered integration + exact coset factorization
///   5 frames       translate frame bounds, direct vs fiberwise
///   6 riesz        Riesz verdicts + bounds, with dependent rejections
///   7 gabor        critically sampled translation-modulation bounds
///   8 classify     invariant-space projectors, dimensions, sections
///   9 rep          bracket suite, isometry, orbit bounds, embedding
///  10 micro        frozen hand-computed values
std::vector<CriterionResult> run_acceptance(const std::string& scope, std::uint64_t seed);

/// One line per criterion; returns true iff every selected criterion passed.
bool print_acceptance(const std::vector<CriterionResult>& results, std::ostream& os);

} // namespace zakfiber::verify
