#pragma once

#include "wavelab/reports.hpp"

namespace wavelab {

/// One named verification suite: deterministic given the seed, reporting
/// per-check entries and an overall verdict.
struct SuiteResult {
    std::string name;
    bool pass = false;
    json report;
};

/// Dyadic analysis engine: partition of unity, reconstruction, Plancherel,
/// norm axioms, critical-norm scaling invariance, embedding constants, and
/// the Bernstein / Leibniz / chain-rule ratio suites on the 20-function
/// corpus.
SuiteResult suite_besov(std::uint64_t seed);

/// Linear propagator: eigenmode exactness, zero-mode rule, energy
/// conservation, manufactured-solution order, time reversal, finite speed.
SuiteResult suite_propagator(std::uint64_t seed);

/// Strichartz sampling at (n, p) on the radial backend plus a d = 3 grid
/// surrogate, including the energy-pair identity probe.
SuiteResult suite_strichartz(int n, const Rational& p, std::uint64_t seed);

/// Product estimates driven by the exponent profile (fractional chain rule
/// and Leibniz ratios on the radial backend).
SuiteResult suite_chainrule(std::uint64_t seed);

SuiteResult run_suite(const std::string& name, int n, const Rational& p, std::uint64_t seed);

}  // namespace wavelab
