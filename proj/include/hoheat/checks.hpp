#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hoheat/core.hpp"

namespace hoheat {

struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;  // measured error / distance
    double tol = 0.0;
    std::string detail;
};

struct CheckOptions {
    std::uint64_t seed = 0x5eedULL;
    std::int64_t mc_samples = 100000;
    std::string only;  // substring filter; empty runs everything
};

/// Runs every cross-module identity at its stated tolerance.  Deterministic
/// for a fixed seed.
std::vector<CheckResult> run_checks(const CheckOptions& opts);

/// int_R u_m(x,t) dx, handling the conditionally convergent oscillatory left
/// tail of odd orders by accelerated summation over sign-change panels.
double total_mass(const EquationOrder& order, double t, const NumericControls& c = {});

}  // namespace hoheat
