#pragma once
#include <vector>

#include "rdga/report.hpp"
#include "rdga/riemann.hpp"
#include "rdga/sampling.hpp"

namespace rdga {

struct ConformalData {
    Form tau;
    Scalar alpha;
    Rational beta;
};

enum class ConformalMode { Degree1, Strong };

// [δ,𝓛_τ] − αδ − i_{dα}(D − β), applied to ω
Form conformal_defect(const Codifferential& d, const ConformalData& c, const Form& w);

// Residuals of the conformal identity family on seeded samples.
std::vector<CheckResult> conformal_check(const Codifferential& d, const ConformalData& c, ConformalMode mode,
                                         std::uint64_t seed, int samples, double tol);

}  // namespace rdga
