#pragma once
#include <cstdint>
#include <random>

#include "rdga/form.hpp"
#include "rdga/two_point.hpp"

namespace rdga {

// Seeded generator of small random test data.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi);  // inclusive
    bool coin(int num = 1, int den = 2);
    Rational small_rational(int bound = 3);
    // degree <= max_deg polynomial with integer coefficients in [-3,3]
    Polynomial polynomial(int nvars, int max_deg = 2);
    Scalar scalar(const Ring& ring, int max_deg = 2);
    Scalar nonzero_scalar(const Ring& ring, int max_deg = 2);
    Form form(const ChartPtr& chart, int degree, int max_deg = 2);
    Form any_form(const ChartPtr& chart, int max_deg = 2);  // homogeneous, random degree 0..n
    TwoPointFn two_point(int bound = 5);

private:
    std::mt19937_64 rng_;
};

}  // namespace rdga
