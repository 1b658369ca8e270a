#pragma once
#include <string>
#include <vector>

#include "rdga/extension.hpp"
#include "rdga/riemann.hpp"

namespace rdga {

// Standard-DGA decompositions of classical forms: a dx^I = (a dx^{i1})·dx^{I∖i1}, etc.
Decomposer<Form> form_decomposer();
Decomposer<NcForm> nc_decomposer(int cap);

// Homogeneous random forms of every degree 0..n (count per degree) and random functions.
std::vector<Form> form_pool(const ChartPtr& chart, Sampler& s, int per_degree, int max_poly_deg = 2);
std::vector<Form> function_pool(const ChartPtr& chart, Sampler& s, int count, int max_poly_deg = 2);

HostBilinear<Form> metric_perp_map(const MetricPtr& m);

struct ClassicalCleft {
    Codifferential delta;
    ConstructData<Form> data;
};

// Cocycle data built from a codifferential, with ⊥ the biderivation extension of (,) and δ the given codifferential.
ClassicalCleft classical_cleft(const Codifferential& d, const Rational& lambda, std::uint64_t seed, double tol);
ClassicalCleft classical_cleft(const MetricPtr& m, const Rational& lambda, std::uint64_t seed, double tol);

// Relation set of the almost commutative exterior algebra, plus the Levi and cleft comparisons.
Report riequant_relations(const ClassicalCleft& cc, std::uint64_t seed, int samples, double tol);
// Relation tables on coordinate generators for Ω̃ and Ω̃̃.
std::string riequant_table(const ClassicalCleft& cc);

}  // namespace rdga
