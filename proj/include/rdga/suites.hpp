#pragma once
#include <optional>
#include <string>

#include "rdga/geometry.hpp"
#include "rdga/report.hpp"

namespace rdga {

struct SuiteConfig {
    std::uint64_t seed = 1;
    int samples = 100;
    std::optional<double> tolerance;  // default: exact on rationals, 1e-8 per jet coefficient
    Rational lambda = 1;
    int cap = 8;

    double tol(const Geometry& g) const { return tolerance ? *tolerance : g.default_tolerance(); }
};

// Levi-Civita, BV and Ricci identities for the divergence codifferential, plus the conformal family
// when the geometry carries conformal data.
Report riemann_suite(const Geometry& g, const SuiteConfig& cfg);
// classical_cleft cocycle: soundness of Ω̃ and Ω̃̃, cleft identities, gauge invariance, non-cleft variant.
Report extension_suite(const Geometry& g, const SuiteConfig& cfg);
// iterated line calculus, the semidirect product with τ = 0 and, with conformal data, spacetime.
Report timext_suite(const Geometry& g, const SuiteConfig& cfg);

// selector: riemann | extension | timext | all
Report verify(const Geometry& g, const std::string& selector, const SuiteConfig& cfg);

// Ricci via −½Δ(g) against the Christoffel oracle, with a componentwise table.
Report ricci_report(const Geometry& g, const SuiteConfig& cfg);
// Relation tables of Ω̃ and Ω̃̃ on coordinate generators with the cocycle residuals.
Report quantize_report(const Geometry& g, const SuiteConfig& cfg);
// UsageError when the geometry has no conformal data.
Report spacetime_report(const Geometry& g, const SuiteConfig& cfg);

// The display comparison against the published relation table, kept out of the spacetime report.
struct SpacetimeDisplay {
    Report report;
    bool matches = false;
};
SpacetimeDisplay spacetime_display(const Geometry& g, const SuiteConfig& cfg);

}  // namespace rdga
