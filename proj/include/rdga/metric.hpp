#pragma once
#include <memory>
#include <vector>

#include "rdga/tensor.hpp"

namespace rdga {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

Scalar determinant(const ScalarMatrix& m);
// Throws NotInvertible when singular.
ScalarMatrix invert(const ScalarMatrix& m);

class Metric {
public:
    // g_ij given; the inverse is computed. InvalidMetric if asymmetric or singular.
    Metric(ChartPtr chart, ScalarMatrix g);
    // Pairing matrix (dx^i, dx^j) given directly; may be degenerate.
    static Metric from_pairing(ChartPtr chart, ScalarMatrix pairing);

    const ChartPtr& chart() const { return chart_; }
    int dim() const { return chart_->n; }
    bool invertible() const { return invertible_; }
    const Scalar& g(int i, int j) const;
    const Scalar& ginv(int i, int j) const { return ginv_[i][j]; }
    const ScalarMatrix& g_matrix() const;
    const ScalarMatrix& ginv_matrix() const { return ginv_; }

private:
    Metric() = default;
    ChartPtr chart_;
    ScalarMatrix g_, ginv_;
    bool invertible_ = false;
};
using MetricPtr = std::shared_ptr<const Metric>;

// (ω,η) = ω_i g^{ij} η_j
Scalar metric_pairing(const Metric& m, const Form& w, const Form& e);
// i_ω for ω of degree 1, as a degree −1 graded derivation
Form interior(const Metric& m, const Form& w, const Form& e);
// i_{ω1...ωm} = i_{ω1} ∘ ... ∘ i_{ωm}
Form interior_multi(const Metric& m, const Form& w, const Form& e);
// degree −2 biderivation extension of (,)
Form perp(const Metric& m, const Form& w, const Form& e);
// 𝓛_ω = ω⊥d − (−1)^{|ω|} d(ω⊥·)
Form lie_derivative(const Metric& m, const Form& w, const Form& e);
// g = g_ij dx^i ⊗ dx^j
TensorForm metric_tensor(const Metric& m);
// the vector field components X^i = g^{ij} ω_j of a 1-form
std::vector<Scalar> raise(const Metric& m, const Form& w);

// Classical Christoffel symbols; the independent oracle.
class Christoffel {
public:
    explicit Christoffel(const Metric& m);
    const Scalar& operator()(int k, int i, int j) const { return G_[(k * n_ + i) * n_ + j]; }
    int dim() const { return n_; }

private:
    int n_;
    std::vector<Scalar> G_;
};

// ∇_{∂_i} on forms, from ∇_i dx^k = −Γ^k_{ij} dx^j
Form oracle_nabla_coord(const Christoffel& G, int i, const Form& w);
// ∇_X with X raised from the 1-form ω
Form oracle_nabla(const Metric& m, const Christoffel& G, const Form& w, const Form& e);
// X^i Y^j [∇_i, ∇_j] ζ
Form oracle_curvature(const Metric& m, const Christoffel& G, const Form& w, const Form& e, const Form& z);
// Ric_kj = R^i_{kij} with R^l_{kij} from Γ
TensorForm oracle_ricci(const Metric& m, const Christoffel& G);

}  // namespace rdga
