#pragma once
#include <memory>

#include "rdga/metric.hpp"

namespace rdga {

// A degree −1 map together with the metric used for ⊥, 𝓛 and (,).
class Codifferential {
public:
    enum class Mode { Divergence, Hodge, DivergencePlusInterior, Custom };

    static Codifferential divergence(MetricPtr m);
    static Codifferential hodge(MetricPtr m, int orientation = 1);
    // δ + ⌊_v with ⌊_v the vector field v as a degree −1 graded derivation
    static Codifferential with_interior(const Codifferential& base, std::vector<Scalar> v);
    static Codifferential custom(MetricPtr m, FormMap f);

    Form operator()(const Form& w) const { return apply_(w); }
    const Metric& metric() const { return *metric_; }
    const MetricPtr& metric_ptr() const { return metric_; }
    const Christoffel& christoffel() const;
    Mode mode() const { return mode_; }
    FormMap as_map() const { return apply_; }

private:
    Mode mode_ = Mode::Custom;
    MetricPtr metric_;
    std::shared_ptr<const Christoffel> gamma_;
    FormMap apply_;
};

// δ∇ω = Σ g^{il} ι_l ∇_i ω with the oracle ∇
Form divergence_delta(const Metric& m, const Christoffel& G, const Form& w);
Form hodge_star(const Metric& m, int orientation, const Form& w);
Form hodge_delta(const Metric& m, int orientation, const Form& w);
// ⌊_v ω = Σ v^i ι_i ω
Form interior_coderivation(const std::vector<Scalar>& v, const Form& w);

Form L_delta(const Codifferential& d, const Form& w, const Form& e);
Form levi_connection(const Codifferential& d, const Form& w, const Form& e);
Form levi_higher(const Codifferential& d, const Form& w, const Form& e);
// Σ_i (−1)^{i−1} ω1..ω̂i..ωm ∇_{ωi} on a decomposable product of 1-forms
Form levi_higher_expansion(const Codifferential& d, const std::vector<Form>& factors, const Form& e);
Scalar torsion(const Codifferential& d, const Form& w, const Form& e, const Form& z);
Scalar metric_compat(const Codifferential& d, const Form& w, const Form& e, const Form& z);
Form curvature(const Codifferential& d, const Form& w, const Form& e, const Form& z);
Form hodge_laplacian(const Codifferential& d, const Form& w);
Form laplace_beltrami(const Codifferential& d, const Form& w);
Form weitzenbock(const Codifferential& d, const Form& w);
// W on 1-forms predicted by the oracle Ricci tensor: ω ↦ g^{ka} Ric_{aj} ω_k dx^j
Form oracle_ricci_map(const Metric& m, const TensorForm& ric, const Form& w);

// B(ω⊗η) = Bω⊗η + ω⊗Bη + 2∇_{g¹}ω⊗∇_{g²}η; B is probed first for L_B(a,ω) = 2∇_{da}ω.
TensorForm extend_to_tensor(const Codifferential& d, const FormMap& B, const TensorForm& t, double tol);
// the same rule on an unnormalized pair, for middle-linearity checks
TensorForm extend_to_pair(const Codifferential& d, const FormMap& B, const Form& w, const Form& e);
TensorForm ricci_via_delta(const Codifferential& d, double tol);
TensorForm ricci_via_curvature(const Codifferential& d);

struct ThetaData {
    ScalarMatrix pairing;                  // (dx^i, dx^j)
    std::vector<std::vector<Form>> nabla;  // ∇_{dx^i} dx^j
    Codifferential handle;                 // δ paired with the extracted (,), for ∇ on other inputs
};
// Θ(δ) = ((,), ∇); NotRegular if L_δ(a,·) is not tensorial on probes.
ThetaData theta_map(const Codifferential& d);
double theta_difference(const ThetaData& a, const ThetaData& b);

}  // namespace rdga
