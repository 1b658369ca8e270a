#pragma once
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rdga/report.hpp"
#include "rdga/two_point.hpp"

namespace rdga {

constexpr int kDefaultNcCap = 8;

// Σ f_n θⁿ over functions on two points, with θf = f̄θ.
class NcForm {
public:
    explicit NcForm(int cap = kDefaultNcCap);
    static NcForm function(const TwoPointFn& f, int cap = kDefaultNcCap);
    static NcForm theta_pow(int n, const TwoPointFn& f = Rational(1), int cap = kDefaultNcCap);

    int cap() const { return cap_; }
    TwoPointFn coeff(int n) const;
    void add(int n, const TwoPointFn& f);  // Overflow past the cap

    bool is_zero() const;
    std::vector<int> degrees() const;
    int degree() const;  // Inhomogeneous if mixed, 0 for zero
    NcForm part(int n) const;

    NcForm operator-() const;
    NcForm& operator+=(const NcForm& o);
    NcForm& operator-=(const NcForm& o);
    friend NcForm operator+(NcForm a, const NcForm& b) { return a += b; }
    friend NcForm operator-(NcForm a, const NcForm& b) { return a -= b; }
    friend NcForm operator*(const NcForm& a, const NcForm& b);
    friend NcForm operator*(const TwoPointFn& f, const NcForm& w);
    NcForm scaled(const Rational& c) const;
    bool operator==(const NcForm& o) const;

    NcForm d() const;

    double magnitude() const;
    std::string str() const;

private:
    int cap_;
    std::vector<TwoPointFn> c_;
};

NcForm nc_mul(const NcForm& a, const NcForm& b);
NcForm nc_d(const NcForm& w);

// θᵐ⊥θⁿ = c(m,n) θ^{m+n−2}; extended as a bimodule map.
struct PerpTable {
    std::string name;
    std::function<TwoPointFn(int, int)> rule;
    bool standard = false;

    static PerpTable standard_table();  // c(m,n) = 2(−1)^{m+1} m n
    static PerpTable from_rule(std::string name, std::function<TwoPointFn(int, int)> rule);
    TwoPointFn operator()(int m, int n) const { return rule(m, n); }
};

NcForm nc_perp(const PerpTable& p, const NcForm& a, const NcForm& b);
NcForm nc_inner_delta(const PerpTable& p, const NcForm& w);  // θ⊥ω
// L_{⊥θ}(ω,η) = (ωη)⊥θ − (ω⊥θ)η − (−1)^{|ω|} ω(η⊥θ)
NcForm nc_perp_theta_leibnizator(const PerpTable& p, const NcForm& w, const NcForm& e);
NcForm nc_connection(const PerpTable& p, const NcForm& w, const NcForm& e);
NcForm nc_j(const PerpTable& p, const NcForm& w, const NcForm& z);
NcForm nc_sigma(const PerpTable& p, const NcForm& w, const NcForm& e, const NcForm& z);
TwoPointFn nc_pairing(const PerpTable& p, const NcForm& a, const NcForm& b);

NcForm nc_hodge_laplacian(const PerpTable& p, const NcForm& w);
NcForm nc_laplace_beltrami(const PerpTable& p, const NcForm& w);
NcForm nc_torsion(const PerpTable& p, const NcForm& w);  // θ∇_θ − d

// Σ f θᵐ⊗θⁿ with functions collected on the left.
class NcTensor {
public:
    using Terms = std::map<std::pair<int, int>, TwoPointFn>;
    static NcTensor product(const NcForm& a, const NcForm& b);
    const Terms& terms() const { return terms_; }
    void add(int m, int n, const TwoPointFn& f);
    NcTensor& operator+=(const NcTensor& o);
    NcTensor& operator-=(const NcTensor& o);
    friend NcTensor operator+(NcTensor a, const NcTensor& b) { return a += b; }
    friend NcTensor operator-(NcTensor a, const NcTensor& b) { return a -= b; }
    NcTensor scaled(const Rational& c) const;
    bool is_zero() const { return terms_.empty(); }
    double magnitude() const;
    std::string str() const;

private:
    Terms terms_;
};

NcTensor nc_metric_g(int cap = kDefaultNcCap);  // θ⊗θ
// ∇_ω(η⊗ζ) = ∇_ωη⊗ζ + σ_ω(η⊗θ)⊗∇_θζ
NcTensor nc_connection_tensor(const PerpTable& p, const NcForm& w, const NcTensor& t, int cap);
// (d⊗id − (∧⊗id)(id⊗∇))∇η with ∇η = θ⊗∇_θη
NcTensor nc_curvature(const PerpTable& p, const NcForm& w);

struct NcConnectionData {
    PerpTable table;
    std::function<NcForm(const NcForm&, const NcForm&)> nabla;
    std::function<NcForm(const NcForm&, const NcForm&, const NcForm&)> sigma;
    std::function<TwoPointFn(const NcForm&, const NcForm&)> pairing;
    NcTensor metric_g;
};
NcConnectionData nc_connection_data(const PerpTable& p, int cap = kDefaultNcCap);

// Homogeneous basis fθⁿ, f ∈ {e_x, e_y}, n ≤ max_deg.
std::vector<NcForm> nc_basis(int max_deg, int cap);

Report nc_metric_checks(const PerpTable& p, int cap);
Report braided_leibniz_check(const PerpTable& p, int cap);
Report nc_torsion_compat(const PerpTable& p, int cap);
Report nc_ricci_delta(const PerpTable& p, int cap);
// Example: the quoted values of the two-point example and the checks above.
// Full: additionally the inner cocycle, its extensions, cleft identities and gauge maps on samples.
enum class Z2Scope { Example, Full };
Report z2_report(const PerpTable& p, int cap, Z2Scope scope = Z2Scope::Full);

}  // namespace rdga
