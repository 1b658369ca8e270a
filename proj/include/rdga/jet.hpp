#pragma once
#include <boost/multiprecision/float128.hpp>
#include <memory>
#include <string>
#include <vector>

#include "rdga/rational.hpp"

namespace rdga {

using Real = boost::multiprecision::float128;

Real to_real(const Rational& q);

// Monomial tables for jets in nvars variables truncated at total degree order.
struct JetContext {
    int nvars = 0;
    int order = 0;
    std::vector<Real> base;
    std::vector<std::vector<int>> exps;
    std::vector<int> deg;
    std::vector<int> mul;                 // size*size, -1 past the order
    std::vector<std::vector<int>> raise;  // raise[v][i]: index of exps[i] + e_v, or -1

    int size() const { return static_cast<int>(exps.size()); }
    int index_of(const std::vector<int>& e) const;
    static std::shared_ptr<const JetContext> make(int nvars, int order, std::vector<Real> base);
    bool same(const JetContext& o) const;
};

// Truncated Taylor expansion Σ c_α h^α around ctx->base. Coefficients of total
// degree above `valid` are not trustworthy (derivatives lower validity).
class Jet {
public:
    Jet() = default;
    Jet(std::shared_ptr<const JetContext> ctx, const Real& c);
    static Jet coordinate(std::shared_ptr<const JetContext> ctx, int i);

    const std::shared_ptr<const JetContext>& context() const { return ctx_; }
    const std::vector<Real>& coeffs() const { return c_; }
    int valid() const { return valid_; }
    const Real& constant() const { return c_[0]; }

    Jet operator-() const;
    friend Jet operator+(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a, const Jet& b);
    friend Jet operator*(const Jet& a, const Jet& b);
    Jet scaled(const Real& s) const;
    Jet partial(int i) const;
    Jet inverse() const;
    Jet sqrt() const;
    Jet sin() const;
    Jet cos() const;
    Jet exp() const;

    bool is_zero(double eps) const;
    // max |c_α| over |α| <= valid; infinity when nothing is valid
    double magnitude() const;
    std::string str(const std::vector<std::string>& names) const;

private:
    void check_same(const Jet& o) const;
    // Σ_k w_k h^k where h = this - constant
    Jet compose(const std::vector<Real>& w) const;

    std::shared_ptr<const JetContext> ctx_;
    std::vector<Real> c_;
    int valid_ = 0;
};

}  // namespace rdga
