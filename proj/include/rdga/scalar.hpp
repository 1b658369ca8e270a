#pragma once
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "rdga/jet.hpp"
#include "rdga/rational_fn.hpp"

namespace rdga {

constexpr double kJetEps = 1e-20;

// Coefficient ring element: an exact rational function or a truncated jet.
class Scalar {
public:
    Scalar() = default;
    Scalar(RationalFn r) : v_(std::move(r)) {}  // NOLINT
    Scalar(Jet j) : v_(std::move(j)) {}         // NOLINT

    bool is_jet() const { return v_.index() == 1; }
    const RationalFn& rational() const { return std::get<0>(v_); }
    const Jet& jet() const { return std::get<1>(v_); }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar scaled(const Rational& c) const;
    Scalar inverse() const;
    Scalar partial(int i) const;
    Scalar sqrt() const;
    Scalar sin() const;
    Scalar cos() const;
    Scalar exp() const;

    bool is_zero() const;
    // exact zero test for rationals; tolerance test for jets against their valid window
    double magnitude() const;
    std::string str(const std::vector<std::string>& names) const;

private:
    std::variant<RationalFn, Jet> v_;
};

// Factory for scalars of one ring instance.
class Ring {
public:
    Ring() = default;
    static Ring rational(int nvars);
    static Ring jet(int nvars, int order, const std::vector<Rational>& base);

    int nvars() const { return nvars_; }
    bool is_jet() const { return static_cast<bool>(jet_); }
    int order() const { return jet_ ? jet_->order : 0; }
    const std::shared_ptr<const JetContext>& jet_context() const { return jet_; }
    const std::vector<Rational>& base_point() const { return base_; }

    Scalar zero() const { return constant(Rational(0)); }
    Scalar one() const { return constant(Rational(1)); }
    Scalar constant(const Rational& c) const;
    Scalar var(int i) const;
    Scalar from_polynomial(const Polynomial& p) const;
    bool same(const Ring& o) const;

private:
    int nvars_ = 0;
    std::shared_ptr<const JetContext> jet_;
    std::vector<Rational> base_;
};

}  // namespace rdga
