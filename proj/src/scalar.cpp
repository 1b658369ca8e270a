#include "rdga/scalar.hpp"

#include "rdga/errors.hpp"

namespace rdga {

namespace {
void same_kind(const Scalar& a, const Scalar& b) {
    if (a.is_jet() != b.is_jet()) throw MixedRing("rational function combined with a jet");
}
}  // namespace

Scalar Scalar::operator-() const {
    if (is_jet()) return Scalar(-jet());
    return Scalar(-rational());
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    same_kind(a, b);
    if (a.is_jet()) return Scalar(a.jet() + b.jet());
    return Scalar(a.rational() + b.rational());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    same_kind(a, b);
    if (a.is_jet()) return Scalar(a.jet() - b.jet());
    return Scalar(a.rational() - b.rational());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    same_kind(a, b);
    if (a.is_jet()) return Scalar(a.jet() * b.jet());
    return Scalar(a.rational() * b.rational());
}

Scalar Scalar::scaled(const Rational& c) const {
    if (is_jet()) return Scalar(jet().scaled(to_real(c)));
    return Scalar(rational().scaled(c));
}

Scalar Scalar::inverse() const {
    if (is_jet()) return Scalar(jet().inverse());
    return Scalar(rational().inverse());
}

Scalar Scalar::partial(int i) const {
    if (is_jet()) return Scalar(jet().partial(i));
    return Scalar(rational().partial(i));
}

Scalar Scalar::sqrt() const {
    if (is_jet()) return Scalar(jet().sqrt());
    RationalFn r;
    if (!rational().sqrt(r)) throw SqrtUnavailable("no exact square root in the rational function field");
    return Scalar(r);
}

Scalar Scalar::sin() const {
    if (!is_jet()) throw SqrtUnavailable("sin needs the jet backend");
    return Scalar(jet().sin());
}

Scalar Scalar::cos() const {
    if (!is_jet()) throw SqrtUnavailable("cos needs the jet backend");
    return Scalar(jet().cos());
}

Scalar Scalar::exp() const {
    if (!is_jet()) throw SqrtUnavailable("exp needs the jet backend");
    return Scalar(jet().exp());
}

bool Scalar::is_zero() const {
    if (is_jet()) return jet().is_zero(kJetEps);
    return rational().is_zero();
}

double Scalar::magnitude() const {
    if (is_jet()) return jet().magnitude();
    return rational().magnitude();
}

std::string Scalar::str(const std::vector<std::string>& names) const {
    if (is_jet()) return jet().str(names);
    return rational().str(names);
}

Ring Ring::rational(int nvars) {
    if (nvars < 1 || nvars > kMaxVars) throw Error("chart dimension must be between 1 and 7");
    Ring r;
    r.nvars_ = nvars;
    return r;
}

Ring Ring::jet(int nvars, int order, const std::vector<Rational>& base) {
    if (nvars < 1 || nvars > kMaxVars) throw Error("chart dimension must be between 1 and 7");
    Ring r;
    r.nvars_ = nvars;
    r.base_ = base;
    std::vector<Real> b;
    for (const auto& q : base) b.push_back(to_real(q));
    r.jet_ = JetContext::make(nvars, order, b);
    return r;
}

Scalar Ring::constant(const Rational& c) const {
    if (jet_) return Scalar(Jet(jet_, to_real(c)));
    return Scalar(RationalFn(nvars_, c));
}

Scalar Ring::var(int i) const {
    if (i < 0 || i >= nvars_) throw Error("variable index out of range");
    if (jet_) return Scalar(Jet::coordinate(jet_, i));
    return Scalar(RationalFn(Polynomial::var(nvars_, i)));
}

Scalar Ring::from_polynomial(const Polynomial& p) const {
    if (!jet_) return Scalar(RationalFn(p));
    Scalar acc = zero();
    std::vector<Scalar> vars;
    for (int i = 0; i < nvars_; ++i) vars.push_back(var(i));
    for (const auto& [m, c] : p.terms()) {
        Scalar t = constant(c);
        for (int i = 0; i < nvars_; ++i)
            for (int e = mono_exp(m, i); e > 0; --e) t = t * vars[i];
        acc += t;
    }
    return acc;
}

bool Ring::same(const Ring& o) const {
    if (nvars_ != o.nvars_ || is_jet() != o.is_jet()) return false;
    return !jet_ || jet_->same(*o.jet_);
}

}  // namespace rdga
