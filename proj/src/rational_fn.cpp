#include "rdga/rational_fn.hpp"

#include <cmath>

#include "rdga/errors.hpp"

namespace rdga {

namespace {
Polynomial quot(const Polynomial& a, const Polynomial& b) {
    Polynomial q;
    if (!Polynomial::divide_exact(a, b, q)) throw Error("internal: inexact polynomial division");
    return q;
}
}  // namespace

RationalFn::RationalFn(const Polynomial& num, const Polynomial& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw NotInvertible("zero denominator");
    normalize();
}

void RationalFn::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(num_.nvars() ? num_.nvars() : den_.nvars(), Rational(1));
        return;
    }
    if (!den_.is_constant()) {
        Polynomial g = Polynomial::gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = quot(num_, g);
            den_ = quot(den_, g);
        }
    }
    Rational lc = den_.leading_coeff();
    if (lc != 1) {
        num_ = num_.scaled(1 / lc);
        den_ = den_.scaled(1 / lc);
    }
}

RationalFn RationalFn::operator-() const {
    RationalFn r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (a.nvars() != b.nvars()) throw MixedRing("rational functions over different variable sets");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    RationalFn r;
    if (a.den_ == b.den_) {
        r.num_ = a.num_ + b.num_;
        r.den_ = a.den_;
        if (r.num_.is_zero() || r.den_.is_constant()) {
            r.normalize();
            return r;
        }
        Polynomial g = Polynomial::gcd(r.num_, r.den_);
        if (!g.is_constant()) {
            r.num_ = quot(r.num_, g);
            r.den_ = quot(r.den_, g);
        }
        Rational lc = r.den_.leading_coeff();
        if (lc != 1) {
            r.num_ = r.num_.scaled(1 / lc);
            r.den_ = r.den_.scaled(1 / lc);
        }
        return r;
    }
    if (a.den_.is_constant() || b.den_.is_constant()) {
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
        r.normalize();
        return r;
    }
    Polynomial g = Polynomial::gcd(a.den_, b.den_);
    Polynomial bd = quot(b.den_, g), ad = quot(a.den_, g);
    r.num_ = a.num_ * bd + b.num_ * ad;
    r.den_ = a.den_ * bd;
    if (r.num_.is_zero()) {
        r.normalize();
        return r;
    }
    if (!g.is_constant()) {
        Polynomial h = Polynomial::gcd(r.num_, g);
        if (!h.is_constant()) {
            r.num_ = quot(r.num_, h);
            r.den_ = quot(r.den_, h);
        }
    }
    Rational lc = r.den_.leading_coeff();
    if (lc != 1) {
        r.num_ = r.num_.scaled(1 / lc);
        r.den_ = r.den_.scaled(1 / lc);
    }
    return r;
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    if (a.nvars() != b.nvars()) throw MixedRing("rational functions over different variable sets");
    RationalFn r;
    if (a.is_zero() || b.is_zero()) return RationalFn(a.nvars(), Rational(0));
    Polynomial an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    if (!bd.is_constant()) {
        Polynomial g = Polynomial::gcd(an, bd);
        if (!g.is_constant()) {
            an = quot(an, g);
            bd = quot(bd, g);
        }
    }
    if (!ad.is_constant()) {
        Polynomial g = Polynomial::gcd(bn, ad);
        if (!g.is_constant()) {
            bn = quot(bn, g);
            ad = quot(ad, g);
        }
    }
    r.num_ = an * bn;
    r.den_ = ad * bd;
    Rational lc = r.den_.leading_coeff();
    if (lc != 1) {
        r.num_ = r.num_.scaled(1 / lc);
        r.den_ = r.den_.scaled(1 / lc);
    }
    return r;
}

RationalFn RationalFn::scaled(const Rational& c) const {
    RationalFn r(*this);
    r.num_ = r.num_.scaled(c);
    if (c == 0) r.den_ = Polynomial(nvars(), Rational(1));
    return r;
}

RationalFn RationalFn::inverse() const {
    if (is_zero()) throw NotInvertible("zero rational function");
    RationalFn r;
    r.num_ = den_;
    r.den_ = num_;
    Rational lc = r.den_.leading_coeff();
    r.num_ = r.num_.scaled(1 / lc);
    r.den_ = r.den_.scaled(1 / lc);
    return r;
}

RationalFn RationalFn::partial(int i) const {
    if (den_.is_constant()) {
        RationalFn r(*this);
        r.num_ = num_.partial(i);
        return r;
    }
    Polynomial dd = den_.partial(i);
    if (dd.is_zero()) {
        RationalFn r(*this);
        r.num_ = num_.partial(i);
        return r;
    }
    return RationalFn(num_.partial(i) * den_ - num_ * dd, den_ * den_);
}

bool RationalFn::sqrt(RationalFn& root) const {
    if (is_zero()) {
        root = *this;
        return true;
    }
    Polynomial a, b;
    if (!num_.sqrt(a) || !den_.sqrt(b)) return false;
    root = RationalFn(a, b);
    return true;
}

double RationalFn::magnitude() const {
    double m = 0;
    for (const auto& [mono, c] : num_.terms()) m = std::max(m, std::fabs(c.get_d()));
    if (m == 0 && !num_.is_zero()) m = 1e-300;
    return m;
}

std::string RationalFn::str(const std::vector<std::string>& names) const {
    std::string n = num_.str(names);
    if (den_.is_constant() && den_.constant_term() == 1) return n;
    bool compound_n = num_.terms().size() > 1;
    bool compound_d = den_.terms().size() > 1 || !den_.is_constant();
    std::string d = den_.str(names);
    return (compound_n ? "(" + n + ")" : n) + "/" + (compound_d && den_.terms().size() > 1 ? "(" + d + ")" : d);
}

}  // namespace rdga
