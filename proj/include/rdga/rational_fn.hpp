#pragma once
#include "rdga/polynomial.hpp"

namespace rdga {

// num/den in lowest terms; den has leading coefficient 1 in grlex order.
class RationalFn {
public:
    RationalFn() = default;
    RationalFn(int nvars, const Rational& c) : num_(nvars, c), den_(nvars, Rational(1)) {}
    explicit RationalFn(const Polynomial& p) : num_(p), den_(p.nvars(), Rational(1)) {}
    RationalFn(const Polynomial& num, const Polynomial& den);

    int nvars() const { return num_.nvars(); }
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_term(); }

    RationalFn operator-() const;
    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    RationalFn scaled(const Rational& c) const;
    RationalFn inverse() const;
    RationalFn partial(int i) const;
    bool operator==(const RationalFn& o) const { return num_ == o.num_ && den_ == o.den_; }

    // Exact square root when numerator and denominator are both squares.
    bool sqrt(RationalFn& root) const;

    // Largest absolute numerator coefficient; 0 iff the value is zero.
    double magnitude() const;
    std::string str(const std::vector<std::string>& names) const;

private:
    void normalize();
    Polynomial num_, den_;
};

}  // namespace rdga
