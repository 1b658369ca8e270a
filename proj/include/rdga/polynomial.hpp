#pragma once
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rdga/rational.hpp"

namespace rdga {

// Packed monomial: byte 7 holds the total degree, byte 6-i the exponent of
// variable i. Plain integer comparison is then graded lexicographic order.
using Monomial = std::uint64_t;

constexpr int kMaxVars = 7;
constexpr int kMaxExponent = 127;

inline int mono_exp(Monomial m, int i) { return static_cast<int>((m >> (8 * (6 - i))) & 0xff); }
inline int mono_deg(Monomial m) { return static_cast<int>(m >> 56); }
Monomial mono_var(int i, int e = 1);
Monomial mono_mul(Monomial a, Monomial b);
bool mono_divides(Monomial a, Monomial b);
inline Monomial mono_div(Monomial b, Monomial a) { return b - a; }

class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, std::greater<Monomial>>;

    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}
    Polynomial(int nvars, const Rational& c);
    static Polynomial var(int nvars, int i);
    static Polynomial monomial(int nvars, Monomial m, const Rational& c);

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    int total_degree() const;
    Monomial leading_monomial() const { return terms_.begin()->first; }
    const Rational& leading_coeff() const { return terms_.begin()->second; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& c) const;
    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    Polynomial partial(int i) const;
    Polynomial pow(unsigned k) const;

    // Views in a single variable v: coefficients are polynomials free of v.
    int degree_in(int v) const;
    Polynomial coeff_in(int v, int k) const;
    int lowest_var() const;  // smallest variable index present, or -1

    // Rational content (positive) and the primitive part over Z.
    Rational content() const;
    Polynomial primitive() const;

    // a / b, requires exact divisibility (returns false otherwise).
    static bool divide_exact(const Polynomial& a, const Polynomial& b, Polynomial& q);
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    // Square root if a is a perfect square with positive leading coefficient.
    bool sqrt(Polynomial& root) const;

    std::string str(const std::vector<std::string>& names) const;

    void add_term(Monomial m, const Rational& c);

private:
    int nvars_ = 0;
    Terms terms_;
};

}  // namespace rdga
