#pragma once
#include <string>

#include "rdga/errors.hpp"
#include "rdga/rational.hpp"

namespace rdga {

// Functions on two points {x, y}; bar swaps the values.
struct TwoPointFn {
    Rational x, y;

    TwoPointFn() = default;
    TwoPointFn(const Rational& c) : x(c), y(c) {}  // NOLINT: constants embed
    TwoPointFn(int c) : x(c), y(c) {}                // NOLINT
    TwoPointFn(const Rational& a, const Rational& b) : x(a), y(b) {}

    TwoPointFn bar() const { return {y, x}; }
    TwoPointFn bar_pow(int m) const { return (m % 2) ? bar() : *this; }
    bool is_zero() const { return x == 0 && y == 0; }
    TwoPointFn inverse() const {
        if (x == 0 || y == 0) throw NotInvertible("two-point function with a zero value");
        return {1 / x, 1 / y};
    }
    TwoPointFn operator-() const { return {-x, -y}; }
    TwoPointFn& operator+=(const TwoPointFn& o) { x += o.x; y += o.y; return *this; }
    TwoPointFn& operator-=(const TwoPointFn& o) { x -= o.x; y -= o.y; return *this; }
    friend TwoPointFn operator+(TwoPointFn a, const TwoPointFn& b) { return a += b; }
    friend TwoPointFn operator-(TwoPointFn a, const TwoPointFn& b) { return a -= b; }
    friend TwoPointFn operator*(const TwoPointFn& a, const TwoPointFn& b) { return {a.x * b.x, a.y * b.y}; }
    bool operator==(const TwoPointFn& o) const { return x == o.x && y == o.y; }
    std::string str() const { return "(" + x.get_str() + "," + y.get_str() + ")"; }
};

inline TwoPointFn two_point_bar(const TwoPointFn& f) { return f.bar(); }

}  // namespace rdga
