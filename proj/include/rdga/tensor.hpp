#pragma once
#include <utility>

#include "rdga/form.hpp"

namespace rdga {

// Element of Ω ⊗_A Ω: Σ a_{IJ} dx^I ⊗ dx^J, coefficients pulled to the left.
class TensorForm {
public:
    using Key = std::pair<std::uint32_t, std::uint32_t>;
    using Terms = std::map<Key, Scalar>;

    TensorForm() = default;
    explicit TensorForm(ChartPtr chart) : chart_(std::move(chart)) {}
    static TensorForm product(const Form& a, const Form& b);

    const ChartPtr& chart() const { return chart_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(std::uint32_t I, std::uint32_t J) const;

    TensorForm& operator+=(const TensorForm& o);
    TensorForm& operator-=(const TensorForm& o);
    friend TensorForm operator+(TensorForm a, const TensorForm& b) { return a += b; }
    friend TensorForm operator-(TensorForm a, const TensorForm& b) { return a -= b; }
    TensorForm scaled(const Rational& c) const;
    double magnitude() const;
    std::string str() const;

    void add(std::uint32_t I, std::uint32_t J, const Scalar& a);

private:
    ChartPtr chart_;
    Terms terms_;
};

}  // namespace rdga
