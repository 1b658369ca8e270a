#pragma once
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rdga/scalar.hpp"

namespace rdga {

struct Chart {
    int n = 0;
    std::vector<std::string> names;
    Ring ring;

    static std::shared_ptr<const Chart> make(std::vector<std::string> names, Ring ring);
    bool same(const Chart& o) const;
};
using ChartPtr = std::shared_ptr<const Chart>;

// Σ a_I dx^I with I an increasing multi-index stored as a bit mask.
class Form {
public:
    using Terms = std::map<std::uint32_t, Scalar>;

    Form() = default;
    explicit Form(ChartPtr chart) : chart_(std::move(chart)) {}
    static Form scalar(ChartPtr chart, const Scalar& a);
    static Form constant(ChartPtr chart, const Rational& c);
    static Form coordinate(ChartPtr chart, int i);  // the function x^i
    static Form dx(ChartPtr chart, int i);
    static Form basis(ChartPtr chart, std::uint32_t mask, const Scalar& a);

    const ChartPtr& chart() const { return chart_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;
    int degree() const;  // Inhomogeneous if mixed; 0 for the zero form
    std::vector<int> degrees() const;
    Form part(int deg) const;
    Scalar coeff(std::uint32_t mask) const;
    // Scalar part as a ring element (zero if absent).
    Scalar scalar_part() const { return coeff(0); }

    Form operator-() const;
    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(const Form& a, const Form& b);  // wedge
    friend Form operator*(const Scalar& a, const Form& w);
    Form scaled(const Rational& c) const;

    Form d() const;
    Form contract(int i) const;

    double magnitude() const;
    std::string str() const;

    void add(std::uint32_t mask, const Scalar& a);

private:
    void check_chart(const Form& o) const;
    ChartPtr chart_;
    Terms terms_;
};

using FormMap = std::function<Form(const Form&)>;
using FormBilinear = std::function<Form(const Form&, const Form&)>;

Form wedge(const Form& a, const Form& b);
Form exterior_d(const Form& w);
Form contract(int i, const Form& w);

int popcount(std::uint32_t m);
// (-1)^{#pairs i in I, j in J with i > j}
int merge_sign(std::uint32_t I, std::uint32_t J);

// Applies a bilinear rule to homogeneous parts and sums.
Form by_parts(const Form& a, const Form& b, const std::function<Form(const Form&, int, const Form&, int)>& f);
Form by_parts(const Form& a, const std::function<Form(const Form&, int)>& f);

// B(ωη) − (Bω)η − (−1)^{d|ω|} ω Bη
Form leibnizator(const FormMap& B, int deg_B, const Form& w, const Form& e);

// Degree operator D and sign operator on forms.
Form degree_op(const Form& w);

}  // namespace rdga
