#include "rdga/tensor.hpp"

#include "rdga/errors.hpp"

namespace rdga {

TensorForm TensorForm::product(const Form& a, const Form& b) {
    TensorForm t(a.chart() ? a.chart() : b.chart());
    for (const auto& [I, x] : a.terms())
        for (const auto& [J, y] : b.terms()) t.add(I, J, x * y);
    return t;
}

void TensorForm::add(std::uint32_t I, std::uint32_t J, const Scalar& a) {
    Key k{I, J};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        if (!a.is_zero()) terms_.emplace(k, a);
        return;
    }
    it->second += a;
    if (it->second.is_zero()) terms_.erase(it);
}

Scalar TensorForm::coeff(std::uint32_t I, std::uint32_t J) const {
    auto it = terms_.find({I, J});
    return it == terms_.end() ? chart_->ring.zero() : it->second;
}

TensorForm& TensorForm::operator+=(const TensorForm& o) {
    if (!chart_) chart_ = o.chart_;
    if (o.chart_ && chart_ != o.chart_ && !chart_->same(*o.chart_)) throw ChartMismatch("tensor charts differ");
    for (const auto& [k, a] : o.terms_) add(k.first, k.second, a);
    return *this;
}

TensorForm& TensorForm::operator-=(const TensorForm& o) {
    if (!chart_) chart_ = o.chart_;
    if (o.chart_ && chart_ != o.chart_ && !chart_->same(*o.chart_)) throw ChartMismatch("tensor charts differ");
    for (const auto& [k, a] : o.terms_) add(k.first, k.second, -a);
    return *this;
}

TensorForm TensorForm::scaled(const Rational& c) const {
    TensorForm t(chart_);
    if (c == 0) return t;
    for (const auto& [k, a] : terms_) t.terms_.emplace(k, a.scaled(c));
    return t;
}

double TensorForm::magnitude() const {
    double m = 0;
    for (const auto& [k, a] : terms_) m = std::max(m, a.magnitude());
    return m;
}

std::string TensorForm::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    auto idx = [&](std::uint32_t I) {
        std::string r;
        for (int i = 0; i < chart_->n; ++i)
            if (I & (1u << i)) r += (r.empty() ? "d" : "^d") + chart_->names[i];
        return r.empty() ? std::string("1") : r;
    };
    for (const auto& [k, a] : terms_) {
        if (!first) s += " + ";
        first = false;
        s += "(" + a.str(chart_->names) + ") " + idx(k.first) + "⊗" + idx(k.second);
    }
    return s;
}

}  // namespace rdga
