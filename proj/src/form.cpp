#include "rdga/form.hpp"

#include <algorithm>
#include <bit>

#include "rdga/errors.hpp"

namespace rdga {

std::shared_ptr<const Chart> Chart::make(std::vector<std::string> names, Ring ring) {
    auto c = std::make_shared<Chart>();
    c->n = static_cast<int>(names.size());
    if (c->n < 1) throw Error("chart needs at least one coordinate");
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j]) throw Error("duplicate coordinate name " + names[i]);
    if (ring.nvars() != c->n) throw Error("ring and chart dimension differ");
    c->names = std::move(names);
    c->ring = std::move(ring);
    return c;
}

bool Chart::same(const Chart& o) const { return this == &o || (n == o.n && names == o.names && ring.same(o.ring)); }

int popcount(std::uint32_t m) { return std::popcount(m); }

int merge_sign(std::uint32_t I, std::uint32_t J) {
    int count = 0;
    for (std::uint32_t j = J; j; j &= j - 1) {
        int b = std::countr_zero(j);
        std::uint32_t above = (b >= 31) ? 0u : ~((2u << b) - 1u);
        count += std::popcount(I & above);
    }
    return (count & 1) ? -1 : 1;
}

Form Form::scalar(ChartPtr chart, const Scalar& a) {
    Form f(std::move(chart));
    f.add(0, a);
    return f;
}

Form Form::constant(ChartPtr chart, const Rational& c) {
    Scalar s = chart->ring.constant(c);
    return scalar(std::move(chart), s);
}

Form Form::coordinate(ChartPtr chart, int i) {
    Scalar s = chart->ring.var(i);
    return scalar(std::move(chart), s);
}

Form Form::dx(ChartPtr chart, int i) {
    if (i < 0 || i >= chart->n) throw Error("dx index out of range");
    Scalar one = chart->ring.one();
    Form f(std::move(chart));
    f.add(1u << i, one);
    return f;
}

Form Form::basis(ChartPtr chart, std::uint32_t mask, const Scalar& a) {
    Form f(std::move(chart));
    f.add(mask, a);
    return f;
}

void Form::add(std::uint32_t mask, const Scalar& a) {
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
        if (!a.is_zero()) terms_.emplace(mask, a);
        return;
    }
    it->second += a;
    if (it->second.is_zero()) terms_.erase(it);
}

bool Form::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = popcount(terms_.begin()->first);
    for (const auto& [m, a] : terms_)
        if (popcount(m) != d) return false;
    return true;
}

int Form::degree() const {
    if (terms_.empty()) return 0;
    if (!is_homogeneous()) throw Inhomogeneous("form has several degrees");
    return popcount(terms_.begin()->first);
}

std::vector<int> Form::degrees() const {
    std::vector<int> ds;
    for (const auto& [m, a] : terms_) {
        int d = popcount(m);
        if (std::find(ds.begin(), ds.end(), d) == ds.end()) ds.push_back(d);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

Form Form::part(int deg) const {
    Form f(chart_);
    for (const auto& [m, a] : terms_)
        if (popcount(m) == deg) f.terms_.emplace(m, a);
    return f;
}

Scalar Form::coeff(std::uint32_t mask) const {
    auto it = terms_.find(mask);
    if (it != terms_.end()) return it->second;
    return chart_->ring.zero();
}

void Form::check_chart(const Form& o) const {
    if (!chart_ || !o.chart_) throw ChartMismatch("form without a chart");
    if (chart_ != o.chart_ && !chart_->same(*o.chart_)) throw ChartMismatch("forms over different charts");
}

Form Form::operator-() const {
    Form f(*this);
    for (auto& [m, a] : f.terms_) a = -a;
    return f;
}

Form& Form::operator+=(const Form& o) {
    if (!chart_) chart_ = o.chart_;
    if (o.terms_.empty()) return *this;
    check_chart(o);
    for (const auto& [m, a] : o.terms_) add(m, a);
    return *this;
}

Form& Form::operator-=(const Form& o) {
    if (!chart_) chart_ = o.chart_;
    if (o.terms_.empty()) return *this;
    check_chart(o);
    for (const auto& [m, a] : o.terms_) add(m, -a);
    return *this;
}

Form operator*(const Form& a, const Form& b) {
    a.check_chart(b);
    Form r(a.chart_);
    for (const auto& [I, x] : a.terms_)
        for (const auto& [J, y] : b.terms_) {
            if (I & J) continue;
            Scalar c = x * y;
            r.add(I | J, merge_sign(I, J) < 0 ? -c : c);
        }
    return r;
}

Form operator*(const Scalar& s, const Form& w) {
    Form r(w.chart_);
    for (const auto& [I, x] : w.terms_) r.add(I, s * x);
    return r;
}

Form Form::scaled(const Rational& c) const {
    Form r(chart_);
    if (c == 0) return r;
    for (const auto& [I, x] : terms_) r.terms_.emplace(I, x.scaled(c));
    return r;
}

Form Form::d() const {
    Form r(chart_);
    for (const auto& [I, a] : terms_)
        for (int i = 0; i < chart_->n; ++i) {
            std::uint32_t bit = 1u << i;
            if (I & bit) continue;
            Scalar p = a.partial(i);
            if (p.is_zero()) continue;
            r.add(I | bit, merge_sign(bit, I) < 0 ? -p : p);
        }
    return r;
}

Form Form::contract(int i) const {
    Form r(chart_);
    std::uint32_t bit = 1u << i;
    for (const auto& [I, a] : terms_) {
        if (!(I & bit)) continue;
        int before = popcount(I & (bit - 1));
        r.add(I & ~bit, (before & 1) ? -a : a);
    }
    return r;
}

double Form::magnitude() const {
    double m = 0;
    for (const auto& [I, a] : terms_) m = std::max(m, a.magnitude());
    return m;
}

std::string Form::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [I, a] : terms_) {
        if (!first) s += " + ";
        first = false;
        s += "(" + a.str(chart_->names) + ")";
        for (int i = 0; i < chart_->n; ++i)
            if (I & (1u << i)) s += " d" + chart_->names[i];
    }
    return s;
}

Form wedge(const Form& a, const Form& b) { return a * b; }
Form exterior_d(const Form& w) { return w.d(); }
Form contract(int i, const Form& w) { return w.contract(i); }

Form by_parts(const Form& a, const Form& b, const std::function<Form(const Form&, int, const Form&, int)>& f) {
    Form r(a.chart() ? a.chart() : b.chart());
    for (int p : a.degrees())
        for (int q : b.degrees()) r += f(a.part(p), p, b.part(q), q);
    return r;
}

Form by_parts(const Form& a, const std::function<Form(const Form&, int)>& f) {
    Form r(a.chart());
    for (int p : a.degrees()) r += f(a.part(p), p);
    return r;
}

Form leibnizator(const FormMap& B, int deg_B, const Form& w, const Form& e) {
    return by_parts(w, e, [&](const Form& x, int p, const Form& y, int) {
        Form r = B(x * y) - B(x) * y;
        Form t = x * B(y);
        return ((deg_B * p) % 2) ? r + t : r - t;
    });
}

Form degree_op(const Form& w) {
    return by_parts(w, [](const Form& x, int p) { return x.scaled(p); });
}

}  // namespace rdga
