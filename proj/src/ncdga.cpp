#include "rdga/ncdga.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rdga/errors.hpp"

namespace rdga {

namespace {
double abs_double(const Rational& q) { return std::fabs(q.get_d()); }
double fn_magnitude(const TwoPointFn& f) { return std::max(abs_double(f.x), abs_double(f.y)); }
const Rational kHalf(1, 2);
}  // namespace

NcForm::NcForm(int cap) : cap_(cap), c_(cap + 1) {
    if (cap < 0) throw UsageError("negative degree cap");
}

NcForm NcForm::function(const TwoPointFn& f, int cap) {
    NcForm w(cap);
    w.add(0, f);
    return w;
}

NcForm NcForm::theta_pow(int n, const TwoPointFn& f, int cap) {
    NcForm w(cap);
    w.add(n, f);
    return w;
}

TwoPointFn NcForm::coeff(int n) const {
    if (n < 0 || n > cap_) return TwoPointFn(Rational(0));
    return c_[n];
}

void NcForm::add(int n, const TwoPointFn& f) {
    if (f.is_zero()) return;
    if (n < 0) throw DegreeError("negative form degree");
    if (n > cap_)
        throw Overflow("degree " + std::to_string(n) + " exceeds the cap " + std::to_string(cap_));
    c_[n] += f;
}

bool NcForm::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const TwoPointFn& f) { return f.is_zero(); });
}

std::vector<int> NcForm::degrees() const {
    std::vector<int> r;
    for (int n = 0; n <= cap_; ++n)
        if (!c_[n].is_zero()) r.push_back(n);
    return r;
}

int NcForm::degree() const {
    auto ds = degrees();
    if (ds.size() > 1) throw Inhomogeneous("mixed-degree form");
    return ds.empty() ? 0 : ds[0];
}

NcForm NcForm::part(int n) const {
    NcForm r(cap_);
    if (n >= 0 && n <= cap_) r.c_[n] = c_[n];
    return r;
}

NcForm NcForm::operator-() const {
    NcForm r(*this);
    for (auto& f : r.c_) f = -f;
    return r;
}

NcForm& NcForm::operator+=(const NcForm& o) {
    if (o.cap_ > cap_) {
        c_.resize(o.cap_ + 1);
        cap_ = o.cap_;
    }
    for (int n = 0; n <= o.cap_; ++n) c_[n] += o.c_[n];
    return *this;
}

NcForm& NcForm::operator-=(const NcForm& o) { return *this += -o; }

NcForm operator*(const NcForm& a, const NcForm& b) {
    NcForm r(std::max(a.cap_, b.cap_));
    for (int m = 0; m <= a.cap_; ++m) {
        if (a.c_[m].is_zero()) continue;
        for (int n = 0; n <= b.cap_; ++n) {
            if (b.c_[n].is_zero()) continue;
            r.add(m + n, a.c_[m] * b.c_[n].bar_pow(m));
        }
    }
    return r;
}

NcForm operator*(const TwoPointFn& f, const NcForm& w) {
    NcForm r(w.cap_);
    for (int n = 0; n <= w.cap_; ++n) r.c_[n] = f * w.c_[n];
    return r;
}

NcForm NcForm::scaled(const Rational& c) const { return TwoPointFn(c) * *this; }

bool NcForm::operator==(const NcForm& o) const { return (*this - o).is_zero(); }

NcForm NcForm::d() const {
    NcForm r(cap_);
    for (int n = 0; n <= cap_; ++n) {
        const TwoPointFn& f = c_[n];
        if (f.is_zero()) continue;
        // d(fθⁿ) = (f̄ − (−1)ⁿ f) θ^{n+1}
        r.add(n + 1, f.bar() - (n % 2 ? -f : f));
    }
    return r;
}

double NcForm::magnitude() const {
    double m = 0;
    for (const auto& f : c_) m = std::max(m, fn_magnitude(f));
    return m;
}

std::string NcForm::str() const {
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n <= cap_; ++n) {
        if (c_[n].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[n].str();
        if (n == 1) os << "θ";
        if (n > 1) os << "θ^" << n;
    }
    return first ? "0" : os.str();
}

NcForm nc_mul(const NcForm& a, const NcForm& b) { return a * b; }
NcForm nc_d(const NcForm& w) { return w.d(); }

PerpTable PerpTable::standard_table() {
    PerpTable p;
    p.name = "standard";
    p.standard = true;
    p.rule = [](int m, int n) { return TwoPointFn(Rational(2 * (m % 2 ? 1 : -1) * m * n)); };
    return p;
}

PerpTable PerpTable::from_rule(std::string name, std::function<TwoPointFn(int, int)> rule) {
    PerpTable p;
    p.name = std::move(name);
    p.rule = std::move(rule);
    return p;
}

NcForm nc_perp(const PerpTable& p, const NcForm& a, const NcForm& b) {
    NcForm r(std::max(a.cap(), b.cap()));
    for (int m : a.degrees()) {
        if (m == 0) continue;
        for (int n : b.degrees()) {
            if (n == 0) continue;
            r.add(m + n - 2, a.coeff(m) * b.coeff(n).bar_pow(m) * p(m, n));
        }
    }
    return r;
}

NcForm nc_inner_delta(const PerpTable& p, const NcForm& w) {
    return nc_perp(p, NcForm::theta_pow(1, Rational(1), w.cap()), w);
}

NcForm nc_perp_theta_leibnizator(const PerpTable& p, const NcForm& w, const NcForm& e) {
    NcForm th = NcForm::theta_pow(1, Rational(1), std::max(w.cap(), e.cap()));
    auto perp_th = [&](const NcForm& x) { return nc_perp(p, x, th); };
    NcForm r(th.cap());
    for (int m : w.degrees()) {
        NcForm wm = w.part(m);
        NcForm t = perp_th(wm * e) - perp_th(wm) * e;
        r += (m % 2) ? t + wm * perp_th(e) : t - wm * perp_th(e);
    }
    return r;
}

NcForm nc_connection(const PerpTable& p, const NcForm& w, const NcForm& e) {
    if (!w.coeff(0).is_zero()) throw DegreeError("covariant derivative along a degree 0 element");
    return nc_perp_theta_leibnizator(p, w, e).scaled(-kHalf);
}

NcForm nc_j(const PerpTable& p, const NcForm& w, const NcForm& z) {
    for (int n : z.degrees())
        if (n != 1) throw DegreeError("j takes a 1-form argument");
    return nc_perp(p, w, z).scaled(kHalf);
}

NcForm nc_sigma(const PerpTable& p, const NcForm& w, const NcForm& e, const NcForm& z) {
    NcForm r(std::max({w.cap(), e.cap(), z.cap()}));
    for (int m : w.degrees()) {
        NcForm wm = w.part(m);
        NcForm t = nc_j(p, wm * e, z);
        NcForm u = wm * nc_j(p, e, z);
        r += (m % 2) ? t + u : t - u;
    }
    return r;
}

TwoPointFn nc_pairing(const PerpTable& p, const NcForm& a, const NcForm& b) {
    if (a.degree() != 1 || b.degree() != 1) throw DegreeError("pairing takes 1-forms");
    return nc_perp(p, a, b).scaled(kHalf).coeff(0);
}

NcForm nc_hodge_laplacian(const PerpTable& p, const NcForm& w) {
    return nc_inner_delta(p, w).d() + nc_inner_delta(p, w.d());
}

NcForm nc_laplace_beltrami(const PerpTable& p, const NcForm& w) {
    NcForm th = NcForm::theta_pow(1, Rational(1), w.cap());
    NcForm nabla_th_th = nc_connection(p, th, th);
    return nc_connection(p, th, nc_connection(p, th, w)) - nc_connection(p, nabla_th_th, w);
}

NcForm nc_torsion(const PerpTable& p, const NcForm& w) {
    NcForm th = NcForm::theta_pow(1, Rational(1), w.cap());
    return th * nc_connection(p, th, w) - w.d();
}

NcTensor NcTensor::product(const NcForm& a, const NcForm& b) {
    NcTensor t;
    for (int m : a.degrees())
        for (int n : b.degrees()) t.add(m, n, a.coeff(m) * b.coeff(n).bar_pow(m));
    return t;
}

void NcTensor::add(int m, int n, const TwoPointFn& f) {
    if (f.is_zero()) return;
    auto [it, fresh] = terms_.emplace(std::make_pair(m, n), f);
    if (!fresh) {
        it->second += f;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NcTensor& NcTensor::operator+=(const NcTensor& o) {
    for (const auto& [k, f] : o.terms_) add(k.first, k.second, f);
    return *this;
}

NcTensor& NcTensor::operator-=(const NcTensor& o) {
    for (const auto& [k, f] : o.terms_) add(k.first, k.second, -f);
    return *this;
}

NcTensor NcTensor::scaled(const Rational& c) const {
    NcTensor r;
    for (const auto& [k, f] : terms_) r.add(k.first, k.second, f * TwoPointFn(c));
    return r;
}

double NcTensor::magnitude() const {
    double m = 0;
    for (const auto& [k, f] : terms_) m = std::max(m, fn_magnitude(f));
    return m;
}

std::string NcTensor::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, f] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << f.str() << " θ^" << k.first << "⊗θ^" << k.second;
    }
    return os.str();
}

NcTensor nc_metric_g(int cap) {
    NcForm th = NcForm::theta_pow(1, Rational(1), cap);
    return NcTensor::product(th, th);
}

NcTensor nc_connection_tensor(const PerpTable& p, const NcForm& w, const NcTensor& t, int cap) {
    NcForm th = NcForm::theta_pow(1, Rational(1), cap);
    NcTensor r;
    for (const auto& [k, f] : t.terms()) {
        NcForm eta = NcForm::theta_pow(k.first, f, cap);
        NcForm zeta = NcForm::theta_pow(k.second, Rational(1), cap);
        r += NcTensor::product(nc_connection(p, w, eta), zeta);
        r += NcTensor::product(nc_sigma(p, w, eta, th), nc_connection(p, th, zeta));
    }
    return r;
}

NcTensor nc_curvature(const PerpTable& p, const NcForm& w) {
    NcForm th = NcForm::theta_pow(1, Rational(1), w.cap());
    // ∇w = θ⊗∇_θ w, normalised with functions on the left
    NcTensor nw = NcTensor::product(th, nc_connection(p, th, w));
    NcTensor r;
    for (const auto& [k, f] : nw.terms()) {
        NcForm left = NcForm::theta_pow(k.first, f, w.cap());
        NcForm right = NcForm::theta_pow(k.second, Rational(1), w.cap());
        r += NcTensor::product(left.d(), right);
        r -= NcTensor::product(left * th, nc_connection(p, th, right));
    }
    return r;
}

NcConnectionData nc_connection_data(const PerpTable& p, int cap) {
    NcConnectionData c;
    c.table = p;
    c.nabla = [p](const NcForm& w, const NcForm& e) { return nc_connection(p, w, e); };
    c.sigma = [p](const NcForm& w, const NcForm& e, const NcForm& z) { return nc_sigma(p, w, e, z); };
    c.pairing = [p](const NcForm& a, const NcForm& b) { return nc_pairing(p, a, b); };
    c.metric_g = nc_metric_g(cap);
    return c;
}

std::vector<NcForm> nc_basis(int max_deg, int cap) {
    std::vector<NcForm> r;
    for (int n = 0; n <= max_deg; ++n) {
        r.push_back(NcForm::theta_pow(n, TwoPointFn(Rational(1), Rational(0)), cap));
        r.push_back(NcForm::theta_pow(n, TwoPointFn(Rational(0), Rational(1)), cap));
    }
    return r;
}

}  // namespace rdga
