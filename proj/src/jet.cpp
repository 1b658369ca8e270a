#include "rdga/jet.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <iomanip>
#include <sstream>

#include "rdga/errors.hpp"

namespace rdga {

Real to_real(const Rational& q) {
    Real n(q.get_num().get_str());
    Real d(q.get_den().get_str());
    return n / d;
}

namespace {
void enumerate(int nvars, int order, std::vector<int>& cur, int var, int left,
               std::vector<std::vector<int>>& out) {
    if (var == nvars) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= left; ++e) {
        cur[var] = e;
        enumerate(nvars, order, cur, var + 1, left - e, out);
    }
    cur[var] = 0;
}
}  // namespace

int JetContext::index_of(const std::vector<int>& e) const {
    int d = 0;
    for (int x : e) d += x;
    if (d > order) return -1;
    for (int i = 0; i < size(); ++i)
        if (exps[i] == e) return i;
    return -1;
}

std::shared_ptr<const JetContext> JetContext::make(int nvars, int order, std::vector<Real> base) {
    if (order < 1) throw Error("jet order must be positive");
    if (static_cast<int>(base.size()) != nvars) throw Error("jet base point has wrong dimension");
    auto ctx = std::make_shared<JetContext>();
    ctx->nvars = nvars;
    ctx->order = order;
    ctx->base = std::move(base);
    std::vector<std::vector<int>> all;
    std::vector<int> cur(nvars, 0);
    enumerate(nvars, order, cur, 0, order, all);
    std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        int da = 0, db = 0;
        for (int x : a) da += x;
        for (int x : b) db += x;
        return da < db;
    });
    ctx->exps = all;
    std::map<std::vector<int>, int> where;
    for (int i = 0; i < ctx->size(); ++i) {
        int d = 0;
        for (int x : all[i]) d += x;
        ctx->deg.push_back(d);
        where[all[i]] = i;
    }
    int n = ctx->size();
    ctx->mul.assign(static_cast<size_t>(n) * n, -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (ctx->deg[i] + ctx->deg[j] > order) continue;
            std::vector<int> e(nvars);
            for (int v = 0; v < nvars; ++v) e[v] = all[i][v] + all[j][v];
            ctx->mul[static_cast<size_t>(i) * n + j] = where[e];
        }
    ctx->raise.assign(nvars, std::vector<int>(n, -1));
    for (int v = 0; v < nvars; ++v)
        for (int i = 0; i < n; ++i) {
            if (ctx->deg[i] + 1 > order) continue;
            std::vector<int> e = all[i];
            e[v] += 1;
            ctx->raise[v][i] = where[e];
        }
    return ctx;
}

bool JetContext::same(const JetContext& o) const {
    return this == &o || (nvars == o.nvars && order == o.order && base == o.base);
}

Jet::Jet(std::shared_ptr<const JetContext> ctx, const Real& c) : ctx_(std::move(ctx)) {
    c_.assign(ctx_->size(), Real(0));
    c_[0] = c;
    valid_ = ctx_->order;
}

Jet Jet::coordinate(std::shared_ptr<const JetContext> ctx, int i) {
    Jet j(ctx, ctx->base[i]);
    std::vector<int> e(ctx->nvars, 0);
    e[i] = 1;
    j.c_[ctx->index_of(e)] = 1;
    return j;
}

void Jet::check_same(const Jet& o) const {
    if (!ctx_ || !o.ctx_ || !ctx_->same(*o.ctx_)) throw MixedRing("jets with different base point or order");
}

Jet Jet::operator-() const {
    Jet r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

Jet operator+(const Jet& a, const Jet& b) {
    a.check_same(b);
    Jet r(a);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.valid_ = std::min(a.valid_, b.valid_);
    return r;
}

Jet operator-(const Jet& a, const Jet& b) {
    a.check_same(b);
    Jet r(a);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    r.valid_ = std::min(a.valid_, b.valid_);
    return r;
}

Jet operator*(const Jet& a, const Jet& b) {
    a.check_same(b);
    Jet r(a.ctx_, Real(0));
    int n = a.ctx_->size();
    const int* mul = a.ctx_->mul.data();
    for (int i = 0; i < n; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            int k = mul[static_cast<size_t>(i) * n + j];
            if (k < 0) break;  // degrees are sorted, later j only grow
            if (b.c_[j] == 0) continue;
            r.c_[k] += a.c_[i] * b.c_[j];
        }
    }
    r.valid_ = std::min(a.valid_, b.valid_);
    return r;
}

Jet Jet::scaled(const Real& s) const {
    Jet r(*this);
    for (auto& x : r.c_) x *= s;
    return r;
}

Jet Jet::partial(int v) const {
    Jet r(ctx_, Real(0));
    const auto& up = ctx_->raise[v];
    for (int i = 0; i < ctx_->size(); ++i) {
        int k = up[i];
        if (k < 0) continue;
        r.c_[i] = c_[k] * (ctx_->exps[k][v]);
    }
    r.valid_ = valid_ - 1;
    return r;
}

Jet Jet::compose(const std::vector<Real>& w) const {
    Jet h(*this);
    h.c_[0] = 0;
    Jet r(ctx_, w[0]);
    Jet p(ctx_, Real(1));
    for (size_t k = 1; k < w.size() && static_cast<int>(k) <= ctx_->order; ++k) {
        p = p * h;
        r = r + p.scaled(w[k]);
    }
    r.valid_ = valid_;
    return r;
}

Jet Jet::inverse() const {
    Real c0 = c_[0];
    if (abs(c0) < Real(1e-20)) throw NotInvertible("jet with vanishing constant term");
    std::vector<Real> w(ctx_->order + 1);
    Real t = 1 / c0;
    for (auto& x : w) {
        x = t;
        t = -t / c0;
    }
    return compose(w);
}

Jet Jet::sqrt() const {
    Real c0 = c_[0];
    if (c0 <= 0) throw NotPositive("jet square root needs a positive constant term");
    std::vector<Real> w(ctx_->order + 1);
    // binomial(1/2, k) c0^(1/2 - k)
    Real b = 1;
    Real s = boost::multiprecision::sqrt(c0);
    for (int k = 0; k <= ctx_->order; ++k) {
        w[k] = b * s;
        b = b * (Real(1) / 2 - k) / (k + 1);
        s = s / c0;
    }
    return compose(w);
}

Jet Jet::sin() const {
    Real s = boost::multiprecision::sin(c_[0]), c = boost::multiprecision::cos(c_[0]);
    Real cyc[4] = {s, c, -s, -c};
    std::vector<Real> w(ctx_->order + 1);
    Real f = 1;
    for (int k = 0; k <= ctx_->order; ++k) {
        if (k) f *= k;
        w[k] = cyc[k % 4] / f;
    }
    return compose(w);
}

Jet Jet::cos() const {
    Real s = boost::multiprecision::sin(c_[0]), c = boost::multiprecision::cos(c_[0]);
    Real cyc[4] = {c, -s, -c, s};
    std::vector<Real> w(ctx_->order + 1);
    Real f = 1;
    for (int k = 0; k <= ctx_->order; ++k) {
        if (k) f *= k;
        w[k] = cyc[k % 4] / f;
    }
    return compose(w);
}

Jet Jet::exp() const {
    Real e = boost::multiprecision::exp(c_[0]);
    std::vector<Real> w(ctx_->order + 1);
    Real f = 1;
    for (int k = 0; k <= ctx_->order; ++k) {
        if (k) f *= k;
        w[k] = e / f;
    }
    return compose(w);
}

bool Jet::is_zero(double eps) const {
    for (const auto& x : c_)
        if (abs(x) > eps) return false;
    return true;
}

double Jet::magnitude() const {
    if (valid_ < 0) return std::numeric_limits<double>::infinity();
    Real m = 0;
    for (int i = 0; i < ctx_->size(); ++i) {
        if (ctx_->deg[i] > valid_) break;
        m = std::max(m, Real(abs(c_[i])));
    }
    return static_cast<double>(m);
}

std::string Jet::str(const std::vector<std::string>& names) const {
    std::ostringstream os;
    os << "jet[";
    bool first = true;
    for (int i = 0; i < ctx_->size(); ++i) {
        if (ctx_->deg[i] > valid_) break;
        if (abs(c_[i]) < Real(1e-20)) continue;
        if (!first) os << " + ";
        first = false;
        os << std::setprecision(12) << static_cast<double>(c_[i]);
        for (int v = 0; v < ctx_->nvars; ++v) {
            int e = ctx_->exps[i][v];
            if (!e) continue;
            std::string name = v < static_cast<int>(names.size()) ? names[v] : "x" + std::to_string(v);
            double b = static_cast<double>(ctx_->base[v]);
            if (b != 0) {
                std::ostringstream bs;
                bs << std::setprecision(12) << std::fabs(b);
                name = "(" + name + (b > 0 ? "-" : "+") + bs.str() + ")";
            }
            os << "*" << name;
            if (e > 1) os << "^" << e;
        }
    }
    if (first) os << "0";
    os << "]";
    return os.str();
}

}  // namespace rdga
