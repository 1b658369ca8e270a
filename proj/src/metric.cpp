#include "rdga/metric.hpp"

#include <bit>
#include <cmath>

#include "rdga/errors.hpp"

namespace rdga {

Scalar determinant(const ScalarMatrix& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Scalar acc = m[0][0] - m[0][0];
    for (size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        ScalarMatrix minor;
        for (size_t r = 1; r < n; ++r) {
            std::vector<Scalar> row;
            for (size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        Scalar t = m[0][c] * determinant(minor);
        acc = (c % 2) ? acc - t : acc + t;
    }
    return acc;
}

ScalarMatrix invert(const ScalarMatrix& m) {
    size_t n = m.size();
    ScalarMatrix a = m;
    ScalarMatrix inv(n);
    Scalar zero = m[0][0] - m[0][0];
    for (size_t i = 0; i < n; ++i) inv[i].assign(n, zero);
    // the ring's unit, obtained from any nonzero entry
    Scalar any;
    bool found = false;
    for (size_t i = 0; i < n && !found; ++i)
        for (size_t j = 0; j < n && !found; ++j)
            if (!m[i][j].is_zero()) {
                any = m[i][j];
                found = true;
            }
    if (!found) throw NotInvertible("zero matrix");
    Scalar one = any.is_jet() ? Scalar(Jet(any.jet().context(), Real(1))) : any * any.inverse();
    for (size_t i = 0; i < n; ++i) inv[i][i] = one;

    for (size_t col = 0; col < n; ++col) {
        size_t piv = n;
        double best = -1;
        for (size_t r = col; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            double w = a[r][col].is_jet() ? std::fabs(static_cast<double>(a[r][col].jet().constant())) : 1.0;
            if (a[r][col].is_jet() && w < 1e-20) continue;
            if (w > best) {
                best = w;
                piv = r;
            }
            if (!a[r][col].is_jet()) break;
        }
        if (piv == n) throw NotInvertible("singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Scalar p = a[col][col].inverse();
        for (size_t k = 0; k < n; ++k) {
            a[col][k] = p * a[col][k];
            inv[col][k] = p * inv[col][k];
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Scalar f = a[r][col];
            for (size_t k = 0; k < n; ++k) {
                a[r][k] -= f * a[col][k];
                inv[r][k] -= f * inv[col][k];
            }
        }
    }
    return inv;
}

Metric::Metric(ChartPtr chart, ScalarMatrix g) : chart_(std::move(chart)), g_(std::move(g)) {
    int n = chart_->n;
    if (static_cast<int>(g_.size()) != n) throw InvalidMetric("metric has wrong size");
    for (const auto& row : g_)
        if (static_cast<int>(row.size()) != n) throw InvalidMetric("metric has wrong size");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(g_[i][j] - g_[j][i]).is_zero()) throw InvalidMetric("metric is not symmetric");
    try {
        ginv_ = invert(g_);
    } catch (const NotInvertible&) {
        throw InvalidMetric("metric is singular");
    }
    invertible_ = true;
}

Metric Metric::from_pairing(ChartPtr chart, ScalarMatrix pairing) {
    Metric m;
    m.chart_ = std::move(chart);
    m.ginv_ = std::move(pairing);
    int n = m.chart_->n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(m.ginv_[i][j] - m.ginv_[j][i]).is_zero()) throw InvalidMetric("pairing is not symmetric");
    try {
        m.g_ = invert(m.ginv_);
        m.invertible_ = true;
    } catch (const NotInvertible&) {
        m.invertible_ = false;
    }
    return m;
}

const Scalar& Metric::g(int i, int j) const {
    if (!invertible_) throw InvalidMetric("pairing is degenerate, no metric g");
    return g_[i][j];
}

const ScalarMatrix& Metric::g_matrix() const {
    if (!invertible_) throw InvalidMetric("pairing is degenerate, no metric g");
    return g_;
}

namespace {
void require_degree(const Form& w, int d, const char* what) {
    if (!w.is_homogeneous() || (!w.is_zero() && w.degree() != d))
        throw DegreeError(std::string(what) + " expects a form of degree " + std::to_string(d));
}
}  // namespace

Scalar metric_pairing(const Metric& m, const Form& w, const Form& e) {
    require_degree(w, 1, "metric_pairing");
    require_degree(e, 1, "metric_pairing");
    Scalar acc = m.chart()->ring.zero();
    for (const auto& [I, a] : w.terms())
        for (const auto& [J, b] : e.terms()) {
            int i = std::countr_zero(I), j = std::countr_zero(J);
            const Scalar& gij = m.ginv(i, j);
            if (gij.is_zero()) continue;
            acc += a * gij * b;
        }
    return acc;
}

std::vector<Scalar> raise(const Metric& m, const Form& w) {
    require_degree(w, 1, "raise");
    int n = m.dim();
    std::vector<Scalar> X(n, m.chart()->ring.zero());
    for (const auto& [I, a] : w.terms()) {
        int j = std::countr_zero(I);
        for (int i = 0; i < n; ++i)
            if (!m.ginv(i, j).is_zero()) X[i] += m.ginv(i, j) * a;
    }
    return X;
}

Form interior(const Metric& m, const Form& w, const Form& e) {
    std::vector<Scalar> X = raise(m, w);
    Form r(e.chart());
    for (int i = 0; i < m.dim(); ++i)
        if (!X[i].is_zero()) r += X[i] * e.contract(i);
    return r;
}

Form interior_multi(const Metric& m, const Form& w, const Form& e) {
    Form r(e.chart());
    for (const auto& [I, a] : w.terms()) {
        // i_{dx^{i1}} ∘ ... ∘ i_{dx^{im}}: apply the last factor first
        Form cur = e;
        std::vector<int> idx;
        for (int i = 0; i < m.dim(); ++i)
            if (I & (1u << i)) idx.push_back(i);
        for (auto it = idx.rbegin(); it != idx.rend() && !cur.is_zero(); ++it)
            cur = interior(m, Form::dx(m.chart(), *it), cur);
        r += a * cur;
    }
    return r;
}

Form perp(const Metric& m, const Form& w, const Form& e) {
    Form r(w.chart() ? w.chart() : e.chart());
    int n = m.dim();
    for (const auto& [I, a] : w.terms()) {
        if (popcount(I) == 0) continue;
        for (const auto& [J, b] : e.terms()) {
            if (popcount(J) == 0) continue;
            Scalar ab = a * b;
            int p = 0;
            for (int i = 0; i < n; ++i) {
                if (!(I & (1u << i))) continue;
                ++p;
                int q = 0;
                for (int j = 0; j < n; ++j) {
                    if (!(J & (1u << j))) continue;
                    ++q;
                    const Scalar& gij = m.ginv(i, j);
                    if (gij.is_zero()) continue;
                    std::uint32_t Ir = I & ~(1u << i), Jr = J & ~(1u << j);
                    if (Ir & Jr) continue;
                    int s = ((p + q) % 2 ? -1 : 1) * merge_sign(Ir, Jr);
                    Scalar c = gij * ab;
                    r.add(Ir | Jr, s < 0 ? -c : c);
                }
            }
        }
    }
    return r;
}

Form lie_derivative(const Metric& m, const Form& w, const Form& e) {
    return by_parts(w, [&](const Form& x, int p) {
        Form r = perp(m, x, e.d());
        Form t = perp(m, x, e).d();
        return (p % 2) ? r + t : r - t;
    });
}

TensorForm metric_tensor(const Metric& m) {
    TensorForm t(m.chart());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) t.add(1u << i, 1u << j, m.g(i, j));
    return t;
}

Christoffel::Christoffel(const Metric& m) : n_(m.dim()) {
    int n = n_;
    // dg[l][i][j] = ∂_l g_ij
    std::vector<Scalar> dg;
    dg.reserve(n * n * n);
    for (int l = 0; l < n; ++l)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) dg.push_back(m.g(i, j).partial(l));
    auto D = [&](int l, int i, int j) -> const Scalar& { return dg[(l * n + i) * n + j]; };
    Scalar zero = m.chart()->ring.zero();
    G_.assign(n * n * n, zero);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (j < i) {
                    G_[(k * n + i) * n + j] = G_[(k * n + j) * n + i];
                    continue;
                }
                Scalar acc = zero;
                for (int l = 0; l < n; ++l) {
                    if (m.ginv(k, l).is_zero()) continue;
                    Scalar s = D(i, j, l) + D(j, i, l) - D(l, i, j);
                    if (s.is_zero()) continue;
                    acc += m.ginv(k, l) * s;
                }
                G_[(k * n + i) * n + j] = acc.scaled(Rational(1, 2));
            }
}

Form oracle_nabla_coord(const Christoffel& G, int i, const Form& w) {
    int n = G.dim();
    Form r(w.chart());
    for (const auto& [I, a] : w.terms()) {
        Scalar da = a.partial(i);
        r.add(I, da);
        for (int p = 0; p < n; ++p) {
            std::uint32_t bit = 1u << p;
            if (!(I & bit)) continue;
            std::uint32_t rest = I & ~bit;
            int s = merge_sign(bit, rest);  // dx^I = s dx^p ∧ dx^rest
            for (int j = 0; j < n; ++j) {
                std::uint32_t bj = 1u << j;
                if (rest & bj) continue;
                const Scalar& g = G(p, i, j);
                if (g.is_zero()) continue;
                int s2 = s * merge_sign(bj, rest);
                Scalar c = g * a;
                r.add(rest | bj, s2 < 0 ? c : -c);
            }
        }
    }
    return r;
}

Form oracle_nabla(const Metric& m, const Christoffel& G, const Form& w, const Form& e) {
    std::vector<Scalar> X = raise(m, w);
    Form r(e.chart());
    for (int i = 0; i < m.dim(); ++i)
        if (!X[i].is_zero()) r += X[i] * oracle_nabla_coord(G, i, e);
    return r;
}

Form oracle_curvature(const Metric& m, const Christoffel& G, const Form& w, const Form& e, const Form& z) {
    std::vector<Scalar> X = raise(m, w), Y = raise(m, e);
    Form r(z.chart());
    int n = m.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || X[i].is_zero() || Y[j].is_zero()) continue;
            Form c = oracle_nabla_coord(G, i, oracle_nabla_coord(G, j, z)) -
                     oracle_nabla_coord(G, j, oracle_nabla_coord(G, i, z));
            r += (X[i] * Y[j]) * c;
        }
    return r;
}

TensorForm oracle_ricci(const Metric& m, const Christoffel& G) {
    int n = m.dim();
    Scalar zero = m.chart()->ring.zero();
    TensorForm t(m.chart());
    // R^l_{kij} = ∂_i Γ^l_{jk} − ∂_j Γ^l_{ik} + Γ^l_{im} Γ^m_{jk} − Γ^l_{jm} Γ^m_{ik}
    auto R = [&](int l, int k, int i, int j) {
        Scalar acc = G(l, j, k).partial(i) - G(l, i, k).partial(j);
        for (int mm = 0; mm < n; ++mm) acc += G(l, i, mm) * G(mm, j, k) - G(l, j, mm) * G(mm, i, k);
        return acc;
    };
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) {
            Scalar ric = zero;
            for (int i = 0; i < n; ++i) ric += R(i, k, i, j);
            t.add(1u << k, 1u << j, ric);
        }
    return t;
}

}  // namespace rdga
