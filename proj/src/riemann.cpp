#include "rdga/riemann.hpp"

#include <bit>

#include "rdga/errors.hpp"
#include "rdga/report.hpp"

namespace rdga {

Codifferential Codifferential::divergence(MetricPtr m) {
    Codifferential d;
    d.mode_ = Mode::Divergence;
    d.metric_ = m;
    auto G = std::make_shared<const Christoffel>(*m);
    d.gamma_ = G;
    d.apply_ = [m, G](const Form& w) { return divergence_delta(*m, *G, w); };
    return d;
}

Codifferential Codifferential::hodge(MetricPtr m, int orientation) {
    Codifferential d;
    d.mode_ = Mode::Hodge;
    d.metric_ = m;
    d.apply_ = [m, orientation](const Form& w) { return hodge_delta(*m, orientation, w); };
    return d;
}

Codifferential Codifferential::with_interior(const Codifferential& base, std::vector<Scalar> v) {
    Codifferential d = base;
    d.mode_ = Mode::DivergencePlusInterior;
    FormMap inner = base.apply_;
    d.apply_ = [inner, v = std::move(v)](const Form& w) { return inner(w) + interior_coderivation(v, w); };
    return d;
}

Codifferential Codifferential::custom(MetricPtr m, FormMap f) {
    Codifferential d;
    d.mode_ = Mode::Custom;
    d.metric_ = std::move(m);
    d.apply_ = std::move(f);
    return d;
}

const Christoffel& Codifferential::christoffel() const {
    if (!gamma_) throw Error("codifferential has no Christoffel data");
    return *gamma_;
}

Form divergence_delta(const Metric& m, const Christoffel& G, const Form& w) {
    int n = m.dim();
    Form r(w.chart());
    for (int i = 0; i < n; ++i) {
        Form nw;
        bool have = false;
        for (int l = 0; l < n; ++l) {
            const Scalar& gil = m.ginv(i, l);
            if (gil.is_zero()) continue;
            if (!have) {
                nw = oracle_nabla_coord(G, i, w);
                have = true;
            }
            r += gil * nw.contract(l);
        }
    }
    return r;
}

namespace {

std::vector<std::uint32_t> masks_of_size(int n, int p) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        if (std::popcount(m) == p) out.push_back(m);
    return out;
}

std::vector<int> bits(std::uint32_t m, int n) {
    std::vector<int> b;
    for (int i = 0; i < n; ++i)
        if (m & (1u << i)) b.push_back(i);
    return b;
}

}  // namespace

Form hodge_star(const Metric& m, int orientation, const Form& w) {
    int n = m.dim();
    Scalar vol = determinant(m.g_matrix()).sqrt();
    if (orientation < 0) vol = -vol;
    std::uint32_t full = (1u << n) - 1;
    Form r(w.chart());
    for (const auto& [I, a] : w.terms()) {
        int p = std::popcount(I);
        std::vector<int> bi = bits(I, n);
        for (std::uint32_t J : masks_of_size(n, p)) {
            Scalar minor = m.chart()->ring.one();
            if (p > 0) {
                std::vector<int> bj = bits(J, n);
                ScalarMatrix sub(p);
                for (int r2 = 0; r2 < p; ++r2)
                    for (int c = 0; c < p; ++c) sub[r2].push_back(m.ginv(bi[r2], bj[c]));
                minor = determinant(sub);
            }
            if (minor.is_zero()) continue;
            std::uint32_t Jc = full & ~J;
            Scalar c = a * vol * minor;
            r.add(Jc, merge_sign(J, Jc) < 0 ? -c : c);
        }
    }
    return r;
}

Form hodge_delta(const Metric& m, int orientation, const Form& w) {
    int n = m.dim();
    return by_parts(w, [&](const Form& x, int p) {
        if (p == 0) return Form(x.chart());
        Form y = hodge_star(m, orientation, hodge_star(m, orientation, x).d());
        int q = n - p + 1;
        int s = ((p + 1) % 2 ? -1 : 1) * ((q * (n - q)) % 2 ? -1 : 1);
        return s < 0 ? -y : y;
    });
}

Form interior_coderivation(const std::vector<Scalar>& v, const Form& w) {
    Form r(w.chart());
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) r += v[i] * w.contract(static_cast<int>(i));
    return r;
}

Form L_delta(const Codifferential& d, const Form& w, const Form& e) {
    return leibnizator(d.as_map(), -1, w, e);
}

namespace {
void require_one_form(const Form& w, const char* what) {
    if (!w.is_homogeneous() || (!w.is_zero() && w.degree() != 1))
        throw DegreeError(std::string(what) + " expects a 1-form");
}
}  // namespace

Form levi_connection(const Codifferential& d, const Form& w, const Form& e) {
    require_one_form(w, "levi_connection");
    const Metric& m = d.metric();
    Form r = L_delta(d, w, e) + lie_derivative(m, w, e) + perp(m, w.d(), e);
    return r.scaled(Rational(1, 2));
}

Form levi_higher(const Codifferential& d, const Form& w, const Form& e) {
    const Metric& m = d.metric();
    return by_parts(w, [&](const Form& x, int p) {
        Form r = L_delta(d, x, e) + lie_derivative(m, x, e);
        Form t = perp(m, x.d(), e);
        r = (p % 2) ? r + t : r - t;
        return r.scaled(Rational(1, 2));
    });
}

Form levi_higher_expansion(const Codifferential& d, const std::vector<Form>& factors, const Form& e) {
    Form r(e.chart());
    size_t m = factors.size();
    for (size_t i = 0; i < m; ++i) {
        Form prefix = Form::constant(e.chart(), Rational(1));
        for (size_t k = 0; k < m; ++k)
            if (k != i) prefix = prefix * factors[k];
        Form t = prefix * levi_connection(d, factors[i], e);
        r = (i % 2) ? r - t : r + t;
    }
    return r;
}

Scalar torsion(const Codifferential& d, const Form& w, const Form& e, const Form& z) {
    require_one_form(w, "torsion");
    require_one_form(e, "torsion");
    require_one_form(z, "torsion");
    const Metric& m = d.metric();
    Scalar t = metric_pairing(m, w, levi_connection(d, e, z)) - metric_pairing(m, e, levi_connection(d, w, z));
    Form ii = interior(m, w, interior(m, e, z.d()));
    return t - ii.scalar_part();
}

Scalar metric_compat(const Codifferential& d, const Form& w, const Form& e, const Form& z) {
    require_one_form(w, "metric_compat");
    require_one_form(e, "metric_compat");
    require_one_form(z, "metric_compat");
    const Metric& m = d.metric();
    Form ez = Form::scalar(w.chart(), metric_pairing(m, e, z)).d();
    return metric_pairing(m, w, ez) - metric_pairing(m, levi_connection(d, w, e), z) -
           metric_pairing(m, e, levi_connection(d, w, z));
}

Form curvature(const Codifferential& d, const Form& w, const Form& e, const Form& z) {
    require_one_form(w, "curvature");
    require_one_form(e, "curvature");
    return levi_connection(d, w, levi_connection(d, e, z)) - levi_connection(d, e, levi_connection(d, w, z)) -
           levi_connection(d, L_delta(d, w, e), z);
}

Form hodge_laplacian(const Codifferential& d, const Form& w) { return d(w).d() + d(w.d()); }

Form laplace_beltrami(const Codifferential& d, const Form& w) {
    const Metric& m = d.metric();
    int n = m.dim();
    const ChartPtr& c = m.chart();
    Form r(w.chart());
    std::vector<Form> nw(n);
    for (int j = 0; j < n; ++j) nw[j] = levi_connection(d, Form::dx(c, j), w);
    for (int i = 0; i < n; ++i) {
        Form dxi = Form::dx(c, i);
        for (int j = 0; j < n; ++j) {
            const Scalar& gij = m.g(i, j);
            if (gij.is_zero()) continue;
            Form t = levi_connection(d, dxi, nw[j]) - levi_connection(d, levi_connection(d, dxi, Form::dx(c, j)), w);
            r += gij * t;
        }
    }
    return r;
}

Form weitzenbock(const Codifferential& d, const Form& w) { return laplace_beltrami(d, w) - hodge_laplacian(d, w); }

Form oracle_ricci_map(const Metric& m, const TensorForm& ric, const Form& w) {
    int n = m.dim();
    Form r(w.chart());
    for (const auto& [K, wk] : w.terms()) {
        if (std::popcount(K) != 1) throw DegreeError("Ricci map acts on 1-forms");
        int k = std::countr_zero(K);
        for (int j = 0; j < n; ++j) {
            Scalar acc = m.chart()->ring.zero();
            for (int a = 0; a < n; ++a) {
                if (m.ginv(k, a).is_zero()) continue;
                acc += m.ginv(k, a) * ric.coeff(1u << a, 1u << j);
            }
            r.add(1u << j, acc * wk);
        }
    }
    return r;
}

TensorForm extend_to_pair(const Codifferential& d, const FormMap& B, const Form& w, const Form& e) {
    const Metric& m = d.metric();
    int n = m.dim();
    const ChartPtr& c = m.chart();
    TensorForm t = TensorForm::product(B(w), e) + TensorForm::product(w, B(e));
    std::vector<Form> nw(n), ne(n);
    for (int a = 0; a < n; ++a) {
        nw[a] = levi_higher(d, Form::dx(c, a), w);
        ne[a] = levi_higher(d, Form::dx(c, a), e);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const Scalar& gab = m.g(a, b);
            if (gab.is_zero()) continue;
            t += TensorForm::product(gab * nw[a], ne[b]).scaled(2);
        }
    return t;
}

TensorForm extend_to_tensor(const Codifferential& d, const FormMap& B, const TensorForm& t, double tol) {
    const ChartPtr& c = d.metric().chart();
    int n = c->n;
    // probe the second-order Leibniz rule
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            Form a = Form::coordinate(c, i) * Form::coordinate(c, k);
            for (int j = 0; j < n; ++j) {
                Form w = Form::coordinate(c, (j + 1) % n) * Form::dx(c, j);
                Form res = leibnizator(B, 0, a, w) - levi_connection(d, a.d(), w).scaled(2);
                if (res.magnitude() > tol)
                    throw LeibnizatorMismatch("L_B(a,ω) differs from 2∇_{da}ω by " + residual_text(res.magnitude()));
            }
        }
    TensorForm out(c);
    for (const auto& [key, a] : t.terms())
        out += extend_to_pair(d, B, Form::basis(c, key.first, a), Form::basis(c, key.second, c->ring.one()));
    return out;
}

TensorForm ricci_via_delta(const Codifferential& d, double tol) {
    FormMap lap = [d](const Form& w) { return hodge_laplacian(d, w); };
    return extend_to_tensor(d, lap, metric_tensor(d.metric()), tol).scaled(Rational(-1, 2));
}

TensorForm ricci_via_curvature(const Codifferential& d) {
    const Metric& m = d.metric();
    int n = m.dim();
    const ChartPtr& c = m.chart();
    TensorForm t(c);
    for (int a = 0; a < n; ++a) {
        Form Ya(c);
        for (int b = 0; b < n; ++b) Ya += m.g(a, b) * Form::dx(c, b);
        Form Z(c);
        for (int cc = 0; cc < n; ++cc)
            for (int dd = 0; dd < n; ++dd) {
                const Scalar& g = m.g(cc, dd);
                if (g.is_zero()) continue;
                Z += g * curvature(d, Ya, Form::dx(c, cc), Form::dx(c, dd));
            }
        t += TensorForm::product(Form::dx(c, a), Z);
    }
    return t;
}

ThetaData theta_map(const Codifferential& d) {
    const ChartPtr& c = d.metric().chart();
    int n = c->n;
    FormMap delta = d.as_map();
    ThetaData out;
    out.pairing.assign(n, std::vector<Scalar>(n, c->ring.zero()));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Form l = leibnizator(delta, -1, Form::coordinate(c, i), Form::dx(c, j));
            if (!l.is_homogeneous() || (!l.is_zero() && l.degree() != 0))
                throw NotRegular("L_δ(x^i, dx^j) is not a function");
            out.pairing[i][j] = l.scalar_part();
        }
    // probes: L_δ(a, fω) = f L_δ(a, ω) and derivation property in a
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            Form xi = Form::coordinate(c, i), xk = Form::coordinate(c, k);
            for (int j = 0; j < n; ++j) {
                Form w = Form::dx(c, j) * Form::constant(c, 1);
                Form lhs = leibnizator(delta, -1, xi, xk * w);
                Form rhs = xk * leibnizator(delta, -1, xi, w);
                Form lhs2 = leibnizator(delta, -1, xi * xk, w);
                Form rhs2 = xi * leibnizator(delta, -1, xk, w) + xk * leibnizator(delta, -1, xi, w);
                if ((lhs - rhs).magnitude() > 1e-8 || (lhs2 - rhs2).magnitude() > 1e-8)
                    throw NotRegular("L_δ(a,·) is not tensorial");
            }
        }
    auto pm = std::make_shared<const Metric>(Metric::from_pairing(c, out.pairing));
    out.handle = Codifferential::custom(pm, delta);
    out.nabla.assign(n, std::vector<Form>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.nabla[i][j] = levi_connection(out.handle, Form::dx(c, i), Form::dx(c, j));
    return out;
}

double theta_difference(const ThetaData& a, const ThetaData& b) {
    double m = 0;
    size_t n = a.pairing.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            m = std::max(m, (a.pairing[i][j] - b.pairing[i][j]).magnitude());
            m = std::max(m, (a.nabla[i][j] - b.nabla[i][j]).magnitude());
        }
    return m;
}

}  // namespace rdga
