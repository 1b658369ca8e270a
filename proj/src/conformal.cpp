#include "rdga/conformal.hpp"

#include "rdga/errors.hpp"

namespace rdga {

namespace {

Form lie(const Metric& m, const Form& t, const Form& w) { return lie_derivative(m, t, w); }

Form i_of(const Metric& m, const Form& one_form, const Form& w) { return interior(m, one_form, w); }

// S(ω,η) = ω⊥dη − (−1)^{|ω|} d(ω⊥η) − (−1)^{|ω|} (dω)⊥η
Form S_op(const Metric& m, const Form& w, const Form& e) {
    return by_parts(w, [&](const Form& x, int p) {
        Form r = perp(m, x, e.d());
        Form t = perp(m, x, e).d() + perp(m, x.d(), e);
        return (p % 2) ? r + t : r - t;
    });
}

}  // namespace

Form conformal_defect(const Codifferential& d, const ConformalData& c, const Form& w) {
    const Metric& m = d.metric();
    Form dalpha = Form::scalar(w.chart(), c.alpha).d();
    Form comm = d(lie(m, c.tau, w)) - lie(m, c.tau, d(w));
    // i_{dα}(D − β)ω = (|ω| − β) i_{dα} ω
    Form corr = by_parts(w, [&](const Form& x, int p) {
        return i_of(m, dalpha, x).scaled(Rational(p) - c.beta);
    });
    return comm - c.alpha * d(w) - corr;
}

std::vector<CheckResult> conformal_check(const Codifferential& d, const ConformalData& c, ConformalMode mode,
                                         std::uint64_t seed, int samples, double tol) {
    const Metric& m = d.metric();
    const ChartPtr& ch = m.chart();
    int n = ch->n;
    Sampler S(seed);
    const Form& tau = c.tau;
    const Scalar& alpha = c.alpha;
    Form dalpha = Form::scalar(ch, alpha).d();
    Form a_form = Form::scalar(ch, alpha);

    Check deg1("conformal.delta_commutator.degree1", tol, seed);
    Check strong("conformal.delta_commutator.all_degrees", tol, seed);
    Check met("conformal.metric_identity", tol, seed);
    Check kill("conformal.killing_identity", tol, seed);
    Check tau_self("conformal.lie_tau_tau", tol, seed);
    Check alpha_div("conformal.alpha_from_divergence", tol, seed);
    Check beta_tr("conformal.beta_half_trace", tol, seed);
    Check grad("conformal.alpha_gradient_orthogonal", tol, seed);
    Check perp1("conformal.lie_of_perp", tol, seed);
    Check perp2("conformal.lie_of_S", tol, seed);
    Check leib("conformal.lie_of_leibnizator", tol, seed);
    Check lap("conformal.lie_laplacian_commutator", tol, seed);
    Check lint("conformal.lie_interior_commutator", tol, seed);

    // β = ½ (g¹, g²), α = δ∇τ/β, 𝓛_ττ = ατ, (τ, d(α − δτ/β)) = 0
    Scalar half_trace = ch->ring.zero();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) half_trace += m.g(i, j) * m.ginv(i, j);
    half_trace = half_trace.scaled(Rational(1, 2));
    beta_tr.add((half_trace - ch->ring.constant(c.beta)).magnitude());
    Scalar dt = d(tau).scalar_part();
    Scalar ratio = dt.scaled(1 / c.beta);
    alpha_div.add((ratio - alpha).magnitude());
    tau_self.add((lie(m, tau, tau) - alpha * tau).magnitude());
    grad.add(metric_pairing(m, tau, Form::scalar(ch, alpha - ratio).d()).magnitude());

    auto lap_op = [&](const Form& w) { return hodge_laplacian(d, w); };
    for (int s = 0; s < samples; ++s) {
        Form w1 = S.form(ch, 1);
        deg1.add(conformal_defect(d, c, w1).magnitude());
        if (mode == ConformalMode::Strong) strong.add(conformal_defect(d, c, S.any_form(ch)).magnitude());

        Form e1 = S.form(ch, 1);
        Scalar lhs = metric_pairing(m, lie(m, tau, w1), e1) + metric_pairing(m, w1, lie(m, tau, e1));
        Scalar rhs = metric_pairing(m, tau, Form::scalar(ch, metric_pairing(m, w1, e1)).d()) +
                     alpha * metric_pairing(m, w1, e1);
        met.add((lhs - rhs).magnitude());

        Form killing = levi_connection(d, w1, tau) - i_of(m, w1, tau.d()).scaled(Rational(1, 2)) -
                       (alpha * w1).scaled(Rational(1, 2));
        kill.add(killing.magnitude());

        Form w = S.any_form(ch), e = S.any_form(ch);
        int p = w.degree(), q = e.degree();
        Form pe = perp(m, w, e);
        Form r1 = lie(m, tau, pe) + alpha * pe - perp(m, lie(m, tau, w), e) - perp(m, w, lie(m, tau, e));
        perp1.add(r1.magnitude());

        Form Swe = S_op(m, w, e);
        Form r2 = lie(m, tau, Swe) + alpha * Swe - S_op(m, lie(m, tau, w), e) - S_op(m, w, lie(m, tau, e));
        Form rhs2 = dalpha * pe;
        r2 = (p % 2) ? r2 + rhs2 : r2 - rhs2;
        perp2.add(r2.magnitude());

        Form L = L_delta(d, w, e);
        Form r3 = lie(m, tau, L) + alpha * L - L_delta(d, lie(m, tau, w), e) - L_delta(d, w, lie(m, tau, e));
        Form t1 = (w * i_of(m, dalpha, e)).scaled(p);
        Form t2 = (i_of(m, dalpha, w) * e).scaled(q);
        r3 = (p % 2) ? r3 - t1 : r3 + t1;
        r3 = r3 + t2;
        leib.add(r3.magnitude());

        // [Δ,𝓛_τ] = αΔ + (D−β)𝓛_{dα} + (dα)δ + i_{dα}d
        Form lw = lie(m, dalpha, w);
        Form r4 = lap_op(lie(m, tau, w)) - lie(m, tau, lap_op(w)) - alpha * lap_op(w) -
                  lw.scaled(Rational(p) - c.beta) - dalpha * d(w) - i_of(m, dalpha, w.d());
        lap.add(r4.magnitude());

        // [i_η, 𝓛_τ] = α i_η − i_{𝓛_τ η}
        Form r5 = i_of(m, e1, lie(m, tau, w)) - lie(m, tau, i_of(m, e1, w)) - alpha * i_of(m, e1, w) +
                  i_of(m, lie(m, tau, e1), w);
        lint.add(r5.magnitude());
    }

    std::vector<CheckResult> out;
    for (Check* k : {&deg1, &met, &kill, &tau_self, &alpha_div, &beta_tr, &grad, &perp1, &perp2, &leib, &lap, &lint})
        out.push_back(k->result());
    if (mode == ConformalMode::Strong) out.push_back(strong.result());
    return out;
}

}  // namespace rdga
