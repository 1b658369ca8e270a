#include "rdga/classical.hpp"

#include <bit>
#include <sstream>

namespace rdga {

Decomposer<Form> form_decomposer() {
    Decomposer<Form> dec;
    dec.split_first = [](const Form& w) {
        std::vector<std::pair<Form, Form>> out;
        const ChartPtr& ch = w.chart();
        for (const auto& [mask, a] : w.terms()) {
            int i = std::countr_zero(mask);
            out.emplace_back(Form::basis(ch, 1u << i, a), Form::basis(ch, mask & ~(1u << i), ch->ring.one()));
        }
        return out;
    };
    dec.split_last = [](const Form& w) {
        std::vector<std::pair<Form, Form>> out;
        const ChartPtr& ch = w.chart();
        for (const auto& [mask, a] : w.terms()) {
            int i = 31 - std::countl_zero(mask);
            out.emplace_back(Form::basis(ch, mask & ~(1u << i), a), Form::dx(ch, i));
        }
        return out;
    };
    dec.adb = [](const Form& w) {
        std::vector<std::pair<Form, Form>> out;
        const ChartPtr& ch = w.chart();
        for (const auto& [mask, a] : w.terms())
            out.emplace_back(Form::scalar(ch, a), Form::coordinate(ch, std::countr_zero(mask)));
        return out;
    };
    return dec;
}

Decomposer<NcForm> nc_decomposer(int cap) {
    using Pairs = std::vector<std::pair<NcForm, NcForm>>;
    Decomposer<NcForm> dec;
    dec.split_first = [cap](const NcForm& w) {
        int m = w.degree();
        return Pairs{{NcForm::theta_pow(1, w.coeff(m), cap), NcForm::theta_pow(m - 1, 1, cap)}};
    };
    dec.split_last = [cap](const NcForm& w) {
        int m = w.degree();
        return Pairs{{NcForm::theta_pow(m - 1, w.coeff(m), cap), NcForm::theta_pow(1, 1, cap)}};
    };
    // fθ = (f·(1,−1)) d e_y since d e_y = (1,−1)θ
    dec.adb = [cap](const NcForm& w) {
        TwoPointFn a = w.coeff(1) * TwoPointFn(Rational(1), Rational(-1));
        return Pairs{{NcForm::function(a, cap), NcForm::function(TwoPointFn(Rational(0), Rational(1)), cap)}};
    };
    return dec;
}

std::vector<Form> form_pool(const ChartPtr& chart, Sampler& s, int per_degree, int max_poly_deg) {
    std::vector<Form> out;
    for (int p = 0; p <= chart->n; ++p)
        for (int k = 0; k < per_degree; ++k) out.push_back(s.form(chart, p, max_poly_deg));
    return out;
}

std::vector<Form> function_pool(const ChartPtr& chart, Sampler& s, int count, int max_poly_deg) {
    std::vector<Form> out;
    for (int k = 0; k < count; ++k) out.push_back(Form::scalar(chart, s.nonzero_scalar(chart->ring, max_poly_deg)));
    return out;
}

HostBilinear<Form> metric_perp_map(const MetricPtr& m) {
    return [m](const Form& a, const Form& b) { return perp(*m, a, b); };
}

ClassicalCleft classical_cleft(const Codifferential& d, const Rational& lambda, std::uint64_t seed, double tol) {
    const ChartPtr& chart = d.metric().chart();
    Sampler s(seed);
    std::vector<Form> probes = form_pool(chart, s, 1, 1);
    std::vector<Form> fns = function_pool(chart, s, 2, 2);
    ClassicalCleft cc{d, construct_flat_cleft<Form>(metric_perp_map(d.metric_ptr()), d.as_map(), lambda, probes, fns,
                                                    tol)};
    return cc;
}

ClassicalCleft classical_cleft(const MetricPtr& m, const Rational& lambda, std::uint64_t seed, double tol) {
    return classical_cleft(Codifferential::divergence(m), lambda, seed, tol);
}

namespace {

using EF = ExtElement<Form>;

EF commutator(const Cocycle<Form>& c, const EF& x, const EF& y, bool anti) {
    EF xy = ext_mul(c, x, y), yx = ext_mul(c, y, x);
    return anti ? xy + yx : xy - yx;
}

}  // namespace

Report riequant_relations(const ClassicalCleft& cc, std::uint64_t seed, int samples, double tol) {
    const Codifferential& d = cc.delta;
    const Metric& m = d.metric();
    const ChartPtr& chart = m.chart();
    const Cocycle<Form>& c = cc.data.cocycle;
    const Rational lam = c.lambda;
    Report rep;
    rep.suite = "extension";
    Sampler s(seed);
    const Form zero(chart);
    const EF th = EF::theta(zero);

    Check fc("riequant.function_form_commutator", tol, seed), ff("riequant.form_anticommutator", tol, seed),
        tf("riequant.theta_commutes_function", tol, seed), tw("riequant.theta_anticommutes_form", tol, seed),
        tt("riequant.theta_square", tol, seed), dfun("riequant.d_function", tol, seed),
        done("riequant.d_one_form", tol, seed), levi("cleftclasslevi.bracket_is_twice_levi", tol, seed),
        higher("cleftclasslevi.bracket_is_twice_levi_higher", tol, seed),
        sym("cleftclass.symmetric_part", tol, seed), tc("cleftclass.torsion_metric_relation", tol, seed),
        rec("cleft.reconstruct_round_trip", tol, seed);

    const bool invertible = m.invertible();
    TensorForm ric;
    if (invertible) ric = oracle_ricci(m, d.christoffel());
    HostBilinear<Form> recon = cleft_reconstruct<Form>(form_decomposer(), c.Delta, tol);
    auto lie = [&m](const Form& w, const Form& e) { return lie_derivative(m, w, e); };
    auto j = [&m](const Form& w, const Form& z) {
        return (perp(m, z, w) + perp(m, w, z)).scaled(Rational(1, 2));
    };
    tt.add(ext_mul(c, th, th).magnitude());

    for (int k = 0; k < samples; ++k) {
        Form a = s.form(chart, 0);
        Form w = s.form(chart, 1), e = s.form(chart, 1);
        Form anyw = s.any_form(chart);
        EF A = EF::embed(a), W = EF::embed(w), E1 = EF::embed(e);
        EF expect{zero, Form::scalar(chart, metric_pairing(m, a.d(), w)).scaled(lam)};
        fc.add((commutator(c, A, W, false) - expect).magnitude());
        EF expect2{zero, (lie(w, e) + interior(m, e, w.d())).scaled(lam)};
        ff.add((commutator(c, W, E1, true) - expect2).magnitude());
        tf.add(commutator(c, A, th, false).magnitude());
        tw.add(commutator(c, W, th, true).magnitude());
        // d_·a = da − (λ/2)(Δ_LB a)θ′
        EF da{a.d(), laplace_beltrami(d, a).scaled(-lam / 2)};
        dfun.add((ext_d(c, A) - da).magnitude());
        if (invertible) {
            Form corr = laplace_beltrami(d, w) - oracle_ricci_map(m, ric, w);
            EF dw{w.d(), corr.scaled(lam / 2)};
            done.add((ext_d(c, W) - dw).magnitude());
        }
        levi.add((c.bracket(w, e) - levi_connection(d, w, e).scaled(2)).magnitude());
        higher.add((c.bracket(anyw, e) - levi_higher(d, anyw, e).scaled(2)).magnitude());
        Form nab = (c.bracket(w, e) + c.bracket(e, w)).scaled(Rational(1, 2));
        Form rhs = j(w.d(), e) + j(e.d(), w) + Form::scalar(chart, metric_pairing(m, w, e)).d();
        sym.add((nab - rhs).magnitude());
        Form z = s.form(chart, 1);
        Scalar tcr = torsion(d, z, w, e) + torsion(d, z, e, w) - metric_compat(d, z, w, e);
        tc.add(tcr.magnitude());
        rec.add((recon(anyw, e) - c.bracket(anyw, e)).magnitude());
    }
    for (const Check* ch : {&fc, &ff, &tf, &tw, &tt, &dfun, &levi, &higher, &sym, &tc, &rec}) rep.add(ch->result());
    if (invertible) rep.add(done.result());
    return rep;
}

std::string riequant_table(const ClassicalCleft& cc) {
    const Codifferential& d = cc.delta;
    const Metric& m = d.metric();
    const ChartPtr& ch = m.chart();
    const Cocycle<Form>& c = cc.data.cocycle;
    const auto& names = ch->names;
    const Form zero(ch);
    std::ostringstream os;
    os << "Ω̃ relations on generators (λ = " << c.lambda.get_str() << ")\n";
    for (int i = 0; i < ch->n; ++i)
        for (int k = 0; k < ch->n; ++k) {
            EF x = EF::embed(Form::coordinate(ch, i)), w = EF::embed(Form::dx(ch, k));
            os << "  [" << names[i] << ", d" << names[k] << "] = " << commutator(c, x, w, false).str() << "\n";
        }
    for (int i = 0; i < ch->n; ++i)
        for (int k = i; k < ch->n; ++k) {
            EF a = EF::embed(Form::dx(ch, i)), b = EF::embed(Form::dx(ch, k));
            os << "  {d" << names[i] << ", d" << names[k] << "} = " << commutator(c, a, b, true).str() << "\n";
        }
    for (int i = 0; i < ch->n; ++i)
        os << "  d·" << names[i] << " = " << ext_d(c, EF::embed(Form::coordinate(ch, i))).str() << "\n";
    for (int i = 0; i < ch->n; ++i)
        os << "  d·d" << names[i] << " = " << ext_d(c, EF::embed(Form::dx(ch, i))).str() << "\n";
    os << "  [a, θ′] = 0, {ω, θ′} = 0, θ′² = 0\n";
    os << "Ω̃̃ relations on generators\n";
    using E2 = Ext2Element<Form>;
    for (int i = 0; i < ch->n; ++i)
        for (int k = i; k < ch->n; ++k) {
            E2 a = E2::embed(Form::dx(ch, i)), b = E2::embed(Form::dx(ch, k));
            os << "  d" << names[i] << "·d" << names[k] << " = " << ext2_mul(cc.data, a, b).str() << "\n";
        }
    for (int i = 0; i < ch->n; ++i)
        os << "  d·d" << names[i] << " = " << ext2_d(cc.data, E2::embed(Form::dx(ch, i))).str() << "\n";
    os << "  d·θ′ = dθ′, θ′² = θ′dθ′ = dθ′θ′ = 0\n";
    return os.str();
}

}  // namespace rdga
