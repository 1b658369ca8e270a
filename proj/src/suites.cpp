#include "rdga/suites.hpp"

#include <sstream>

#include "rdga/classical.hpp"
#include "rdga/errors.hpp"

namespace rdga {

namespace {

Form signed_by(int p, const Form& w) { return p % 2 ? -w : w; }

std::string tol_text(double tol) {
    std::ostringstream os;
    os << tol;
    return os.str();
}

void describe(Report& rep, const Geometry& g, const SuiteConfig& cfg) {
    rep.environment["geometry"] = g.def.name;
    rep.environment["backend"] = g.jet() ? "jet(order " + std::to_string(g.chart->ring.order()) + ")" : "rational";
    rep.environment["tolerance"] = tol_text(cfg.tol(g));
    rep.environment["seed"] = std::to_string(cfg.seed);
    rep.environment["samples"] = std::to_string(cfg.samples);
    rep.environment["lambda"] = cfg.lambda.get_str();
    rep.environment["cap"] = std::to_string(cfg.cap);
}

void add_all(Report& rep, std::initializer_list<const Check*> cs) {
    for (const Check* c : cs) rep.add(c->result());
}
void add_all(Report& rep, const std::vector<CheckResult>& rs) {
    for (const CheckResult& r : rs) rep.add(r);
}

// a 2-form built from the first two coordinates, scaled by a
Form plane(const ChartPtr& ch, const Scalar& a) { return a * (Form::dx(ch, 0) * Form::dx(ch, 1)); }

Report conformal_suite(const Geometry& g, const Codifferential& d, const SuiteConfig& cfg) {
    const double tol = cfg.tol(g);
    Report rep;
    add_all(rep, conformal_check(d, *g.conformal, ConformalMode::Strong, cfg.seed, cfg.samples, tol));
    // negative control: α shifted by 1 must be rejected
    ConformalData wrong = *g.conformal;
    wrong.alpha = wrong.alpha + g.chart->ring.one();
    Check neg("conformal.wrong_alpha_rejected", tol, cfg.seed);
    bool rejected = false;
    for (const CheckResult& r : conformal_check(d, wrong, ConformalMode::Strong, cfg.seed, cfg.samples, tol))
        rejected = rejected || !r.pass;
    neg.add(rejected ? 0.0 : 1.0);
    neg.note("α + 1 in place of α");
    rep.add(neg.result());
    return rep;
}

}  // namespace

Report riemann_suite(const Geometry& g, const SuiteConfig& cfg) {
    const double tol = cfg.tol(g);
    const std::uint64_t seed = cfg.seed;
    const ChartPtr& ch = g.chart;
    const Metric& m = *g.metric;
    const int n = ch->n;
    const Codifferential d = Codifferential::divergence(g.metric);
    const FormMap delta = d.as_map();
    const Christoffel& G = d.christoffel();
    Sampler s(seed);
    Report rep;
    rep.suite = "riemann";

    auto L = [&](const Form& w, const Form& e) { return L_delta(d, w, e); };
    auto nabla = [&](const Form& w, const Form& e) { return levi_connection(d, w, e); };
    auto i1 = [&](const Form& w, const Form& e) { return interior(m, w, e); };
    auto imulti = [&](const Form& w, const Form& e) { return interior_multi(m, w, e); };
    auto lap = [&](const Form& w) { return hodge_laplacian(d, w); };

    Check l1("forms.L1", tol, seed), l2("forms.L2", tol, seed), assoc("forms.wedge_associativity", tol, seed),
        gcomm("forms.graded_commutativity", tol, seed), reg("riemann.regularity", tol, seed),
        dlie("riemann.delta_lie", tol, seed), sch1("riemann.schouten_first", tol, seed),
        sch2("riemann.schouten_second", tol, seed), i2("riemann.i2_lie", tol, seed),
        sder("riemann.schouten_derivation", tol, seed), sexp("riemann.schouten_expansion", tol, seed),
        tri("riemann.delta_triple", tol, seed), four("riemann.four_term_perp", tol, seed),
        cpm("riemann.connpm", tol, seed), com("riemann.comrel", tol, seed), lh("riemann.liehigher", tol, seed),
        zt("riemann.zero_torsion", tol, seed), lmod("riemann.lie_mod", tol, seed),
        dsq("riemann.delta_squared", tol, seed), lapd("riemann.laplacian_commutes_d", tol, seed),
        lcoord("riemann.levi_oracle_coordinate", tol, seed), l2f("riemann.levi_oracle_two_forms", tol, seed),
        tors("riemann.torsion_free", tol, seed), mc("riemann.metric_compatible", tol, seed),
        sym("riemann.symanti", tol, seed), curv("riemann.curvature_oracle", tol, seed),
        curvt("riemann.curvature_tensorial", tol, seed), wt("riemann.weitzenbock_tensorial", tol, seed),
        wr("riemann.weitzenbock_ricci", tol, seed), lbl("riemann.laplace_beltrami_leibnizator", tol, seed),
        lbg("riemann.laplace_beltrami_metric", tol, seed), rd("riemann.ricci_delta_oracle", tol, seed),
        rc("riemann.ricci_curvature_oracle", tol, seed), fib("riemann.bijection_fiber", tol, seed),
        rt("riemann.theta_round_trip", tol, seed);

    // a second degree −1 map that is not a derivation, for the tautological identity
    const Form x0 = Form::coordinate(ch, 0);
    const FormMap other = [&](const Form& w) { return x0 * delta(w) + delta(x0 * w * x0); };
    FormMap Delta = [&](const Form& w) { return delta(w).d() + delta(w.d()); };
    FormMap lb = [&](const Form& w) { return laplace_beltrami(d, w); };
    const TensorForm ric = oracle_ricci(m, G);
    const HostBilinear<Form> perp_map = metric_perp_map(g.metric);

    for (int k = 0; k < cfg.samples; ++k) {
        Form w = s.any_form(ch), e = s.any_form(ch), z = s.any_form(ch);
        const int p = w.degree(), q = e.degree();
        Form a = s.form(ch, 0), b = s.form(ch, 0);
        Form w1 = s.form(ch, 1), e1 = s.form(ch, 1), z1 = s.form(ch, 1), v1 = s.form(ch, 1);

        for (const FormMap* B : {&delta, &other}) {
            Form r = leibnizator(*B, -1, w * e, z) + leibnizator(*B, -1, w, e) * z - leibnizator(*B, -1, w, e * z) -
                     signed_by(p, w * leibnizator(*B, -1, e, z));
            l1.add(r.magnitude());
        }
        Form r2 = leibnizator(Delta, 0, w, e) -
                  (L(w, e).d() + L(w.d(), e) + signed_by(p, L(w, e.d())));
        l2.add(r2.magnitude());
        assoc.add(((w * e) * z - w * (e * z)).magnitude());
        gcomm.add((w * e - signed_by(p * q, e * w)).magnitude());
        reg.add((delta(a * w) - a * delta(w) - i1(a.d(), w)).magnitude());
        dlie.add((delta(i1(w1, e)) + i1(w1, delta(e)) - imulti(w1.d(), e)).magnitude());
        FormMap idz = [&](const Form& x) { return imulti(z1.d(), x); };
        sch1.add((i1(z1, L(w, e)) + L(i1(z1, w), e) + signed_by(p, L(w, i1(z1, e))) - leibnizator(idz, -2, w, e))
                     .magnitude());
        Form s2 = i1(z1, L(w1, e1)) - (i1(w1, i1(e1, z1).d()) - i1(e1, i1(w1, z1).d()) - i1(e1, i1(w1, z1.d())));
        sch2.add(s2.magnitude());
        FormMap i12 = [&](const Form& x) { return imulti(z1 * v1, x); };
        i2.add((leibnizator(i12, -2, w, e) - signed_by(p, i1(z1, w) * i1(v1, e) - i1(v1, w) * i1(z1, e))).magnitude());
        sder.add((L(w, e * z) - L(w, e) * z - signed_by((p - 1) * q, e * L(w, z))).magnitude());
        {
            Form a1 = s.form(ch, 1), a2 = s.form(ch, 1), b1 = s.form(ch, 1), b2 = s.form(ch, 1);
            Form rhs = a2 * L(a1, b1) * b2 - a2 * L(a1, b2) * b1 - a1 * L(a2, b1) * b2 + a1 * L(a2, b2) * b1;
            sexp.add((L(a1 * a2, b1 * b2) - rhs).magnitude());
        }
        Form t7 = delta(w * e * z) - (delta(w * e) * z + signed_by(p, w * delta(e * z)) +
                                      signed_by((p - 1) * q, e * delta(w * z)) - delta(w) * e * z -
                                      signed_by(p, w * delta(e) * z) - signed_by(p + q, w * e * delta(z)));
        tri.add(t7.magnitude());
        four.add(perp_four_term(perp_map, w, e, z).magnitude());
        cpm.add((nabla(w1, e1) - nabla(e1, w1) - L(w1, e1)).magnitude());
        Form sym_rhs = lie_derivative(m, w1, e1) + lie_derivative(m, e1, w1) - Form::scalar(ch, metric_pairing(m, w1, e1)).d();
        cpm.add((nabla(w1, e1) + nabla(e1, w1) - sym_rhs).magnitude());
        com.add((i1(e1, nabla(w1, z)) - nabla(w1, i1(e1, z)) + i1(nabla(w1, e1), z)).magnitude());
        if (n >= 2) {
            Form e2 = s.form(ch, 2), z2 = s.form(ch, 2);
            Form lhs = imulti(z2, L(w1, e2));
            Form rhs = i1(w1, imulti(e2, z2).d()) - imulti(e2, i1(w1, z2).d()) - imulti(e2, i1(w1, z2.d()));
            lh.add((lhs - rhs).magnitude());
            l2f.add((nabla(w1, e2) - oracle_nabla(m, G, w1, e2)).magnitude());
        }
        {
            Form ga(ch), gw(ch);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    Form dxi = Form::dx(ch, i), dxj = Form::dx(ch, j);
                    ga += m.g(i, j) * (dxi * nabla(dxj, a.d()));
                    gw += m.g(i, j) * (dxi * nabla(dxj, w));
                }
            zt.add(ga.magnitude());
            zt.add((gw - w.d()).magnitude());
        }
        lmod.add((lie_derivative(m, w1, a * e) - a * lie_derivative(m, w1, e) -
                  Form::scalar(ch, metric_pairing(m, w1, a.d())) * e)
                     .magnitude());
        dsq.add(delta(delta(w)).magnitude());
        lapd.add((lap(w.d()) - lap(w).d()).magnitude());
        tors.add(torsion(d, w1, e1, z1).magnitude());
        mc.add(metric_compat(d, w1, e1, z1).magnitude());
        Scalar lhs_s = torsion(d, z1, w1, e1) + torsion(d, z1, e1, w1) - metric_compat(d, z1, w1, e1);
        Scalar rhs_s = metric_pairing(m, z1, nabla(w1, e1) + nabla(e1, w1) - sym_rhs);
        sym.add((lhs_s - rhs_s).magnitude());
        curv.add((curvature(d, w1, e1, z) - oracle_curvature(m, G, w1, e1, z)).magnitude());
        curvt.add((curvature(d, a * w1, e1, z) - a * curvature(d, w1, e1, z)).magnitude());
        curvt.add((curvature(d, w1, a * e1, z) - a * curvature(d, w1, e1, z)).magnitude());
        curvt.add((curvature(d, w1, e1, a * z) - a * curvature(d, w1, e1, z)).magnitude());
        wt.add((weitzenbock(d, a * w) - a * weitzenbock(d, w)).magnitude());
        wr.add((weitzenbock(d, w1) - oracle_ricci_map(m, ric, w1)).magnitude());
        lbl.add((leibnizator(lb, 0, a, w) - nabla(a.d(), w).scaled(2)).magnitude());
        (void)b;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            lcoord.add((nabla(Form::dx(ch, i), Form::dx(ch, j)) - oracle_nabla(m, G, Form::dx(ch, i), Form::dx(ch, j)))
                           .magnitude());
    // the tensor extension probes L_B(a,ω) = 2∇_{da}ω first and throws past tol
    try {
        lbg.add(extend_to_tensor(d, lb, metric_tensor(m), tol).magnitude());
    } catch (const LeibnizatorMismatch& e) {
        lbg.fail(e.what());
    }
    try {
        rd.add((ricci_via_delta(d, tol) - ric).magnitude());
    } catch (const LeibnizatorMismatch& e) {
        rd.fail(e.what());
    }
    rc.add((ricci_via_curvature(d) - ric).magnitude());

    // Θ is constant on δ + ⌊_v fibres and recovers ((,), ∇) from δ∇
    const ThetaData base = theta_map(d);
    for (int k = 0; k < 5; ++k) {
        std::vector<Scalar> v;
        for (int i = 0; i < n; ++i) v.push_back(s.scalar(ch->ring, 2));
        fib.add(theta_difference(base, theta_map(Codifferential::with_interior(d, v))));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            rt.add((base.pairing[i][j] - m.ginv(i, j)).magnitude());
            rt.add((base.nabla[i][j] - oracle_nabla(m, G, Form::dx(ch, i), Form::dx(ch, j))).magnitude());
        }

    add_all(rep, {&l1, &l2, &assoc, &gcomm, &reg, &dlie, &sch1, &sch2, &i2, &sder, &sexp, &tri, &four, &cpm, &com,
                  &zt, &lmod, &dsq, &lapd, &lcoord, &tors, &mc, &sym, &curv, &curvt, &wt, &wr, &lbl, &lbg, &rd,
                  &rc, &fib, &rt});
    if (n >= 2) add_all(rep, {&lh, &l2f});

    // the Hodge codifferential agrees with the divergence one when √det g exists in the ring
    try {
        Check hv("riemann.hodge_vs_divergence", tol, seed);
        Sampler hs(seed + 1);
        for (int k = 0; k < std::min(cfg.samples, 20); ++k) {
            Form w = hs.any_form(ch);
            hv.add((hodge_delta(m, 1, w) - delta(w)).magnitude());
        }
        rep.add(hv.result());
    } catch (const SqrtUnavailable&) {
        rep.environment["hodge"] = "skipped: no exact square root of det g in this ring";
    }
    if (g.conformal) rep.merge(conformal_suite(g, d, cfg));
    describe(rep, g, cfg);
    rep.sort();
    return rep;
}

Report extension_suite(const Geometry& g, const SuiteConfig& cfg) {
    const double tol = cfg.tol(g);
    const std::uint64_t seed = cfg.seed;
    const ChartPtr& ch = g.chart;
    const Metric& m = *g.metric;
    const int n = ch->n;
    const Codifferential d = Codifferential::divergence(g.metric);
    const HostMap<Form> delta = d.as_map();
    const HostBilinear<Form> perp = metric_perp_map(g.metric);
    Report rep;
    rep.suite = "extension";

    ClassicalCleft cc = classical_cleft(d, cfg.lambda, seed, tol);
    const Cocycle<Form>& c = cc.data.cocycle;
    rep.merge(riequant_relations(cc, seed, cfg.samples, tol));

    Sampler s(seed + 7);
    std::vector<Form> pool = form_pool(ch, s, 2, 1);
    std::vector<Form> functions = function_pool(ch, s, 2, 2);
    std::vector<Form> probes = form_pool(ch, s, 1, 1);
    std::vector<std::vector<Form>> triples;
    for (int k = 0; k < cfg.samples; ++k) triples.push_back({s.any_form(ch), s.any_form(ch), s.any_form(ch)});

    add_all(rep, cocycle_check(c, triples, tol, seed, "extension.cocycle"));
    // negative control: ⟦ω,η⟧ + ω·δη is no longer a cocycle
    {
        Cocycle<Form> bad = c;
        bad.bracket = [c, delta](const Form& w, const Form& e) { return c.bracket(w, e) + w * delta(e); };
        Check neg("extension.corrupted_bracket_rejected", tol, seed);
        bool rejected = false;
        for (const CheckResult& r : cocycle_check(bad, triples, tol, seed, "corrupt")) rejected = rejected || !r.pass;
        neg.add(rejected ? 0.0 : 1.0);
        neg.note("bracket shifted by ω·δη");
        rep.add(neg.result());
    }
    add_all(rep, extension_soundness(c, pool, functions, cfg.samples, tol, seed, "extension.ext"));
    add_all(rep, ext2_soundness(cc.data, pool, cfg.samples, tol, seed, "extension.ext2"));
    add_all(rep, cleft_identities(c, pool, functions, cfg.samples, tol, seed, "extension.cleft"));

    // flat non-cleft variant and its morphism to the cleft one
    using EF = ExtElement<Form>;
    Cocycle<Form> noncleft = flat_noncleft_cocycle<Form>(perp, cfg.lambda);
    add_all(rep, cocycle_check(noncleft, triples, tol, seed, "omegadelta2.cocycle"));
    Cocycle<Form> shifted = cocycle_sum(noncleft, coboundary_from_delta<Form>(delta, cfg.lambda));
    Check shift("omegadelta2.coboundary_shift", tol, seed), mor("omegadelta2.morphism", tol, seed),
        ext("extension.extract_morphism_round_trip", tol, seed);
    auto phi = [&](const EF& x) { return morphism_apply<Form>(delta, cfg.lambda, x); };
    for (int k = 0; k < cfg.samples; ++k) {
        const auto& t = triples[k];
        shift.add((shifted.bracket(t[0], t[1]) - c.bracket(t[0], t[1])).magnitude());
        shift.add((shifted.Delta(t[0]) - c.Delta(t[0])).magnitude());
        EF x = draw_ext(s, pool), y = draw_ext(s, pool);
        mor.add((phi(ext_mul(noncleft, x, y)) - ext_mul(c, phi(x), phi(y))).magnitude());
        mor.add((phi(ext_d(noncleft, x)) - ext_d(c, phi(x))).magnitude());
    }
    add_all(rep, {&shift, &mor});
    if (cfg.lambda != 0) {
        HostMap<Form> recovered = extract_morphism_delta<Form>(phi, cfg.lambda, probes, tol);
        for (const Form& w : pool) ext.add((recovered(w) - delta(w)).magnitude());
        rep.add(ext.result());
    }

    // gauge: B = i_F for three 2-forms F, each a degree −2 bimodule map
    if (n >= 2) {
        const Scalar one = ch->ring.one();
        std::vector<std::pair<std::string, Form>> gauges{
            {"constant", plane(ch, one)},
            {"coordinate", plane(ch, ch->ring.var(0))},
            {"polynomial", plane(ch, one + ch->ring.var(1) * ch->ring.var(1))}};
        if (n >= 3) gauges[2].second += Form::dx(ch, 1) * Form::dx(ch, 2);
        for (const auto& [name, F] : gauges) {
            HostMap<Form> B = [&m, F](const Form& w) { return interior_multi(m, F, w); };
            Check gd("perpB." + name + ".Delta_unchanged", tol, seed), gb("perpB." + name + ".bracket_unchanged", tol, seed),
                gn("perpB." + name + ".perp_changed", tol, seed);
            try {
                auto [p2, d2] = perp_gauge<Form>(B, perp, delta, probes, functions, tol);
                ConstructData<Form> c2 = construct_flat_cleft<Form>(p2, d2, cfg.lambda, probes, functions, tol);
                double changed = 0;
                for (int k = 0; k < cfg.samples; ++k) {
                    const auto& t = triples[k];
                    gd.add((c2.cocycle.Delta(t[0]) - c.Delta(t[0])).magnitude());
                    gb.add((c2.cocycle.bracket(t[0], t[1]) - c.bracket(t[0], t[1])).magnitude());
                    changed = std::max(changed, (p2(t[0], t[1]) - perp(t[0], t[1])).magnitude());
                    changed = std::max(changed, (d2(t[0]) - delta(t[0])).magnitude());
                }
                gn.add(changed > 0 ? 0.0 : 1.0);
                gn.note("B = i_F, F = " + F.str());
            } catch (const Error& e) {
                gd.fail(e.what());
                gb.fail(e.what());
                gn.fail(e.what());
            }
            add_all(rep, {&gd, &gb, &gn});
        }
    }
    describe(rep, g, cfg);
    rep.sort();
    return rep;
}

Report verify(const Geometry& g, const std::string& selector, const SuiteConfig& cfg) {
    Report rep;
    rep.suite = selector;
    if (selector == "riemann" || selector == "all") rep.merge(riemann_suite(g, cfg));
    if (selector == "extension" || selector == "all") rep.merge(extension_suite(g, cfg));
    if (selector == "timext" || selector == "all") rep.merge(timext_suite(g, cfg));
    if (selector != "riemann" && selector != "extension" && selector != "timext" && selector != "all")
        throw UsageError("unknown suite '" + selector + "' (riemann | extension | timext | all)");
    rep.suite = selector;
    describe(rep, g, cfg);
    rep.sort();
    return rep;
}

Report ricci_report(const Geometry& g, const SuiteConfig& cfg) {
    const double tol = cfg.tol(g);
    const ChartPtr& ch = g.chart;
    const Metric& m = *g.metric;
    const int n = ch->n;
    const Codifferential d = Codifferential::divergence(g.metric);
    const TensorForm via_delta = ricci_via_delta(d, tol);
    const TensorForm oracle = oracle_ricci(m, d.christoffel());
    Report rep;
    rep.suite = "ricci";
    Check cd("ricci.delta_vs_oracle", tol, cfg.seed), cc("ricci.curvature_vs_oracle", tol, cfg.seed);
    cd.add((via_delta - oracle).magnitude());
    cc.add((ricci_via_curvature(d) - oracle).magnitude());
    add_all(rep, {&cd, &cc});
    std::ostringstream os;
    os << "Ricci = −½Δ(g) against the Christoffel oracle on " << g.def.name << "\n";
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const Scalar a = via_delta.coeff(1u << i, 1u << j), b = oracle.coeff(1u << i, 1u << j);
            os << "  Ric[" << ch->names[i] << "," << ch->names[j] << "]  −½Δ(g): " << a.str(ch->names)
               << "  oracle: " << b.str(ch->names) << "  difference: " << (a - b).str(ch->names) << "\n";
        }
    if (g.def.einstein) {
        const Rational k = *g.def.einstein;
        Check ein("ricci.einstein", tol, cfg.seed);
        ein.add((via_delta - metric_tensor(m).scaled(k)).magnitude());
        ein.note("Ricci = " + k.get_str() + "·g");
        rep.add(ein.result());
        os << "  expected Ricci = " << k.get_str() << "·g\n";
    }
    rep.tables.push_back(os.str());
    describe(rep, g, cfg);
    rep.sort();
    return rep;
}

Report quantize_report(const Geometry& g, const SuiteConfig& cfg) {
    const double tol = cfg.tol(g);
    const ChartPtr& ch = g.chart;
    ClassicalCleft cc = classical_cleft(g.metric, cfg.lambda, cfg.seed, tol);
    Report rep = riequant_relations(cc, cfg.seed, cfg.samples, tol);
    rep.suite = "quantize";
    Sampler s(cfg.seed + 3);
    std::vector<std::vector<Form>> triples;
    for (int k = 0; k < cfg.samples; ++k) triples.push_back({s.any_form(ch), s.any_form(ch), s.any_form(ch)});
    add_all(rep, cocycle_check(cc.data.cocycle, triples, tol, cfg.seed, "quantize.cocycle"));
    rep.tables.push_back(riequant_table(cc));
    describe(rep, g, cfg);
    rep.environment["lambda_convention"] =
        "relations use [x,dx] = λθ′; the comparison with the bicrossproduct model flips the sign of λ";
    rep.sort();
    return rep;
}

}  // namespace rdga
