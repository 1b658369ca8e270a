#include <sstream>

#include "rdga/classical.hpp"
#include "rdga/extension.hpp"
#include "rdga/ncdga.hpp"
#include "rdga/sampling.hpp"

namespace rdga {

namespace {

const Rational kHalf(1, 2);
constexpr int kQuotedDegree = 6;

NcForm theta(int cap) { return NcForm::theta_pow(1, Rational(1), cap); }
NcForm fn(const TwoPointFn& f, int cap) { return NcForm::function(f, cap); }

std::vector<TwoPointFn> basis_functions() { return {TwoPointFn(1, 0), TwoPointFn(0, 1)}; }

int top_degree(int cap) { return std::min(kQuotedDegree, cap - 1); }

// all fθⁿ with f ∈ {e_x, e_y} and n ≤ max_deg, paired with n
std::vector<std::pair<NcForm, int>> graded_basis(int max_deg, int cap) {
    std::vector<std::pair<NcForm, int>> r;
    for (int n = 0; n <= max_deg; ++n)
        for (const TwoPointFn& f : basis_functions()) r.emplace_back(NcForm::theta_pow(n, f, cap), n);
    return r;
}

NcForm sign_scaled(const NcForm& w, int parity) { return parity % 2 ? -w : w; }

void add_all(Report& rep, std::initializer_list<const Check*> cs) {
    for (const Check* c : cs) rep.add(c->result());
}

}  // namespace

Report nc_metric_checks(const PerpTable& p, int cap) {
    const double tol = 0;
    const std::uint64_t seed = 0;
    const NcForm th = theta(cap);
    const int top = top_degree(cap);
    Check delta("z2.delta_value", tol, seed), dsq("z2.delta_squared_module_map", tol, seed),
        dsq_nz("z2.delta_squared_nonzero", tol, seed), nth("z2.nabla_theta_value", tol, seed),
        nthth("z2.nabla_theta_theta", tol, seed), sig("z2.sigma_theta_value", tol, seed),
        sigth("z2.sigma_theta_theta", tol, seed), pair("z2.pairing_value", tol, seed),
        inv("z2.metric_inverse", tol, seed), cen("z2.metric_central", tol, seed), ng("z2.nabla_g", tol, seed),
        tor("z2.torsion", tol, seed), lap("z2.laplacian_value", tol, seed), lapi("z2.laplacian_inner", tol, seed),
        lb("z2.laplace_beltrami", tol, seed), lbf("z2.laplace_beltrami_formula", tol, seed),
        curv("z2.curvature", tol, seed), nhi("z2.nabla_higher_value", tol, seed),
        nll("z2.nabla_left_linear", tol, seed), bim("z2.leftbimod", tol, seed);

    auto nabla_th = [&](const NcForm& w) { return nc_connection(p, th, w); };
    for (const auto& [w, n] : graded_basis(top, cap)) {
        TwoPointFn f = w.coeff(n);
        delta.add((nc_inner_delta(p, w) - NcForm::theta_pow(n - 1 < 0 ? 0 : n - 1,
                                                            n == 0 ? TwoPointFn(0) : f.bar() * TwoPointFn(2 * n), cap))
                      .magnitude());
        for (const TwoPointFn& g : basis_functions()) {
            NcForm gw = fn(g, cap) * w;
            dsq.add((nc_inner_delta(p, nc_inner_delta(p, gw)) - fn(g, cap) * nc_inner_delta(p, nc_inner_delta(p, w)))
                        .magnitude());
            dsq.add((nc_inner_delta(p, nc_inner_delta(p, w * fn(g, cap))) -
                     nc_inner_delta(p, nc_inner_delta(p, w)) * fn(g, cap))
                        .magnitude());
        }
        TwoPointFn sgn_fbar = n % 2 ? -f.bar() : f.bar();
        nth.add((nabla_th(w) - NcForm::theta_pow(n, f - sgn_fbar, cap)).magnitude());
        for (const TwoPointFn& f2 : basis_functions()) {
            // σ_θ(fθⁿ⊗f′θ) = (−1)ⁿ f̄ θⁿ f̄′
            NcForm rhs = sign_scaled(fn(f.bar(), cap) * NcForm::theta_pow(n, 1, cap) * fn(f2.bar(), cap), n);
            sig.add((nc_sigma(p, th, w, NcForm::theta_pow(1, f2, cap)) - rhs).magnitude());
        }
        NcForm hodge = nc_hodge_laplacian(p, w);
        lap.add((hodge - (nabla_th(w) + w.scaled(2 * n)).scaled(2)).magnitude());
        lapi.add((hodge - (nabla_th(w).scaled(2) - nc_perp(p, NcForm::theta_pow(2, 1, cap), w))).magnitude());
        tor.add(nc_torsion(p, w).magnitude());
        // T(fθⁿ) = θ∇_θ(fθⁿ) − (f̄ − (−1)ⁿ f)θ^{n+1}
        tor.add((th * nabla_th(w) - NcForm::theta_pow(n + 1, f.bar() - (n % 2 ? -f : f), cap)).magnitude());
        lb.add(nc_laplace_beltrami(p, w).magnitude());
        lbf.add((nabla_th(nabla_th(w)) - nabla_th(w).scaled(2)).magnitude());
        curv.add(nc_curvature(p, w).magnitude());
        for (int m = 1; m + n <= top; ++m) {
            NcForm tm = NcForm::theta_pow(m, 1, cap);
            NcForm rhs = NcForm::theta_pow(m - 1, Rational(m % 2 ? m : -m), cap) * nabla_th(w);
            nhi.add((nc_connection(p, tm, w) - rhs).magnitude());
            nhi.add((nc_connection(p, tm, w) - nc_j(p, tm, th) * nabla_th(w)).magnitude());
            for (const TwoPointFn& g : basis_functions())
                nll.add((nc_connection(p, fn(g, cap) * tm, w) - fn(g, cap) * nc_connection(p, tm, w)).magnitude());
        }
        for (const TwoPointFn& a : basis_functions()) {
            NcForm A = fn(a, cap);
            bim.add((nabla_th(w * A) - nabla_th(w) * A - nc_sigma(p, th, w, A.d())).magnitude());
        }
    }
    NcForm dd = nc_inner_delta(p, nc_inner_delta(p, NcForm::theta_pow(2, 1, cap)));
    dsq_nz.add(dd.is_zero() ? 1.0 : 0.0);
    dsq_nz.note("δ²(θ²) = " + dd.str());
    nthth.add((nabla_th(th) - th.scaled(2)).magnitude());
    sigth.add((nc_sigma(p, th, th, th) + th).magnitude());

    const NcTensor g = nc_metric_g(cap);
    for (const TwoPointFn& f : basis_functions()) {
        NcForm w = NcForm::theta_pow(1, f, cap);
        for (const TwoPointFn& f2 : basis_functions())
            pair.add(fn(nc_pairing(p, w, NcForm::theta_pow(1, f2, cap)) - f * f2.bar(), cap).magnitude());
        // (ω,g¹)g² = ω = g¹(g²,ω) with g = θ⊗θ
        inv.add((fn(nc_pairing(p, w, th), cap) * th - w).magnitude());
        inv.add((th * fn(nc_pairing(p, th, w), cap) - w).magnitude());
        NcForm F = fn(f, cap);
        cen.add((NcTensor::product(F * th, th) - NcTensor::product(th, th * F)).magnitude());
        ng.add(nc_connection_tensor(p, w, g, cap).magnitude());
    }
    ng.add(nc_connection_tensor(p, th, g, cap).magnitude());

    Report rep;
    rep.suite = "z2";
    add_all(rep, {&delta, &dsq, &dsq_nz, &nth, &nthth, &sig, &sigth, &pair, &inv, &cen, &ng, &tor, &lap, &lapi, &lb,
                  &lbf, &curv, &nhi, &nll, &bim});
    return rep;
}

Report braided_leibniz_check(const PerpTable& p, int cap) {
    const double tol = 0;
    const std::uint64_t seed = 0;
    const NcForm th = theta(cap);
    Check eq("braleib.nabla_equals_nabla_prime", tol, seed), seq("braleib.sigma_equals_sigma_prime", tol, seed),
        sd("braleib.sigmaderiv", tol, seed), sdp("braleib.sigmaderiv_prime", tol, seed),
        jl("braleib.j_law", tol, seed);
    auto nabla = [&](const NcForm& w, const NcForm& e) { return nc_connection(p, w, e); };
    auto sigma = [&](const NcForm& w, const NcForm& e, const NcForm& z) { return nc_sigma(p, w, e, z); };
    auto nabla_p = [&](const NcForm& w, const NcForm& e) { return nc_j(p, w, th) * nabla(th, e); };
    auto sigma_p = [&](const NcForm& w, const NcForm& e, const NcForm& z) {
        return nc_j(p, w, th) * sigma(th, e, z);
    };
    auto basis = graded_basis(cap, cap);
    for (const auto& [w, m] : basis) {
        if (m == 0) continue;
        for (const auto& [e, n] : basis) {
            if (m + n > cap - 1) continue;
            eq.add((nabla(w, e) - nabla_p(w, e)).magnitude());
            for (const TwoPointFn& f : basis_functions()) {
                NcForm z1 = NcForm::theta_pow(1, f, cap);
                seq.add((sigma(w, e, z1) - sigma_p(w, e, z1)).magnitude());
                // j_{ωη}(ζ) = j_ω(θ)(j_{θη}(ζ) + θ j_η(ζ)) + (−1)^{|ω|} ω j_η(ζ)
                NcForm rhs = nc_j(p, w, th) * (nc_j(p, th * e, z1) + th * nc_j(p, e, z1)) +
                             sign_scaled(w * nc_j(p, e, z1), m);
                jl.add((nc_j(p, w * e, z1) - rhs).magnitude());
            }
            for (const auto& [z, k] : basis) {
                if (m + n + k > cap - 1) continue;
                NcForm lhs = nabla(w, e * z);
                sd.add((lhs - nabla(w, e) * z - sigma(w, e, th) * nabla(th, z)).magnitude());
                NcForm lhs_p = nabla_p(w, e * z);
                sdp.add((lhs_p - nabla_p(w, e) * z - sigma_p(w, e, th) * nabla(th, z)).magnitude());
            }
        }
    }
    Report rep;
    rep.suite = "z2";
    add_all(rep, {&eq, &seq, &sd, &sdp, &jl});
    return rep;
}

Report nc_torsion_compat(const PerpTable& p, int cap) {
    const double tol = 0;
    const std::uint64_t seed = 0;
    const NcForm th = theta(cap), th2 = NcForm::theta_pow(2, 1, cap);
    Check cond("clefttorsion.condition", tol, seed), bim("clefttorsion.torsion_bimodule", tol, seed),
        der("clefttorsion.torsion_derivation", tol, seed);
    auto T = [&](const NcForm& w) { return nc_torsion(p, w); };
    auto basis = graded_basis(cap, cap);
    for (const auto& [w, m] : basis) {
        if (m + 3 > cap) continue;
        for (const TwoPointFn& f : basis_functions()) {
            NcForm z = NcForm::theta_pow(1, f, cap);
            NcForm lhs = th2 * nc_j(p, w, z) + th * nc_j(p, th * w, z);
            cond.add((lhs - sign_scaled(w * z, m)).magnitude());
            NcForm A = fn(f, cap);
            bim.add((T(A * w) - A * T(w)).magnitude());
            bim.add((T(w * A) - T(w) * A).magnitude());
        }
        for (const auto& [e, n] : basis) {
            if (m + n + 1 > cap) continue;
            der.add((T(w * e) - T(w) * e - sign_scaled(w * T(e), m)).magnitude());
        }
    }
    Report rep;
    rep.suite = "z2";
    add_all(rep, {&cond, &bim, &der});
    return rep;
}

Report nc_ricci_delta(const PerpTable& p, int cap) {
    const double tol = 0;
    const std::uint64_t seed = 0;
    const NcForm th = theta(cap), th2 = NcForm::theta_pow(2, 1, cap);
    Check qs("cleftricci.wedge_g_nonzero", tol, seed), lbl("cleftricci.lb_leibnizator", tol, seed),
        lbg("cleftricci.lbleib", tol, seed), lbt("cleftricci.lb_tensorial", tol, seed),
        hc("preliminaries.half_curvature_balanced", tol, seed);
    // ∧(g) = θ·θ
    NcForm wedge_g = th * th;
    qs.add(wedge_g.is_zero() ? 1.0 : 0.0);
    qs.note("∧(g) = " + wedge_g.str() + ": not quantum symmetric, Ricci_Δ undefined; Δ_LB is tensorial here");
    auto LB = [&](const NcForm& w) { return nc_laplace_beltrami(p, w); };
    auto nabla = [&](const NcForm& w, const NcForm& e) { return nc_connection(p, w, e); };
    for (const auto& [w, n] : graded_basis(top_degree(cap), cap)) {
        for (const TwoPointFn& a : basis_functions()) {
            NcForm A = fn(a, cap), dA = A.d();
            NcForm L = LB(A * w) - LB(A) * w - A * LB(w);
            lbl.add((L - nabla(dA.scaled(2) + nc_j(p, th2, dA), w)).magnitude());
            lbg.add((L - nabla(dA + nc_sigma(p, th, th, dA), w)).magnitude());
            lbt.add((LB(A * w) - A * LB(w)).magnitude());
        }
    }
    // ρ(ω⊗η)ζ = ∇_ω∇_ηζ − ∇_{∇_ωη}ζ on 1-forms; balanced over A
    auto rho = [&](const NcForm& w, const NcForm& e, const NcForm& z) {
        return nabla(w, nabla(e, z)) - nabla(nabla(w, e), z);
    };
    for (const TwoPointFn& f1 : basis_functions())
        for (const TwoPointFn& f2 : basis_functions())
            for (const TwoPointFn& a : basis_functions())
                for (const auto& [z, k] : graded_basis(3, cap)) {
                    NcForm w = NcForm::theta_pow(1, f1, cap), e = NcForm::theta_pow(1, f2, cap), A = fn(a, cap);
                    hc.add((rho(w * A, e, z) - rho(w, A * e, z)).magnitude());
                }
    Report rep;
    rep.suite = "z2";
    add_all(rep, {&qs, &lbl, &lbg, &lbt, &hc});
    return rep;
}

namespace {

// the quoted formulas on a generic pair of functions
std::string z2_value_table(const PerpTable& p, int cap) {
    const TwoPointFn f(2, -3), f2(5, 7);
    const NcForm th = theta(cap);
    std::ostringstream os;
    os << "Z₂ universal calculus, θᵐ⊥θⁿ table '" << p.name << "', f = " << f.str() << ", f′ = " << f2.str()
       << ", values as (at x, at y)\n";
    os << "  d f = " << fn(f, cap).d().str() << ", θ f = " << (th * fn(f, cap)).str() << "\n";
    for (int n = 0; n <= std::min(3, cap - 1); ++n) {
        NcForm w = NcForm::theta_pow(n, f, cap);
        os << "  n = " << n << ": δ = " << nc_inner_delta(p, w).str()
           << ", ∇_θ = " << nc_connection(p, th, w).str() << ", Δ = " << nc_hodge_laplacian(p, w).str()
           << ", σ_θ(·⊗f′θ) = " << nc_sigma(p, th, w, NcForm::theta_pow(1, f2, cap)).str()
           << ", T = " << nc_torsion(p, w).str() << ", Δ_LB = " << nc_laplace_beltrami(p, w).str()
           << ", R = " << nc_curvature(p, w).str() << "\n";
    }
    os << "  (fθ, f′θ) = " << nc_pairing(p, NcForm::theta_pow(1, f, cap), NcForm::theta_pow(1, f2, cap)).str()
       << ", g = " << nc_metric_g(cap).str() << ", ∇_θ g = " << nc_connection_tensor(p, th, nc_metric_g(cap), cap).str()
       << "\n";
    os << "  ∇_θθ = " << nc_connection(p, th, th).str() << ", σ_θ(θ⊗θ) = " << nc_sigma(p, th, th, th).str()
       << ", δ²θ² = " << nc_inner_delta(p, nc_inner_delta(p, NcForm::theta_pow(2, 1, cap))).str()
       << ", ∧(g) = " << (th * th).str() << "\n";
    for (int m = 1; m <= 3; ++m)
        os << "  ∇_{θ^" << m << "}θ = " << nc_connection(p, NcForm::theta_pow(m, 1, cap), th).str()
           << ", j_{θ^" << m << "}(θ) = " << nc_j(p, NcForm::theta_pow(m, 1, cap), th).str() << "\n";
    return os.str();
}

std::vector<NcForm> z2_pool(Sampler& s, int max_deg, int cap) {
    std::vector<NcForm> pool;
    for (int n = 0; n <= max_deg; ++n)
        for (int k = 0; k < 2; ++k) pool.push_back(NcForm::theta_pow(n, s.two_point(), cap));
    pool.push_back(NcForm::theta_pow(1, s.two_point(), cap) + NcForm::theta_pow(2, s.two_point(), cap));
    return pool;
}

HostMap<NcForm> scale_down_two(std::function<Rational(int)> c) {
    return [c](const NcForm& w) {
        NcForm r(w.cap());
        for (int n : w.degrees())
            if (n >= 2) r.add(n - 2, w.coeff(n) * TwoPointFn(c(n)));
        return r;
    };
}

}  // namespace

Report z2_report(const PerpTable& p, int cap, Z2Scope scope) {
    const double tol = 0;
    const std::uint64_t seed = 1;
    const int samples = 100;
    Report rep;
    rep.suite = "z2";
    rep.environment["perp_table"] = p.name;
    rep.environment["cap"] = std::to_string(cap);
    rep.environment["backend"] = "rational";
    rep.tables.push_back(z2_value_table(p, cap));
    if (!p.standard)
        rep.environment["note"] = "non-standard ⊥ table: residuals are reported, no conclusion is asserted";

    // 4-term identity exhaustively on fθᵐ, θⁿ, θᵏ with m+n+k ≤ cap
    HostBilinear<NcForm> perp = [p](const NcForm& a, const NcForm& b) { return nc_perp(p, a, b); };
    HostMap<NcForm> delta = [p](const NcForm& w) { return nc_inner_delta(p, w); };
    Check four("construct.four_term", tol, seed);
    for (const auto& [w, m] : graded_basis(cap, cap))
        for (int n = 0; m + n <= cap; ++n)
            for (int k = 0; m + n + k <= cap; ++k)
                for (const TwoPointFn& f : basis_functions())
                    four.add(perp_four_term(perp, w, NcForm::theta_pow(n, f, cap), NcForm::theta_pow(k, 1, cap))
                                 .magnitude());
    rep.add(four.result());

    for (const Report& r : {nc_metric_checks(p, cap), braided_leibniz_check(p, cap), nc_torsion_compat(p, cap),
                            nc_ricci_delta(p, cap)})
        rep.merge(r);
    rep.environment["scope"] = scope == Z2Scope::Example ? "example" : "full";
    if (scope == Z2Scope::Example) {
        rep.sort();
        return rep;
    }

    Sampler s(seed);
    std::vector<NcForm> probes;
    for (const auto& [w, n] : graded_basis(2, cap)) probes.push_back(w);
    std::vector<NcForm> functions{fn(TwoPointFn(1, 0), cap), fn(TwoPointFn(0, 1), cap), fn(s.two_point(), cap)};
    ConstructData<NcForm> data;
    try {
        data = construct_flat_cleft<NcForm>(perp, delta, Rational(1), probes, functions, tol);
    } catch (const Error& e) {
        Check c("inner.construct", tol, seed);
        c.fail(e.what());
        rep.add(c.result());
        rep.sort();
        return rep;
    }
    const Cocycle<NcForm>& c = data.cocycle;
    const NcForm th = theta(cap);

    Check br("inner.bracket_is_twice_nabla", tol, seed), dl("inner.delta_is_theta_perp", tol, seed),
        lap("inner.Delta_formula", tol, seed), jf("jflatcleft.j_from_bracket", tol, seed),
        ri("jflatcleft.right_interior_vanishes", tol, seed), rec("cleft.reconstruct_round_trip", tol, seed),
        eqv("equivsols.noncleft_plus_coboundary", tol, seed), mor("equivsols.morphism", tol, seed);
    HostBilinear<NcForm> recon = cleft_reconstruct<NcForm>(nc_decomposer(cap), c.Delta, tol);
    Cocycle<NcForm> noncleft = flat_noncleft_cocycle<NcForm>(perp, c.lambda);
    Cocycle<NcForm> shifted = cocycle_sum(noncleft, coboundary_from_delta<NcForm>(delta, c.lambda));
    for (const auto& [w, m] : graded_basis(3, cap)) {
        dl.add((delta(w) - nc_perp(p, th, w)).magnitude());
        lap.add((c.Delta(w) - (nc_connection(p, th, w).scaled(2) - nc_perp(p, NcForm::theta_pow(2, 1, cap), w)))
                    .magnitude());
        for (const auto& [e, n] : graded_basis(3, cap)) {
            if (m >= 1) br.add((c.bracket(w, e) - nc_connection(p, w, e).scaled(2)).magnitude());
            rec.add((recon(w, e) - c.bracket(w, e)).magnitude());
            eqv.add((shifted.bracket(w, e) - c.bracket(w, e)).magnitude());
        }
        eqv.add((shifted.Delta(w) - c.Delta(w)).magnitude());
        for (const NcForm& a : functions) {
            ri.add(host_leibnizator<NcForm>(delta, -1, w, a).magnitude());
            for (const NcForm& b : functions) {
                // j_ω(a db) = ½⟦ωa, b⟧ = ½ ω⊥(a db)
                jf.add((c.bracket(w * a, b).scaled(kHalf) - nc_perp(p, w, a * b.d()).scaled(kHalf)).magnitude());
            }
        }
    }
    std::vector<NcForm> pool = z2_pool(s, 2, cap);
    auto phi = [&](const ExtElement<NcForm>& x) { return morphism_apply<NcForm>(delta, c.lambda, x); };
    for (int k = 0; k < samples; ++k) {
        ExtElement<NcForm> x = draw_ext(s, pool), y = draw_ext(s, pool);
        mor.add((phi(ext_mul(noncleft, x, y)) - ext_mul(c, phi(x), phi(y))).magnitude());
        mor.add((phi(ext_d(noncleft, x)) - ext_d(c, phi(x))).magnitude());
    }
    add_all(rep, {&br, &dl, &lap, &jf, &ri, &rec, &eqv, &mor});

    std::vector<std::vector<NcForm>> triples;
    for (int k = 0; k < samples; ++k) {
        int n = static_cast<int>(pool.size()) - 1;
        triples.push_back({pool[s.uniform(0, n)], pool[s.uniform(0, n)], pool[s.uniform(0, n)]});
    }
    for (const CheckResult& r : cocycle_check(c, triples, tol, seed, "z2.cocycle")) rep.add(r);
    for (const CheckResult& r : extension_soundness(c, pool, functions, samples, tol, seed, "z2.extension"))
        rep.add(r);
    for (const CheckResult& r : ext2_soundness(data, pool, samples, tol, seed, "z2.ext2")) rep.add(r);
    for (const CheckResult& r : cleft_identities(c, pool, functions, samples, tol, seed, "z2.cleft")) rep.add(r);

    // gauge: degree −2 bimodule maps B(fθⁿ) = c(n) f θ^{n−2}
    const std::vector<std::pair<std::string, std::function<Rational(int)>>> gauges{
        {"unit", [](int) { return Rational(1); }},
        {"linear", [](int n) { return Rational(n); }},
        {"alternating", [](int n) { return Rational(n % 2 ? -3 : 2); }}};
    for (const auto& [name, coef] : gauges) {
        Check gd("perpB.z2." + name + ".Delta_unchanged", tol, seed),
            gb("perpB.z2." + name + ".bracket_unchanged", tol, seed);
        try {
            auto [p2, d2] = perp_gauge<NcForm>(scale_down_two(coef), perp, delta, probes, functions, tol);
            ConstructData<NcForm> g2 = construct_flat_cleft<NcForm>(p2, d2, c.lambda, probes, functions, tol);
            for (const NcForm& w : pool) {
                gd.add((g2.cocycle.Delta(w) - c.Delta(w)).magnitude());
                for (const NcForm& e : pool) gb.add((g2.cocycle.bracket(w, e) - c.bracket(w, e)).magnitude());
            }
        } catch (const Error& e) {
            gd.fail(e.what());
            gb.fail(e.what());
        }
        add_all(rep, {&gd, &gb});
    }
    rep.sort();
    return rep;
}

}  // namespace rdga
