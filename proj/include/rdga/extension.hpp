#pragma once
#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "rdga/errors.hpp"
#include "rdga/form.hpp"
#include "rdga/ncdga.hpp"
#include "rdga/report.hpp"
#include "rdga/sampling.hpp"

namespace rdga {

// Host DGA plumbing. A host element type E provides degrees(), part(p), d(),
// scaled(q), magnitude(), str(), +, −, * and a zero_like overload.
inline Form zero_like(const Form& w) { return Form(w.chart()); }
inline NcForm zero_like(const NcForm& w) { return NcForm(w.cap()); }
inline Form one_like(const Form& w) { return Form::constant(w.chart(), Rational(1)); }
inline NcForm one_like(const NcForm& w) { return NcForm::function(Rational(1), w.cap()); }

// "body + (ρ)θ′ + ..." skipping zero components
template <class E>
std::string join_parts(const std::vector<std::pair<E, std::string>>& parts) {
    std::string s;
    for (const auto& [e, suffix] : parts) {
        if (e.is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += suffix.empty() ? e.str() : "(" + e.str() + ")" + suffix;
    }
    return s.empty() ? "0" : s;
}

inline int parity_sign(int p) { return (p % 2) ? -1 : 1; }

template <class E>
using HostMap = std::function<E(const E&)>;
template <class E>
using HostBilinear = std::function<E(const E&, const E&)>;

template <class E, class F>
E sum_over_parts(const E& a, F f) {
    E r = zero_like(a);
    for (int p : a.degrees()) r += f(a.part(p), p);
    return r;
}

// B(ωη) − (Bω)η − (−1)^{deg_B |ω|} ω Bη
template <class E>
E host_leibnizator(const HostMap<E>& B, int deg_B, const E& w, const E& e) {
    return sum_over_parts(w, [&](const E& wp, int p) {
        E t = B(wp * e) - B(wp) * e;
        return (deg_B * p) % 2 ? t + wp * B(e) : t - wp * B(e);
    });
}

template <class E>
struct Cocycle {
    HostMap<E> Delta;
    HostBilinear<E> bracket;
    Rational lambda = 1;
    std::string provenance = "manual";
};

template <class E>
Cocycle<E> coboundary_from_delta(const HostMap<E>& delta, const Rational& lambda = 1) {
    Cocycle<E> c;
    c.Delta = [delta](const E& w) { return delta(w).d() + delta(w.d()); };
    c.bracket = [delta](const E& w, const E& e) { return host_leibnizator<E>(delta, -1, w, e); };
    c.lambda = lambda;
    c.provenance = "coboundary";
    return c;
}

template <class E>
Cocycle<E> cocycle_sum(const Cocycle<E>& a, const Cocycle<E>& b) {
    Cocycle<E> c;
    c.Delta = [a, b](const E& w) { return a.Delta(w) + b.Delta(w); };
    c.bracket = [a, b](const E& w, const E& e) { return a.bracket(w, e) + b.bracket(w, e); };
    c.lambda = a.lambda;
    c.provenance = a.provenance + "+" + b.provenance;
    return c;
}

// ⟦ωη,ζ⟧ + ⟦ω,η⟧ζ − ⟦ω,ηζ⟧ − (−1)^{|ω|} ω⟦η,ζ⟧
template <class E>
E cocycle_c1(const Cocycle<E>& c, const E& w, const E& e, const E& z) {
    return sum_over_parts(w, [&](const E& wp, int p) {
        E t = c.bracket(wp * e, z) + c.bracket(wp, e) * z - c.bracket(wp, e * z);
        return p % 2 ? t + wp * c.bracket(e, z) : t - wp * c.bracket(e, z);
    });
}

// L_Δ(ω,η) − d⟦ω,η⟧ − ⟦dω,η⟧ − (−1)^{|ω|}⟦ω,dη⟧
template <class E>
E cocycle_c2(const Cocycle<E>& c, const E& w, const E& e) {
    return sum_over_parts(w, [&](const E& wp, int p) {
        E t = host_leibnizator<E>(c.Delta, 0, wp, e) - c.bracket(wp, e).d() - c.bracket(wp.d(), e);
        return p % 2 ? t + c.bracket(wp, e.d()) : t - c.bracket(wp, e.d());
    });
}

template <class E>
std::vector<CheckResult> cocycle_check(const Cocycle<E>& c, const std::vector<std::vector<E>>& triples, double tol,
                                       std::uint64_t seed, const std::string& prefix) {
    Check c1(prefix + ".c1", tol, seed), c2(prefix + ".c2", tol, seed), cd(prefix + ".delta_commutes_d", tol, seed);
    for (const auto& t : triples) {
        c1.add(cocycle_c1(c, t[0], t[1], t[2]).magnitude());
        c2.add(cocycle_c2(c, t[0], t[1]).magnitude());
        cd.add((c.Delta(t[0].d()) - c.Delta(t[0]).d()).magnitude());
    }
    return {c1.result(), c2.result(), cd.result()};
}

// ω + ρθ′, with θ′ kept to the right of host factors
template <class E>
struct ExtElement {
    E body, prime;

    static ExtElement embed(const E& w) { return {w, zero_like(w)}; }
    static ExtElement theta(const E& zero) { return {zero_like(zero), one_like(zero)}; }

    ExtElement operator+(const ExtElement& o) const { return {body + o.body, prime + o.prime}; }
    ExtElement operator-(const ExtElement& o) const { return {body - o.body, prime - o.prime}; }
    ExtElement scaled(const Rational& q) const { return {body.scaled(q), prime.scaled(q)}; }
    double magnitude() const { return std::max(body.magnitude(), prime.magnitude()); }
    std::string str() const { return join_parts<E>({{body, ""}, {prime, "θ′"}}); }
};

template <class E>
ExtElement<E> ext_mul(const Cocycle<E>& c, const ExtElement<E>& x, const ExtElement<E>& y) {
    Rational half_l = c.lambda / 2;
    ExtElement<E> r{x.body * y.body, x.body * y.prime};
    for (int p : x.body.degrees()) {
        E wp = x.body.part(p);
        for (int q : y.body.degrees()) {
            E br = c.bracket(wp, y.body.part(q)).scaled(half_l);
            r.prime += (p + q) % 2 ? -br : br;
        }
    }
    for (int q : y.body.degrees()) {
        E t = x.prime * y.body.part(q);
        r.prime += q % 2 ? -t : t;
    }
    return r;
}

template <class E>
ExtElement<E> ext_d(const Cocycle<E>& c, const ExtElement<E>& x) {
    Rational half_l = c.lambda / 2;
    ExtElement<E> r{x.body.d(), x.prime.d()};
    for (int p : x.body.degrees()) {
        E t = c.Delta(x.body.part(p)).scaled(half_l);
        r.prime += p % 2 ? t : -t;
    }
    return r;
}

// Φ(ω + ρθ′) = ω + (ρ + (λ/2)(−1)^{|ω|} δω)θ′
template <class E>
ExtElement<E> morphism_apply(const HostMap<E>& delta, const Rational& lambda, const ExtElement<E>& x) {
    ExtElement<E> r = x;
    for (int p : x.body.degrees()) {
        E t = delta(x.body.part(p)).scaled(lambda / 2);
        r.prime += p % 2 ? -t : t;
    }
    return r;
}

// Recovers δ from a map fixing θ′ and the host part; Error if Φ is not of that shape.
template <class E>
HostMap<E> extract_morphism_delta(const std::function<ExtElement<E>(const ExtElement<E>&)>& phi, const Rational& lambda,
                                  const std::vector<E>& probes, double tol) {
    for (const E& w : probes) {
        ExtElement<E> img = phi(ExtElement<E>::embed(w));
        if ((img.body - w).magnitude() > tol) throw Error("morphism does not commute with the projection");
        ExtElement<E> th = phi(ExtElement<E>::theta(zero_like(w)));
        if ((th - ExtElement<E>::theta(zero_like(w))).magnitude() > tol) throw Error("morphism moves θ′");
    }
    return [phi, lambda](const E& w) {
        return sum_over_parts(w, [&](const E& wp, int p) {
            E t = phi(ExtElement<E>::embed(wp)).prime.scaled(2 / lambda);
            return p % 2 ? -t : t;
        });
    };
}

// Flat cleft data (⊥, δ) and the cocycle built from them.
template <class E>
struct ConstructData {
    Cocycle<E> cocycle;
    HostBilinear<E> perp;
    HostMap<E> delta;
};

// ω⊥dη − (−1)^{|ω|} dω⊥η − (−1)^{|ω|} d(ω⊥η)
template <class E>
E construct_bracket0(const HostBilinear<E>& perp, const E& w, const E& e) {
    return sum_over_parts(w, [&](const E& wp, int p) {
        E t = perp(wp.d(), e) + perp(wp, e).d();
        return p % 2 ? perp(wp, e.d()) + t : perp(wp, e.d()) - t;
    });
}

// 4-term identity residual for ⊥
template <class E>
E perp_four_term(const HostBilinear<E>& perp, const E& w, const E& e, const E& z) {
    E r = zero_like(w);
    for (int p : w.degrees())
        for (int q : e.degrees()) {
            E wp = w.part(p), eq = e.part(q);
            E a = perp(wp * eq, z), b = eq * z;
            E t = (q % 2 ? -a : a) + perp(wp, eq) * z - perp(wp, b);
            E u = wp * perp(eq, z);
            r += (p + q) % 2 ? t + u : t - u;
        }
    return r;
}

template <class E>
ConstructData<E> construct_flat_cleft(const HostBilinear<E>& perp, const HostMap<E>& delta, const Rational& lambda,
                                      const std::vector<E>& probes, const std::vector<E>& functions, double tol) {
    for (const E& w : probes)
        for (const E& e : probes)
            for (const E& z : probes) {
                double r = perp_four_term(perp, w, e, z).magnitude();
                if (r > tol) throw PerpIdentityFails("4-term identity residual " + residual_text(r));
            }
    for (const E& a : functions)
        for (const E& w : probes) {
            if (perp(a, w).magnitude() > tol || perp(w, a).magnitude() > tol)
                throw PerpIdentityFails("⊥ does not vanish on functions");
            double r = (delta(a * w) - a * delta(w) - perp(a.d(), w)).magnitude();
            if (r > tol) throw DeltaNotCompatible("δ(aω) − aδω − da⊥ω residual " + residual_text(r));
        }
    ConstructData<E> out;
    out.perp = perp;
    out.delta = delta;
    Cocycle<E> c = coboundary_from_delta<E>(delta, lambda);
    HostMap<E> dlt = delta;
    out.cocycle.Delta = c.Delta;
    out.cocycle.bracket = [perp, dlt](const E& w, const E& e) {
        return host_leibnizator<E>(dlt, -1, w, e) + construct_bracket0<E>(perp, w, e);
    };
    out.cocycle.lambda = lambda;
    out.cocycle.provenance = "construct";
    return out;
}

// Δ = 0 with ⟦ω,η⟧ = ω⊥dη − (−1)^{|ω|}(d(ω⊥η) + dω⊥η): flat, not cleft
template <class E>
Cocycle<E> flat_noncleft_cocycle(const HostBilinear<E>& perp, const Rational& lambda) {
    Cocycle<E> c;
    c.Delta = [](const E& w) { return zero_like(w); };
    c.bracket = [perp](const E& w, const E& e) { return construct_bracket0<E>(perp, w, e); };
    c.lambda = lambda;
    c.provenance = "flat-noncleft";
    return c;
}

// ω⊥′η = ω⊥η + (−1)^{|ω|+1} L_B(ω,η), δ′ = δ + Bd − dB
template <class E>
std::pair<HostBilinear<E>, HostMap<E>> perp_gauge(const HostMap<E>& B, const HostBilinear<E>& perp,
                                                  const HostMap<E>& delta, const std::vector<E>& probes,
                                                  const std::vector<E>& functions, double tol) {
    for (const E& a : functions)
        for (const E& w : probes) {
            double r = std::max((B(a * w) - a * B(w)).magnitude(), (B(w * a) - B(w) * a).magnitude());
            if (r > tol) throw NotBimodule("B fails the bimodule property, residual " + residual_text(r));
        }
    HostBilinear<E> p2 = [B, perp](const E& w, const E& e) {
        return sum_over_parts(w, [&](const E& wp, int p) {
            E l = host_leibnizator<E>(B, -2, wp, e);
            return p % 2 ? perp(wp, e) + l : perp(wp, e) - l;
        });
    };
    HostMap<E> d2 = [B, delta](const E& w) { return delta(w) + B(w.d()) - B(w).d(); };
    return {p2, d2};
}

// Bracket of a cleft extension rebuilt from Δ on a standard host.
template <class E>
struct Decomposer {
    // ω of degree ≥ 2 as Σ ω₁·rest with ω₁ of degree 1 (and the mirror split)
    std::function<std::vector<std::pair<E, E>>(const E&)> split_first, split_last;
    // a 1-form as Σ a db
    std::function<std::vector<std::pair<E, E>>(const E&)> adb;
};

template <class E>
class CleftReconstruction {
public:
    CleftReconstruction(Decomposer<E> dec, HostMap<E> Delta, double tol)
        : dec_(std::move(dec)), Delta_(std::move(Delta)), tol_(tol) {}

    E operator()(const E& w, const E& z) const {
        return sum_over_parts(w, [&](const E& wp, int p) { return homogeneous(wp, p, z, true); });
    }

private:
    E homogeneous(const E& w, int p, const E& z, bool verify) const {
        if (p == 0) return zero_like(w);
        if (p == 1) {
            E r = zero_like(w);
            for (const auto& [a, b] : dec_.adb(w)) r += a * host_leibnizator<E>(Delta_, 0, b, z);
            return r;
        }
        E first = zero_like(w);
        for (const auto& [w1, rest] : dec_.split_first(w))
            first += homogeneous(w1, 1, rest * z, false) - w1 * homogeneous(rest, p - 1, z, false) -
                     homogeneous(w1, 1, rest, false) * z;
        if (!verify) return first;
        E last = zero_like(w);
        for (const auto& [rest, w1] : dec_.split_last(w)) {
            E t = homogeneous(rest, p - 1, w1 * z, false) - homogeneous(rest, p - 1, w1, false) * z;
            E u = rest * homogeneous(w1, 1, z, false);
            last += (p - 1) % 2 ? t - u : t + u;
        }
        double r = (first - last).magnitude();
        if (r > tol_) throw NotCleft("reconstructions disagree, residual " + residual_text(r));
        return first;
    }

    Decomposer<E> dec_;
    HostMap<E> Delta_;
    double tol_;
};

template <class E>
HostBilinear<E> cleft_reconstruct(const Decomposer<E>& dec, const HostMap<E>& Delta, double tol) {
    CleftReconstruction<E> rec(dec, Delta, tol);
    return [rec](const E& w, const E& z) { return rec(w, z); };
}

// ω + ρθ′ + σdθ′
template <class E>
struct Ext2Element {
    E body, prime, dprime;

    static Ext2Element embed(const E& w) { return {w, zero_like(w), zero_like(w)}; }
    static Ext2Element theta(const E& zero) { return {zero_like(zero), one_like(zero), zero_like(zero)}; }
    static Ext2Element dtheta(const E& zero) { return {zero_like(zero), zero_like(zero), one_like(zero)}; }

    Ext2Element operator+(const Ext2Element& o) const { return {body + o.body, prime + o.prime, dprime + o.dprime}; }
    Ext2Element operator-(const Ext2Element& o) const { return {body - o.body, prime - o.prime, dprime - o.dprime}; }
    Ext2Element scaled(const Rational& q) const { return {body.scaled(q), prime.scaled(q), dprime.scaled(q)}; }
    double magnitude() const { return std::max({body.magnitude(), prime.magnitude(), dprime.magnitude()}); }
    std::string str() const { return join_parts<E>({{body, ""}, {prime, "θ′"}, {dprime, "dθ′"}}); }
};

template <class E>
Ext2Element<E> ext2_mul(const ConstructData<E>& data, const Ext2Element<E>& x, const Ext2Element<E>& y) {
    Rational half_l = data.cocycle.lambda / 2;
    Ext2Element<E> r{x.body * y.body, x.body * y.prime, x.body * y.dprime + x.dprime * y.body};
    for (int p : x.body.degrees()) {
        E wp = x.body.part(p);
        for (int q : y.body.degrees()) {
            E eq = y.body.part(q);
            E br = data.cocycle.bracket(wp, eq).scaled(half_l);
            r.prime += (p + q) % 2 ? -br : br;
            E pe = data.perp(wp, eq).scaled(half_l);
            r.dprime += p % 2 ? pe : -pe;
        }
    }
    for (int q : y.body.degrees()) {
        E t = x.prime * y.body.part(q);
        r.prime += q % 2 ? -t : t;
    }
    return r;
}

template <class E>
Ext2Element<E> ext2_d(const ConstructData<E>& data, const Ext2Element<E>& x) {
    Rational half_l = data.cocycle.lambda / 2;
    Ext2Element<E> r{x.body.d(), x.prime.d(), x.dprime.d() + data.delta(x.body).scaled(half_l)};
    for (int p : x.body.degrees()) {
        E t = data.cocycle.Delta(x.body.part(p)).scaled(half_l);
        r.prime += p % 2 ? t : -t;
    }
    for (int p : x.prime.degrees()) {
        E t = x.prime.part(p);
        r.dprime += p % 2 ? -t : t;
    }
    return r;
}

template <class E>
ExtElement<E> project_dtheta(const Ext2Element<E>& x) { return {x.body, x.prime}; }
template <class E>
E project_theta(const ExtElement<E>& x) { return x.body; }

// Sampled extension elements drawn from a pool of host elements.
template <class E>
ExtElement<E> draw_ext(Sampler& s, const std::vector<E>& pool) {
    int n = static_cast<int>(pool.size()) - 1;
    ExtElement<E> x = ExtElement<E>::embed(pool[s.uniform(0, n)]);
    if (s.coin()) x.prime = pool[s.uniform(0, n)];
    return x;
}

template <class E>
Ext2Element<E> draw_ext2(Sampler& s, const std::vector<E>& pool) {
    int n = static_cast<int>(pool.size()) - 1;
    Ext2Element<E> x = Ext2Element<E>::embed(pool[s.uniform(0, n)]);
    if (s.coin()) x.prime = pool[s.uniform(0, n)];
    if (s.coin()) x.dprime = pool[s.uniform(0, n)];
    return x;
}

// Graded Leibniz residual for an extension d over a product, split by the degree of x's body.
template <class X, class Mul, class D>
double leibniz_residual(const X& x, const X& y, int deg_x, Mul mul, D d) {
    X lhs = d(mul(x, y));
    X rhs = mul(d(x), y);
    X t = mul(x, d(y));
    return (deg_x % 2 ? lhs - rhs + t : lhs - rhs - t).magnitude();
}

// Associativity, Leibniz, d² = 0, θ′ centrality, cleftness and module property, sampled.
template <class E>
std::vector<CheckResult> extension_soundness(const Cocycle<E>& c, const std::vector<E>& pool,
                                             const std::vector<E>& functions, int count, double tol,
                                             std::uint64_t seed, const std::string& prefix) {
    Sampler s(seed);
    Check assoc(prefix + ".associativity", tol, seed), leib(prefix + ".leibniz", tol, seed),
        dd(prefix + ".d_squared", tol, seed), cent(prefix + ".theta_central", tol, seed),
        dth(prefix + ".d_theta", tol, seed), cleft(prefix + ".cleft", tol, seed), mod(prefix + ".left_module", tol, seed);
    auto mul = [&c](const ExtElement<E>& a, const ExtElement<E>& b) { return ext_mul(c, a, b); };
    auto d = [&c](const ExtElement<E>& a) { return ext_d(c, a); };
    const E zero = zero_like(pool.front());
    const ExtElement<E> th = ExtElement<E>::theta(zero);
    dth.add(d(th).magnitude());
    int nf = static_cast<int>(functions.size()) - 1;
    for (int k = 0; k < count; ++k) {
        ExtElement<E> x = draw_ext(s, pool), y = draw_ext(s, pool), z = draw_ext(s, pool);
        assoc.add((mul(mul(x, y), z) - mul(x, mul(y, z))).magnitude());
        // homogeneous x for the sign: split the body
        const E& w = pool[s.uniform(0, static_cast<int>(pool.size()) - 1)];
        int p = w.degrees().empty() ? 0 : w.degrees().front();
        ExtElement<E> xw = ExtElement<E>::embed(w.part(p));
        leib.add(leibniz_residual(xw, y, p, mul, d));
        dd.add(d(d(x)).magnitude());
        ExtElement<E> lhs = mul(th, xw), rhs = mul(xw, th);
        cent.add((p % 2 ? lhs + rhs : lhs - rhs).magnitude());
        const E& a = functions[s.uniform(0, nf)];
        cleft.add(c.bracket(a, w).magnitude());
        ExtElement<E> ax = mul(ExtElement<E>::embed(a), x);
        mod.add((ax - ExtElement<E>{a * x.body, a * x.prime}).magnitude());
    }
    return {assoc.result(), leib.result(), dd.result(), cent.result(), dth.result(), cleft.result(), mod.result()};
}

template <class E>
std::vector<CheckResult> ext2_soundness(const ConstructData<E>& data, const std::vector<E>& pool, int count, double tol,
                                        std::uint64_t seed, const std::string& prefix) {
    Sampler s(seed);
    Check assoc(prefix + ".associativity", tol, seed), leib(prefix + ".leibniz", tol, seed),
        dd(prefix + ".d_squared", tol, seed), cent(prefix + ".theta_central", tol, seed),
        proj1(prefix + ".projection_dtheta", tol, seed), proj2(prefix + ".projection_theta", tol, seed);
    auto mul = [&data](const Ext2Element<E>& a, const Ext2Element<E>& b) { return ext2_mul(data, a, b); };
    auto d = [&data](const Ext2Element<E>& a) { return ext2_d(data, a); };
    const Cocycle<E>& c = data.cocycle;
    const E zero = zero_like(pool.front());
    const Ext2Element<E> th = Ext2Element<E>::theta(zero), dth = Ext2Element<E>::dtheta(zero);
    // d(θ′) = dθ′ and the square relations among θ′, dθ′
    cent.add((d(th) - dth).magnitude());
    cent.add(mul(th, th).magnitude());
    cent.add(mul(th, dth).magnitude());
    cent.add(mul(dth, th).magnitude());
    for (int k = 0; k < count; ++k) {
        Ext2Element<E> x = draw_ext2(s, pool), y = draw_ext2(s, pool), z = draw_ext2(s, pool);
        assoc.add((mul(mul(x, y), z) - mul(x, mul(y, z))).magnitude());
        const E& w = pool[s.uniform(0, static_cast<int>(pool.size()) - 1)];
        int p = w.degrees().empty() ? 0 : w.degrees().front();
        Ext2Element<E> xw = Ext2Element<E>::embed(w.part(p));
        leib.add(leibniz_residual(xw, y, p, mul, d));
        dd.add(d(d(x)).magnitude());
        Ext2Element<E> l1 = mul(th, xw), r1 = mul(xw, th);
        cent.add((p % 2 ? l1 + r1 : l1 - r1).magnitude());
        cent.add((mul(dth, xw) - mul(xw, dth)).magnitude());
        // the successive surjections are DGA maps
        proj1.add((project_dtheta(mul(x, y)) - ext_mul(c, project_dtheta(x), project_dtheta(y))).magnitude());
        proj1.add((project_dtheta(d(x)) - ext_d(c, project_dtheta(x))).magnitude());
        ExtElement<E> ex = project_dtheta(x), ey = project_dtheta(y);
        proj2.add((project_theta(ext_mul(c, ex, ey)) - ex.body * ey.body).magnitude());
        proj2.add((project_theta(ext_d(c, ex)) - ex.body.d()).magnitude());
    }
    return {assoc.result(), leib.result(), dd.result(), cent.result(), proj1.result(), proj2.result()};
}

// (l0)–(l3), (l00) and the covariant derivative laws of ∇ = ½⟦,⟧ on samples.
template <class E>
std::vector<CheckResult> cleft_identities(const Cocycle<E>& c, const std::vector<E>& pool,
                                          const std::vector<E>& functions, int count, double tol, std::uint64_t seed,
                                          const std::string& prefix) {
    Sampler s(seed);
    Check l0(prefix + ".l0", tol, seed), l1(prefix + ".l1", tol, seed), l2(prefix + ".l2", tol, seed),
        l3(prefix + ".l3", tol, seed), l00(prefix + ".l00", tol, seed), cov(prefix + ".leftcov", tol, seed),
        bim(prefix + ".leftbimod", tol, seed), c1c(prefix + ".c1con", tol, seed), c2c(prefix + ".c2con", tol, seed);
    int np = static_cast<int>(pool.size()) - 1, nf = static_cast<int>(functions.size()) - 1;
    const Rational half(1, 2);
    auto nabla = [&](const E& w, const E& e) { return c.bracket(w, e).scaled(half); };
    // j_ω(da) = ½⟦ω,a⟧
    auto j_da = [&](const E& w, const E& a) { return c.bracket(w, a).scaled(half); };
    for (int k = 0; k < count; ++k) {
        const E& a = functions[s.uniform(0, nf)];
        const E& w0 = pool[s.uniform(0, np)];
        const E& e = pool[s.uniform(0, np)];
        const E& z = pool[s.uniform(0, np)];
        int p = w0.degrees().empty() ? 0 : w0.degrees().front();
        E w = w0.part(p);
        int sp = parity_sign(p);
        l0.add((host_leibnizator<E>(c.Delta, 0, a, e) - c.bracket(a.d(), e)).magnitude());
        l1.add((c.bracket(a * e, z) - a * c.bracket(e, z)).magnitude());
        l2.add((c.bracket(w * a, z) + c.bracket(w, a) * z - c.bracket(w, a * z)).magnitude());
        E t3 = c.bracket(w * e, a) + c.bracket(w, e) * a - c.bracket(w, e * a);
        l3.add((sp > 0 ? t3 - w * c.bracket(e, a) : t3 + w * c.bracket(e, a)).magnitude());
        E t00 = host_leibnizator<E>(c.Delta, 0, w, a) - c.bracket(w, a).d() - c.bracket(w.d(), a);
        l00.add((sp > 0 ? t00 - c.bracket(w, a.d()) : t00 + c.bracket(w, a.d())).magnitude());
        if (p >= 1) {
            cov.add((nabla(a * w, e) - a * nabla(w, e)).magnitude());
            cov.add((nabla(w, a * e) - nabla(w * a, e) - j_da(w, a) * e).magnitude());
            // σ_ω(η⊗da) = j_{ωη}(da) − (−1)^{|ω|} ω j_η(da)
            E sigma = j_da(w * e, a) - (w * j_da(e, a)).scaled(Rational(sp));
            bim.add((nabla(w, e * a) - nabla(w, e) * a - sigma).magnitude());
        }
        E t1 = nabla(w, e * z) - nabla(w, e) * z - nabla(w * e, z);
        c1c.add((sp > 0 ? t1 + w * nabla(e, z) : t1 - w * nabla(e, z)).magnitude());
        E lhs = host_leibnizator<E>(c.Delta, 0, w, e).scaled(half);
        E rhs = nabla(w, e).d() + nabla(w, e.d()).scaled(Rational(sp)) + nabla(w.d(), e);
        c2c.add((lhs - rhs).magnitude());
    }
    return {l0.result(), l1.result(), l2.result(), l3.result(), l00.result(),
            cov.result(), bim.result(), c1c.result(), c2c.result()};
}

}  // namespace rdga
