#pragma once
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rdga/classical.hpp"
#include "rdga/conformal.hpp"
#include "rdga/errors.hpp"
#include "rdga/extension.hpp"

namespace rdga {

constexpr int kDefaultTCap = 6;

Rational binomial(int n, int k);
Rational rational_pow(const Rational& q, int k);

// p(t) + q(t)dt with dt to the right; dt·tᵏ = (t+λ)ᵏdt.
class TForm {
public:
    explicit TForm(Rational lambda = Rational(0), int cap = kDefaultTCap);
    static TForm constant(const Rational& c, const Rational& lambda, int cap = kDefaultTCap);
    static TForm monomial(int k, bool dt, const Rational& c, const Rational& lambda, int cap = kDefaultTCap);
    static TForm t(const Rational& lambda, int cap = kDefaultTCap) { return monomial(1, false, 1, lambda, cap); }
    static TForm dt(const Rational& lambda, int cap = kDefaultTCap) { return monomial(0, true, 1, lambda, cap); }

    const Rational& lambda() const { return lambda_; }
    int cap() const { return cap_; }
    const std::vector<Rational>& p() const { return p_; }
    const std::vector<Rational>& q() const { return q_; }
    void add(int k, bool dt, const Rational& c);  // Overflow past the cap

    bool is_zero() const;
    std::vector<int> degrees() const;
    TForm part(int n) const;

    TForm operator-() const;
    TForm& operator+=(const TForm& o);
    TForm& operator-=(const TForm& o);
    friend TForm operator+(TForm a, const TForm& b) { return a += b; }
    friend TForm operator-(TForm a, const TForm& b) { return a -= b; }
    friend TForm operator*(const TForm& a, const TForm& b);
    TForm scaled(const Rational& c) const;
    bool operator==(const TForm& o) const { return (*this - o).is_zero(); }

    TForm d() const;
    double magnitude() const;
    std::string str() const;

private:
    Rational lambda_;
    int cap_;
    std::vector<Rational> p_, q_;
};

TForm tform_mul(const TForm& a, const TForm& b);
TForm tform_d(const TForm& a);

inline TForm zero_like(const TForm& w) { return TForm(w.lambda(), w.cap()); }
inline TForm one_like(const TForm& w) { return TForm::constant(1, w.lambda(), w.cap()); }

template <class E>
struct TauDerivation {
    HostMap<E> tau;
    std::string name;
};

template <class E>
struct SemiContext {
    TauDerivation<E> tau;
    Rational lambda;
    int cap = kDefaultTCap;
    E zero;
};

// Σ ω tᵇ dtᵉ, host factors on the left.
template <class E>
class SemiElement {
public:
    using Ctx = std::shared_ptr<const SemiContext<E>>;
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, E>;

    SemiElement() = default;
    explicit SemiElement(Ctx ctx) : ctx_(std::move(ctx)) {}
    static SemiElement host(const Ctx& ctx, const E& w) {
        SemiElement r(ctx);
        r.add(0, 0, w);
        return r;
    }
    static SemiElement t_pow(const Ctx& ctx, int k) {
        SemiElement r(ctx);
        r.add(k, 0, one_like(ctx->zero));
        return r;
    }
    static SemiElement t(const Ctx& ctx) { return t_pow(ctx, 1); }
    static SemiElement dt(const Ctx& ctx) {
        SemiElement r(ctx);
        r.add(0, 1, one_like(ctx->zero));
        return r;
    }

    const Ctx& ctx() const { return ctx_; }
    const Terms& terms() const { return terms_; }

    void add(int b, int e, const E& w) {
        if (w.is_zero()) return;
        if (b > ctx_->cap)
            throw Overflow("t-degree " + std::to_string(b) + " exceeds the cap " + std::to_string(ctx_->cap));
        auto it = terms_.find({b, e});
        if (it == terms_.end()) {
            terms_.emplace(Key{b, e}, w);
            return;
        }
        it->second = it->second + w;
        if (it->second.is_zero()) terms_.erase(it);
    }

    bool is_zero() const { return terms_.empty(); }
    std::vector<int> degrees() const {
        std::set<int> s;
        for (const auto& [k, w] : terms_)
            for (int p : w.degrees()) s.insert(p + k.second);
        return {s.begin(), s.end()};
    }
    SemiElement part(int n) const {
        SemiElement r(ctx_);
        for (const auto& [k, w] : terms_) r.add(k.first, k.second, w.part(n - k.second));
        return r;
    }

    SemiElement operator+(const SemiElement& o) const {
        SemiElement r = ctx_ ? *this : SemiElement(o.ctx_);
        for (const auto& [k, w] : o.terms_) r.add(k.first, k.second, w);
        return r;
    }
    SemiElement operator-(const SemiElement& o) const { return *this + o.scaled(Rational(-1)); }
    SemiElement operator-() const { return scaled(Rational(-1)); }
    SemiElement& operator+=(const SemiElement& o) { return *this = *this + o; }
    SemiElement scaled(const Rational& c) const {
        SemiElement r(ctx_);
        if (c == 0) return r;
        for (const auto& [k, w] : terms_) r.terms_.emplace(k, w.scaled(c));
        return r;
    }

    // (λ(τ − D))ᵏ η
    E shift(const E& w, int k) const {
        E r = w;
        for (int i = 0; i < k && !r.is_zero(); ++i) {
            E next = ctx_->tau.tau(r);
            for (int p : r.degrees()) next = next - r.part(p).scaled(Rational(p));
            r = next.scaled(ctx_->lambda);
        }
        return r;
    }

    friend SemiElement operator*(const SemiElement& x, const SemiElement& y) {
        SemiElement r(x.ctx_ ? x.ctx_ : y.ctx_);
        const Rational& lam = r.ctx_->lambda;
        for (const auto& [kx, w] : x.terms_) {
            auto [b, e] = kx;
            for (const auto& [ky, eta] : y.terms_) {
                auto [c, f] = ky;
                if (e == 0) {
                    for (int j = 0; j <= b; ++j)
                        r.add(j + c, f, (w * r.shift(eta, b - j)).scaled(binomial(b, j)));
                    continue;
                }
                // dt η = (−1)^{|η|} η dt + λ dη
                if (f == 0) {
                    for (int q : eta.degrees()) {
                        E eq = eta.part(q);
                        for (int j = 0; j <= b; ++j) {
                            E h = w * r.shift(eq, b - j);
                            for (int i = 0; i <= c; ++i) {
                                Rational coef = binomial(b, j) * binomial(c, i) * rational_pow(lam, c - i);
                                r.add(j + i, 1, h.scaled(q % 2 ? Rational(-coef) : coef));
                            }
                        }
                    }
                }
                E deta = eta.d();
                for (int j = 0; j <= b; ++j)
                    r.add(j + c, f, (w * r.shift(deta, b - j)).scaled(Rational(lam * binomial(b, j))));
            }
        }
        return r;
    }

    SemiElement d() const {
        SemiElement r(ctx_);
        const Rational& lam = ctx_->lambda;
        for (const auto& [k, w] : terms_) {
            auto [b, e] = k;
            r.add(b, e, w.d());
            if (e == 1) continue;
            for (int p : w.degrees()) {
                E wp = w.part(p);
                for (int j = 0; j < b; ++j) {
                    Rational coef = binomial(b, j) * rational_pow(lam, b - 1 - j);
                    r.add(j, 1, wp.scaled(p % 2 ? Rational(-coef) : coef));
                }
            }
        }
        return r;
    }

    double magnitude() const {
        double m = 0;
        for (const auto& [k, w] : terms_) m = std::max(m, w.magnitude());
        return m;
    }
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, w] : terms_) {
            if (!first) os << " + ";
            first = false;
            if (k.first == 0 && k.second == 0) os << w.str();
            else os << "(" << w.str() << ")";
            if (k.first == 1) os << "t";
            if (k.first > 1) os << "t^" << k.first;
            if (k.second) os << "dt";
        }
        return os.str();
    }

private:
    Ctx ctx_;
    Terms terms_;
};

template <class E>
SemiElement<E> zero_like(const SemiElement<E>& w) { return SemiElement<E>(w.ctx()); }
template <class E>
SemiElement<E> one_like(const SemiElement<E>& w) { return SemiElement<E>::host(w.ctx(), one_like(w.ctx()->zero)); }

template <class E>
SemiElement<E> semidirect_mul(const SemiElement<E>& x, const SemiElement<E>& y) { return x * y; }
template <class E>
SemiElement<E> semidirect_d(const SemiElement<E>& x) { return x.d(); }

template <class E>
typename SemiElement<E>::Ctx make_semi_context(TauDerivation<E> tau, const Rational& lambda, const E& zero,
                                               int cap = kDefaultTCap) {
    auto c = std::make_shared<SemiContext<E>>();
    c->tau = std::move(tau);
    c->lambda = lambda;
    c->cap = cap;
    c->zero = zero;
    return c;
}

template <class E>
TauDerivation<E> zero_tau() {
    return {[](const E& w) { return zero_like(w); }, "zero"};
}

// τ is a degree-preserving derivation commuting with d, sampled over a pool.
template <class E>
std::vector<CheckResult> tau_check(const TauDerivation<E>& tau, const std::vector<E>& pool, int count, double tol,
                                   std::uint64_t seed, const std::string& prefix) {
    Sampler s(seed);
    Check der(prefix + ".derivation", tol, seed), comm(prefix + ".commutes_d", tol, seed),
        deg(prefix + ".degree_zero", tol, seed);
    int n = static_cast<int>(pool.size()) - 1;
    for (int k = 0; k < count; ++k) {
        const E& w = pool[s.uniform(0, n)];
        const E& e = pool[s.uniform(0, n)];
        der.add((tau.tau(w * e) - tau.tau(w) * e - w * tau.tau(e)).magnitude());
        comm.add((tau.tau(w.d()) - tau.tau(w).d()).magnitude());
        for (int p : w.degrees()) {
            E tw = tau.tau(w.part(p));
            deg.add((tw - tw.part(p)).magnitude());
        }
    }
    return {der.result(), comm.result(), deg.result()};
}

// Prop-semicalc laws on sampled products of host elements with t, dt.
template <class E>
std::vector<CheckResult> semidirect_checks(const typename SemiElement<E>::Ctx& ctx, const std::vector<E>& pool,
                                           int count, double tol, std::uint64_t seed, const std::string& prefix) {
    using S = SemiElement<E>;
    Sampler s(seed);
    Check assoc(prefix + ".associativity", tol, seed), leib(prefix + ".leibniz", tol, seed),
        dd(prefix + ".d_squared", tol, seed), tcomm(prefix + ".t_commutator", tol, seed),
        dtcomm(prefix + ".dt_graded_commutator", tol, seed), inner(prefix + ".inner", tol, seed),
        restr(prefix + ".restricts", tol, seed), action(prefix + ".action_consistency", tol, seed);
    const Rational& lam = ctx->lambda;
    const S t = S::t(ctx), dt = S::dt(ctx);
    int n = static_cast<int>(pool.size()) - 1;
    auto draw = [&]() {
        S x = S::host(ctx, pool[s.uniform(0, n)]);
        int b = s.uniform(0, 1);
        if (b) x = x * t;
        if (s.coin()) x = x * dt;
        if (s.coin()) x += S::host(ctx, pool[s.uniform(0, n)]) * t;
        return x;
    };
    auto graded_comm = [](const S& a, int pa, const S& b, int pb) {
        return (pa * pb) % 2 ? a * b + b * a : a * b - b * a;
    };
    restr.add((t.d() - dt).magnitude());
    restr.add(dt.d().magnitude());
    for (int k = 0; k < count; ++k) {
        S x = draw(), y = draw(), z = draw();
        assoc.add(((x * y) * z - x * (y * z)).magnitude());
        dd.add(x.d().d().magnitude());
        for (int p : x.degrees()) {
            S xp = x.part(p);
            S l = (xp * y).d(), r = xp.d() * y, u = xp * y.d();
            leib.add((p % 2 ? l - r + u : l - r - u).magnitude());
            // λ d = [dt, ·}
            if (lam != 0) inner.add((graded_comm(dt, 1, xp, p) - xp.d().scaled(lam)).magnitude());
        }
        const E& w = pool[s.uniform(0, n)];
        S W = S::host(ctx, w);
        restr.add((W.d() - S::host(ctx, w.d())).magnitude());
        for (int p : w.degrees()) {
            S wp = S::host(ctx, w.part(p));
            E expect = ctx->tau.tau(w.part(p)) - w.part(p).scaled(Rational(p));
            tcomm.add((t * wp - wp * t - S::host(ctx, expect.scaled(lam))).magnitude());
            dtcomm.add((graded_comm(dt, 1, wp, p) - S::host(ctx, w.part(p).d().scaled(lam))).magnitude());
            // [dt,t] acts as λ dt on host elements
            E lhs = w.part(p).d();
            E tw = ctx->tau.tau(w.part(p)) - w.part(p).scaled(Rational(p));
            E a1 = (ctx->tau.tau(lhs) - lhs.scaled(Rational(p + 1)));
            action.add((tw.d() - a1 - lhs).magnitude());
        }
    }
    return {assoc.result(), leib.result(), dd.result(), tcomm.result(), dtcomm.result(),
            inner.result(), restr.result(), action.result()};
}

// Ω(t₁,dt₁)⋊⋯⋊Ω(t_k,dt_k): a TForm at level 1, a semidirect element over level k−1 above.
class TowerElem {
public:
    using Semi = SemiElement<TowerElem>;
    TowerElem() = default;
    static TowerElem line(const TForm& f);
    static TowerElem semi(const Semi& s);

    int level() const;
    const TForm& as_line() const { return *line_; }
    const Semi& as_semi() const { return *semi_; }

    bool is_zero() const;
    std::vector<int> degrees() const;
    TowerElem part(int n) const;
    TowerElem operator+(const TowerElem& o) const;
    TowerElem operator-(const TowerElem& o) const;
    TowerElem operator-() const { return scaled(Rational(-1)); }
    friend TowerElem operator*(const TowerElem& a, const TowerElem& b);
    TowerElem scaled(const Rational& c) const;
    TowerElem d() const;
    double magnitude() const;
    std::string str() const;

private:
    std::shared_ptr<const TForm> line_;
    std::shared_ptr<const Semi> semi_;
};

TowerElem zero_like(const TowerElem& w);
TowerElem one_like(const TowerElem& w);

struct LineTower {
    int n = 1;
    Rational lambda;
    int cap = kDefaultTCap;
    std::vector<TowerElem::Semi::Ctx> ctx;  // ctx[k] for level k+2
    TowerElem t(int i) const;               // 1-based
    TowerElem dt(int i) const;
    TowerElem one() const;
    TowerElem embed(const TowerElem& w) const;  // lift to the top level
};

LineTower make_line_tower(int n, const Rational& lambda, int cap = kDefaultTCap);
// [t_i,t_j] = 0, [dt_i,t_j] = λdt_{min(i,j)}, {dt_i,dt_j} = 0, d t_i = dt_i, and the DGA laws on generators.
Report iterated_line_calculus(int n, const Rational& lambda, std::uint64_t seed = 1, int cap = kDefaultTCap);

// Ω̃̃ as a host algebra: an Ext2 element tied to its construct data.
template <class E>
class Ext2Host {
public:
    using Data = std::shared_ptr<const ConstructData<E>>;
    Ext2Host() = default;
    Ext2Host(Data data, Ext2Element<E> v) : data_(std::move(data)), v_(std::move(v)) {}
    static Ext2Host embed(const Data& data, const E& w) { return {data, Ext2Element<E>::embed(w)}; }
    static Ext2Host theta(const Data& data, const E& zero) { return {data, Ext2Element<E>::theta(zero)}; }
    static Ext2Host dtheta(const Data& data, const E& zero) { return {data, Ext2Element<E>::dtheta(zero)}; }

    const Data& data() const { return data_; }
    const Ext2Element<E>& value() const { return v_; }

    bool is_zero() const { return v_.body.is_zero() && v_.prime.is_zero() && v_.dprime.is_zero(); }
    std::vector<int> degrees() const {
        std::set<int> s;
        for (int p : v_.body.degrees()) s.insert(p);
        for (int p : v_.prime.degrees()) s.insert(p + 1);
        for (int p : v_.dprime.degrees()) s.insert(p + 2);
        return {s.begin(), s.end()};
    }
    Ext2Host part(int n) const { return {data_, {v_.body.part(n), v_.prime.part(n - 1), v_.dprime.part(n - 2)}}; }
    Ext2Host operator+(const Ext2Host& o) const { return {data_ ? data_ : o.data_, v_ + o.v_}; }
    Ext2Host operator-(const Ext2Host& o) const { return {data_ ? data_ : o.data_, v_ - o.v_}; }
    Ext2Host scaled(const Rational& c) const { return {data_, v_.scaled(c)}; }
    friend Ext2Host operator*(const Ext2Host& a, const Ext2Host& b) {
        return {a.data_, ext2_mul(*a.data_, a.v_, b.v_)};
    }
    Ext2Host d() const { return {data_, ext2_d(*data_, v_)}; }
    double magnitude() const { return v_.magnitude(); }
    std::string str() const { return v_.str(); }

private:
    Data data_;
    Ext2Element<E> v_;
};

template <class E>
Ext2Host<E> zero_like(const Ext2Host<E>& w) {
    const E z = zero_like(w.value().body);
    return {w.data(), {z, z, z}};
}
template <class E>
Ext2Host<E> one_like(const Ext2Host<E>& w) {
    return Ext2Host<E>::embed(w.data(), one_like(w.value().body));
}

using SpaceHost = Ext2Host<Form>;
using SpaceElement = SemiElement<SpaceHost>;

struct SpacetimeSetup {
    ClassicalCleft cleft;
    ConformalData conformal;
    std::shared_ptr<const ConstructData<Form>> data;
    TauDerivation<SpaceHost> tau;
    SpaceElement::Ctx ctx;
    std::vector<CheckResult> checks;  // conformal strong mode plus τ laws on Ω̃̃
};

// τ(θ′) = αθ′, τ(dθ′) = (dα)θ′ + αdθ′, τ(ω) = 𝓛_τω + (λ/2)(−1)^{|ω|}(|ω|−β)i_{dα}ω θ′.
TauDerivation<SpaceHost> spacetime_tau_map(const ClassicalCleft& cc, const ConformalData& c,
                                           std::shared_ptr<const ConstructData<Form>> data);
// Builds τ and verifies it on samples; NotConformal when any residual exceeds tol.
SpacetimeSetup spacetime_tau(const ClassicalCleft& cc, const ConformalData& c, std::uint64_t seed, int samples,
                             double tol);
// Same data without the NotConformal gate (negative controls).
SpacetimeSetup spacetime_tau_unchecked(const ClassicalCleft& cc, const ConformalData& c, std::uint64_t seed,
                                       int samples, double tol);

struct SpacetimeRelations {
    Report report;                    // semicalc-consistent relations, λ² term, τ laws
    std::vector<CheckResult> display; // each relation compared with the displayed formula
    std::string table;
};

SpacetimeRelations spacetime_relations(const SpacetimeSetup& st, std::uint64_t seed, int samples, double tol);

}  // namespace rdga
