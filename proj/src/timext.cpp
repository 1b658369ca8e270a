#include "rdga/timext.hpp"
#include "rdga/report.hpp"

#include <algorithm>
#include <cmath>

namespace rdga {

Rational binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Rational r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Rational rational_pow(const Rational& q, int k) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= q;
    return r;
}

TForm::TForm(Rational lambda, int cap) : lambda_(std::move(lambda)), cap_(cap), p_(cap + 1), q_(cap + 1) {
    if (cap < 0) throw UsageError("negative t-degree cap");
}

TForm TForm::constant(const Rational& c, const Rational& lambda, int cap) { return monomial(0, false, c, lambda, cap); }

TForm TForm::monomial(int k, bool dt, const Rational& c, const Rational& lambda, int cap) {
    TForm f(lambda, cap);
    f.add(k, dt, c);
    return f;
}

void TForm::add(int k, bool dt, const Rational& c) {
    if (c == 0) return;
    if (k > cap_) throw Overflow("t-degree " + std::to_string(k) + " exceeds the cap " + std::to_string(cap_));
    (dt ? q_ : p_)[k] += c;
}

bool TForm::is_zero() const {
    auto z = [](const Rational& c) { return c == 0; };
    return std::all_of(p_.begin(), p_.end(), z) && std::all_of(q_.begin(), q_.end(), z);
}

std::vector<int> TForm::degrees() const {
    std::vector<int> r;
    auto nz = [](const Rational& c) { return c != 0; };
    if (std::any_of(p_.begin(), p_.end(), nz)) r.push_back(0);
    if (std::any_of(q_.begin(), q_.end(), nz)) r.push_back(1);
    return r;
}

TForm TForm::part(int n) const {
    TForm r(lambda_, cap_);
    if (n == 0) r.p_ = p_;
    if (n == 1) r.q_ = q_;
    return r;
}

TForm TForm::operator-() const { return scaled(Rational(-1)); }

TForm& TForm::operator+=(const TForm& o) {
    if (o.cap_ > cap_) {
        cap_ = o.cap_;
        p_.resize(cap_ + 1);
        q_.resize(cap_ + 1);
    }
    for (int k = 0; k <= o.cap_; ++k) {
        p_[k] += o.p_[k];
        q_[k] += o.q_[k];
    }
    return *this;
}

TForm& TForm::operator-=(const TForm& o) { return *this += -o; }

TForm TForm::scaled(const Rational& c) const {
    TForm r(*this);
    for (auto& x : r.p_) x *= c;
    for (auto& x : r.q_) x *= c;
    return r;
}

// (p + q dt)(p′ + q′ dt) = pp′ + (p q′ + q p′(t+λ)) dt
TForm operator*(const TForm& a, const TForm& b) {
    TForm r(a.lambda_, std::max(a.cap_, b.cap_));
    for (int i = 0; i <= a.cap_; ++i) {
        if (a.p_[i] != 0)
            for (int j = 0; j <= b.cap_; ++j) {
                r.add(i + j, false, a.p_[i] * b.p_[j]);
                r.add(i + j, true, a.p_[i] * b.q_[j]);
            }
        if (a.q_[i] != 0)
            for (int k = 0; k <= b.cap_; ++k) {
                if (b.p_[k] == 0) continue;
                for (int j = 0; j <= k; ++j)
                    r.add(i + j, true, a.q_[i] * b.p_[k] * binomial(k, j) * rational_pow(a.lambda_, k - j));
            }
    }
    return r;
}

// d tᵏ = ((t+λ)ᵏ − tᵏ)/λ dt, d(q dt) = 0
TForm TForm::d() const {
    TForm r(lambda_, cap_);
    for (int k = 1; k <= cap_; ++k) {
        if (p_[k] == 0) continue;
        for (int j = 0; j < k; ++j) r.add(j, true, p_[k] * binomial(k, j) * rational_pow(lambda_, k - 1 - j));
    }
    return r;
}

double TForm::magnitude() const {
    double m = 0;
    for (const auto& x : p_) m = std::max(m, std::fabs(x.get_d()));
    for (const auto& x : q_) m = std::max(m, std::fabs(x.get_d()));
    return m;
}

namespace {

std::string poly_str(const std::vector<Rational>& c) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        Rational a = c[k];
        if (!first) os << (a < 0 ? " - " : " + ");
        else if (a < 0) os << "-";
        first = false;
        Rational mag = abs(a);
        if (k == 0 || mag != 1) os << mag.get_str();
        if (k >= 1) os << "t";
        if (k > 1) os << "^" << k;
    }
    return first ? "0" : os.str();
}

}  // namespace

std::string TForm::str() const {
    bool hp = std::any_of(p_.begin(), p_.end(), [](const Rational& c) { return c != 0; });
    bool hq = std::any_of(q_.begin(), q_.end(), [](const Rational& c) { return c != 0; });
    if (!hp && !hq) return "0";
    std::string s;
    if (hp) s = poly_str(p_);
    if (hq) s += (hp ? " + " : "") + std::string("(") + poly_str(q_) + ")dt";
    return s;
}

TForm tform_mul(const TForm& a, const TForm& b) { return a * b; }
TForm tform_d(const TForm& a) { return a.d(); }

TowerElem TowerElem::line(const TForm& f) {
    TowerElem e;
    e.line_ = std::make_shared<const TForm>(f);
    return e;
}

TowerElem TowerElem::semi(const Semi& s) {
    TowerElem e;
    e.semi_ = std::make_shared<const Semi>(s);
    return e;
}

int TowerElem::level() const {
    if (line_) return 1;
    if (!semi_) return 0;
    return semi_->ctx()->zero.level() + 1;
}

bool TowerElem::is_zero() const { return line_ ? line_->is_zero() : (!semi_ || semi_->is_zero()); }

std::vector<int> TowerElem::degrees() const {
    if (line_) return line_->degrees();
    return semi_ ? semi_->degrees() : std::vector<int>{};
}

TowerElem TowerElem::part(int n) const {
    if (line_) return line(line_->part(n));
    return semi(semi_->part(n));
}

TowerElem TowerElem::operator+(const TowerElem& o) const {
    if (!line_ && !semi_) return o;
    if (!o.line_ && !o.semi_) return *this;
    if (line_) return line(*line_ + *o.line_);
    return semi(*semi_ + *o.semi_);
}

TowerElem TowerElem::operator-(const TowerElem& o) const { return *this + o.scaled(Rational(-1)); }

TowerElem operator*(const TowerElem& a, const TowerElem& b) {
    if (a.line_) return TowerElem::line(*a.line_ * *b.line_);
    return TowerElem::semi(*a.semi_ * *b.semi_);
}

TowerElem TowerElem::scaled(const Rational& c) const {
    if (line_) return line(line_->scaled(c));
    if (semi_) return semi(semi_->scaled(c));
    return *this;
}

TowerElem TowerElem::d() const {
    if (line_) return line(line_->d());
    return semi(semi_->d());
}

double TowerElem::magnitude() const {
    if (line_) return line_->magnitude();
    return semi_ ? semi_->magnitude() : 0.0;
}

std::string TowerElem::str() const {
    if (line_) return line_->str();
    return semi_ ? semi_->str() : "0";
}

TowerElem zero_like(const TowerElem& w) {
    if (w.level() == 1) return TowerElem::line(zero_like(w.as_line()));
    return TowerElem::semi(TowerElem::Semi(w.as_semi().ctx()));
}

TowerElem one_like(const TowerElem& w) {
    if (w.level() == 1) return TowerElem::line(one_like(w.as_line()));
    return TowerElem::semi(one_like(w.as_semi()));
}

LineTower make_line_tower(int n, const Rational& lambda, int cap) {
    if (n < 1) throw UsageError("the line tower needs n >= 1");
    LineTower lt;
    lt.n = n;
    lt.lambda = lambda;
    lt.cap = cap;
    TowerElem zero = TowerElem::line(TForm(lambda, cap));
    for (int k = 2; k <= n; ++k) {
        auto ctx = make_semi_context<TowerElem>(zero_tau<TowerElem>(), lambda, zero, cap);
        lt.ctx.push_back(ctx);
        zero = TowerElem::semi(TowerElem::Semi(ctx));
    }
    return lt;
}

TowerElem LineTower::embed(const TowerElem& w) const {
    TowerElem x = w;
    for (int lvl = x.level() + 1; lvl <= n; ++lvl) x = TowerElem::semi(TowerElem::Semi::host(ctx[lvl - 2], x));
    return x;
}

TowerElem LineTower::t(int i) const {
    if (i == 1) return embed(TowerElem::line(TForm::t(lambda, cap)));
    return embed(TowerElem::semi(TowerElem::Semi::t(ctx[i - 2])));
}

TowerElem LineTower::dt(int i) const {
    if (i == 1) return embed(TowerElem::line(TForm::dt(lambda, cap)));
    return embed(TowerElem::semi(TowerElem::Semi::dt(ctx[i - 2])));
}

TowerElem LineTower::one() const { return one_like(t(n)); }

Report iterated_line_calculus(int n, const Rational& lambda, std::uint64_t seed, int cap) {
    LineTower lt = make_line_tower(n, lambda, cap);
    const double tol = 0;
    Check tt("line.t_commute", tol, seed), dtt("line.dt_t_min", tol, seed), dd("line.dt_anticommute", tol, seed),
        dgen("line.d_generators", tol, seed), assoc("line.associativity", tol, seed), leib("line.leibniz", tol, seed),
        dsq("line.d_squared", tol, seed), base("line.reduces_to_tform", tol, seed);
    std::vector<TowerElem> t, dt;
    for (int i = 1; i <= n; ++i) {
        t.push_back(lt.t(i));
        dt.push_back(lt.dt(i));
    }
    for (int i = 0; i < n; ++i) {
        dgen.add((t[i].d() - dt[i]).magnitude());
        dgen.add(dt[i].d().magnitude());
        for (int j = 0; j < n; ++j) {
            tt.add((t[i] * t[j] - t[j] * t[i]).magnitude());
            dtt.add((dt[i] * t[j] - t[j] * dt[i] - dt[std::min(i, j)].scaled(lambda)).magnitude());
            dd.add((dt[i] * dt[j] + dt[j] * dt[i]).magnitude());
        }
    }
    // generators and their pairwise products, with the degree of each
    std::vector<std::pair<TowerElem, int>> gens{{lt.one(), 0}};
    for (int i = 0; i < n; ++i) {
        gens.emplace_back(t[i], 0);
        gens.emplace_back(dt[i], 1);
    }
    std::vector<std::pair<TowerElem, int>> words = gens;
    for (std::size_t a = 1; a < gens.size(); ++a)
        for (std::size_t b = 1; b < gens.size(); ++b)
            words.emplace_back(gens[a].first * gens[b].first, gens[a].second + gens[b].second);
    for (const auto& [x, px] : gens)
        for (const auto& [y, py] : gens)
            for (const auto& [z, pz] : gens) assoc.add(((x * y) * z - x * (y * z)).magnitude());
    for (const auto& [x, px] : words) {
        dsq.add(x.d().d().magnitude());
        for (const auto& [y, py] : gens) {
            TowerElem l = (x * y).d(), r = x.d() * y, u = x * y.d();
            leib.add((px % 2 ? l - r + u : l - r - u).magnitude());
        }
    }
    // the first factor is the TForm calculus itself
    TForm T = TForm::t(lambda, cap), dT = TForm::dt(lambda, cap);
    base.add((dT * T - (T + TForm::constant(lambda, lambda, cap)) * dT).magnitude());
    TowerElem t1 = TowerElem::line(T), dt1 = TowerElem::line(dT);
    base.add(((dt1 * t1 - t1 * dt1).as_line() - dT.scaled(lambda)).magnitude());

    Report rep;
    rep.suite = "timext";
    for (const Check* c : {&tt, &dtt, &dd, &dgen, &assoc, &leib, &dsq, &base}) {
        CheckResult r = c->result();
        r.note = "n = " + std::to_string(n);
        rep.add(r);
    }
    return rep;
}

TauDerivation<SpaceHost> spacetime_tau_map(const ClassicalCleft& cc, const ConformalData& c,
                                           std::shared_ptr<const ConstructData<Form>> data) {
    MetricPtr m = cc.delta.metric_ptr();
    Rational half_l = data->cocycle.lambda / 2;
    ConformalData conf = c;
    auto f = [m, half_l, conf, data](const SpaceHost& x) {
        const Ext2Element<Form>& v = x.value();
        const ChartPtr& ch = m->chart();
        Form da = Form::scalar(ch, conf.alpha).d();
        auto lie = [&](const Form& w) { return lie_derivative(*m, conf.tau, w); };
        Ext2Element<Form> r{lie(v.body), lie(v.prime) + conf.alpha * v.prime + v.dprime * da,
                            lie(v.dprime) + conf.alpha * v.dprime};
        r.prime += by_parts(v.body, [&](const Form& w, int p) {
            Rational k = half_l * (Rational(p) - conf.beta);
            return interior(*m, da, w).scaled(p % 2 ? Rational(-k) : k);
        });
        return SpaceHost(data, r);
    };
    return {f, "spacetime"};
}

namespace {

std::vector<SpaceHost> space_pool(const SpacetimeSetup& st, Sampler& s, int count) {
    const ChartPtr& ch = st.cleft.delta.metric().chart();
    std::vector<Form> forms = form_pool(ch, s, 2, 1);
    std::vector<SpaceHost> out;
    for (const Form& w : forms) out.push_back(SpaceHost::embed(st.data, w));
    for (int k = 0; k < count; ++k) out.emplace_back(st.data, draw_ext2(s, forms));
    return out;
}

SpacetimeSetup build_spacetime(const ClassicalCleft& cc, const ConformalData& c, std::uint64_t seed, int samples,
                               double tol, bool gate) {
    SpacetimeSetup st{cc, c, std::make_shared<const ConstructData<Form>>(cc.data), {}, {}, {}};
    st.tau = spacetime_tau_map(cc, c, st.data);
    st.checks = conformal_check(cc.delta, c, ConformalMode::Strong, seed, samples, tol);
    Sampler s(seed + 1);
    std::vector<SpaceHost> pool = space_pool(st, s, 6);
    for (const CheckResult& r : tau_check(st.tau, pool, samples, tol, seed, "spacetime.tau"))
        st.checks.push_back(r);
    const ChartPtr& ch = cc.delta.metric().chart();
    st.ctx = make_semi_context<SpaceHost>(st.tau, cc.data.cocycle.lambda, SpaceHost::embed(st.data, Form(ch)));
    if (gate)
        for (const CheckResult& r : st.checks)
            if (!r.pass) throw NotConformal(r.id + " residual " + residual_text(r.max_residual));
    return st;
}

}  // namespace

SpacetimeSetup spacetime_tau(const ClassicalCleft& cc, const ConformalData& c, std::uint64_t seed, int samples,
                             double tol) {
    return build_spacetime(cc, c, seed, samples, tol, true);
}

SpacetimeSetup spacetime_tau_unchecked(const ClassicalCleft& cc, const ConformalData& c, std::uint64_t seed,
                                       int samples, double tol) {
    return build_spacetime(cc, c, seed, samples, tol, false);
}

SpacetimeRelations spacetime_relations(const SpacetimeSetup& st, std::uint64_t seed, int samples, double tol) {
    using S = SpaceElement;
    const Metric& m = st.cleft.delta.metric();
    const ChartPtr& ch = m.chart();
    const int n = ch->n;
    const Rational lam = st.ctx->lambda;
    const Form zero(ch);
    const Form alpha = Form::scalar(ch, st.conformal.alpha);
    const Form da = alpha.d();
    auto H = [&](const Ext2Element<Form>& v) { return S::host(st.ctx, SpaceHost(st.data, v)); };
    auto Hf = [&](const Form& w) { return S::host(st.ctx, SpaceHost::embed(st.data, w)); };
    auto dot_d = [&](const Ext2Element<Form>& v) { return ext2_d(*st.data, v); };
    const S t = S::t(st.ctx), dt = S::dt(st.ctx);
    const Ext2Element<Form> th{zero, Form::constant(ch, 1), zero}, dth{zero, zero, Form::constant(ch, 1)};
    auto comm = [](const S& a, const S& b) { return a * b - b * a; };
    auto anti = [](const S& a, const S& b) { return a * b + b * a; };
    const Rational l2coef = lam * lam * ratio(n - 2, 4);

    SpacetimeRelations out;
    Report& rep = out.report;
    rep.suite = "timext";
    rep.environment["lambda_convention"] =
        "relations use this λ; the black-hole calculus they are matched against uses the opposite sign";
    for (const CheckResult& r : st.checks) rep.add(r);
    Sampler ps(seed + 2);
    for (const CheckResult& r :
         semidirect_checks<SpaceHost>(st.ctx, space_pool(st, ps, 4), samples, tol, seed, "spacetime.semicalc"))
        rep.add(r);

    Check c_tth("spacetime.t_theta", tol, seed), c_tw("spacetime.t_one_form", tol, seed),
        c_dta("spacetime.dt_function", tol, seed), c_tdth("spacetime.t_dtheta", tol, seed),
        c_dtw("spacetime.dt_one_form", tol, seed), c_dtth("spacetime.dt_theta", tol, seed),
        c_l2("spacetime.lambda2_term", tol, seed), c_l2s("spacetime.lambda2_term_expected_vanishing", tol, seed);
    Check p_tth("spacetime.display.t_theta", tol, seed), p_tw("spacetime.display.t_one_form", tol, seed),
        p_dta("spacetime.display.dt_function", tol, seed), p_tdth("spacetime.display.t_dtheta", tol, seed),
        p_dtw("spacetime.display.dt_one_form", tol, seed), p_dtth("spacetime.display.dt_theta", tol, seed);

    // semicalc gives [t,x] = λ(τ − |x|)x; θ′ and dθ′ have degrees 1 and 2
    S tth = comm(t, H(th));
    c_tth.add((tth - H({zero, (alpha - Form::constant(ch, 1)).scaled(lam), zero})).magnitude());
    p_tth.add((tth - H({zero, alpha.scaled(lam), zero})).magnitude());
    S tdth = comm(t, H(dth));
    c_tdth.add((tdth - H({zero, da.scaled(lam), (alpha - Form::constant(ch, 2)).scaled(lam)})).magnitude());
    p_tdth.add((tdth - H(dot_d({zero, alpha - Form::constant(ch, 1), zero})).scaled(lam)).magnitude());
    S dtth = anti(dt, H(th));
    c_dtth.add((dtth - H(dth).scaled(lam)).magnitude());
    p_dtth.add((dtth - H(dth).scaled(lam)).magnitude());

    Sampler s(seed);
    double l2_max = 0;
    auto one_form_rel = [&](const Form& w) {
        S lhs = comm(t, Hf(w));
        Form lie_w = lie_derivative(m, st.conformal.tau, w);
        Scalar pair = metric_pairing(m, da, w);
        Ext2Element<Form> disp{(lie_w - w).scaled(lam), Form::scalar(ch, pair).scaled(l2coef), zero};
        double r = (lhs - H(disp)).magnitude();
        c_tw.add(r);
        p_tw.add(r);
        // isolate the λ² coefficient: the θ′ part left after the Lie term
        S rest = lhs - Hf((lie_w - w).scaled(lam));
        auto it = rest.terms().find({0, 0});
        Form prime = it == rest.terms().end() ? zero : it->second.value().prime;
        c_l2.add((prime - Form::scalar(ch, pair).scaled(l2coef)).magnitude());
        l2_max = std::max(l2_max, prime.magnitude());
        S dtw = anti(dt, Hf(w));
        double r2 = (dtw - H(dot_d(Ext2Element<Form>::embed(w))).scaled(lam)).magnitude();
        c_dtw.add(r2);
        p_dtw.add(r2);
    };
    auto function_rel = [&](const Form& a) {
        S lhs = comm(dt, Hf(a));
        double r = (lhs - H(dot_d(Ext2Element<Form>::embed(a))).scaled(lam)).magnitude();
        c_dta.add(r);
        p_dta.add(r);
    };
    for (int i = 0; i < n; ++i) {
        one_form_rel(Form::dx(ch, i));
        function_rel(Form::coordinate(ch, i));
    }
    for (int k = 0; k < samples; ++k) {
        one_form_rel(s.form(ch, 1, 1));
        function_rel(s.form(ch, 0, 2));
    }
    // n = 2 forces the λ² term to vanish; otherwise it must be seen for non-constant α
    bool expect_zero = n == 2 || da.is_zero() || lam == 0;
    c_l2s.add(expect_zero ? l2_max : (l2_max > 0 ? 0.0 : 1.0));
    c_l2s.note(expect_zero ? "expected zero" : "expected nonzero, max |coefficient| " + std::to_string(l2_max));

    for (const Check* c : {&c_tth, &c_tw, &c_dta, &c_tdth, &c_dtw, &c_dtth, &c_l2, &c_l2s}) rep.add(c->result());
    for (const Check* c : {&p_tth, &p_tw, &p_dta, &p_tdth, &p_dtw, &p_dtth}) out.display.push_back(c->result());

    std::ostringstream os;
    os << "Ω̃̃⋊Ω(t,dt) relations (λ = " << lam.get_str() << ", α = " << st.conformal.alpha.str(ch->names)
       << ", β = " << st.conformal.beta.get_str() << ", n = " << n << ")\n";
    auto row = [&](const std::string& rel, const std::string& disp, const S& val, const CheckResult& cr) {
        os << "  " << rel << " = " << val.str() << "\n      display: " << disp
           << (cr.pass ? "  [matches]" : "  [differs, residual " + std::to_string(cr.max_residual) + "]") << "\n";
    };
    row("[t, θ′]", "λαθ′", tth, out.display[0]);
    for (int i = 0; i < n; ++i)
        row("[t, d" + ch->names[i] + "]", "λ(𝓛_τω − ω) + λ²((n−2)/4)(dα,ω)θ′", comm(t, Hf(Form::dx(ch, i))),
            out.display[1]);
    for (int i = 0; i < n; ++i)
        row("[dt, " + ch->names[i] + "]", "λ d·a", comm(dt, Hf(Form::coordinate(ch, i))), out.display[2]);
    row("[t, dθ′]", "λ d·((α−1)θ′)", tdth, out.display[3]);
    for (int i = 0; i < n; ++i)
        row("{dt, d" + ch->names[i] + "}", "λ d·ω", anti(dt, Hf(Form::dx(ch, i))), out.display[4]);
    row("{dt, θ′}", "λ dθ′", dtth, out.display[5]);
    os << "  λ²((n−2)/4) = " << l2coef.get_str() << ", max |λ² θ′ coefficient| over samples = " << l2_max << "\n";
    out.table = os.str();
    rep.tables.push_back(out.table);
    return out;
}

}  // namespace rdga
