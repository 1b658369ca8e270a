#include "rdga/polynomial.hpp"

#include <sstream>
#include <vector>

#include "rdga/errors.hpp"

namespace rdga {

namespace {
constexpr Monomial kHighBits = 0x8080808080808080ULL;
}

Rational parse_rational(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        Rational q(s, 10);
        q.canonicalize();
        return q;
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::string den = "1" + std::string(s.size() - dot - 1, '0');
    Rational q{mpz_class(digits, 10), mpz_class(den, 10)};
    q.canonicalize();
    return q;
}

Monomial mono_var(int i, int e) {
    if (e > kMaxExponent) throw Overflow("exponent above 127");
    return (static_cast<Monomial>(e) << 56) | (static_cast<Monomial>(e) << (8 * (6 - i)));
}

Monomial mono_mul(Monomial a, Monomial b) {
    Monomial s = a + b;
    if (s & kHighBits) throw Overflow("monomial exponent above 127");
    return s;
}

bool mono_divides(Monomial a, Monomial b) {
    // every byte of a is <= the matching byte of b
    Monomial diff = (b | kHighBits) - a;
    return (diff & kHighBits) == kHighBits;
}

Polynomial::Polynomial(int nvars, const Rational& c) : nvars_(nvars) {
    if (c != 0) terms_.emplace(0, c);
}

Polynomial Polynomial::var(int nvars, int i) {
    Polynomial p(nvars);
    p.terms_.emplace(mono_var(i), Rational(1));
    return p;
}

Polynomial Polynomial::monomial(int nvars, Monomial m, const Rational& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational Polynomial::constant_term() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const { return terms_.empty() ? -1 : mono_deg(terms_.begin()->first); }

void Polynomial::add_term(Monomial m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (nvars_ == 0) nvars_ = o.nvars_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (nvars_ == 0) nvars_ = o.nvars_;
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.nvars_ ? a.nvars_ : b.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return Polynomial(nvars_);
    Polynomial r(*this);
    for (auto& [m, v] : r.terms_) v *= c;
    return r;
}

Polynomial Polynomial::partial(int i) const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
        int e = mono_exp(m, i);
        if (e == 0) continue;
        r.add_term(m - mono_var(i), c * e);
    }
    return r;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial r(nvars_, Rational(1));
    Polynomial base(*this);
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

int Polynomial::degree_in(int v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, mono_exp(m, v));
    return d;
}

Polynomial Polynomial::coeff_in(int v, int k) const {
    Polynomial r(nvars_);
    Monomial strip = k ? mono_var(v, k) : 0;
    for (const auto& [m, c] : terms_)
        if (mono_exp(m, v) == k) r.terms_.emplace(m - strip, c);
    return r;
}

int Polynomial::lowest_var() const {
    int best = -1;
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < nvars_; ++i)
            if (mono_exp(m, i) && (best < 0 || i < best)) best = i;
    return best;
}

Rational Polynomial::content() const {
    if (terms_.empty()) return Rational(0);
    mpz_class num = 0, den = 1;
    for (const auto& [m, c] : terms_) {
        num = ::gcd(num, c.get_num());
        den = ::lcm(den, c.get_den());
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Polynomial Polynomial::primitive() const {
    if (terms_.empty()) return *this;
    Rational c = content();
    if (leading_coeff() < 0) c = -c;
    return scaled(1 / c);
}

bool Polynomial::divide_exact(const Polynomial& a, const Polynomial& b, Polynomial& q) {
    if (b.is_zero()) throw NotInvertible("division by zero polynomial");
    q = Polynomial(a.nvars_ ? a.nvars_ : b.nvars_);
    if (b.is_constant()) {
        q = a.scaled(1 / b.leading_coeff());
        return true;
    }
    Polynomial r(a);
    Monomial lb = b.leading_monomial();
    Rational cb = b.leading_coeff();
    while (!r.is_zero()) {
        Monomial lr = r.leading_monomial();
        if (!mono_divides(lb, lr)) return false;
        Monomial t = mono_div(lr, lb);
        Rational c = r.leading_coeff() / cb;
        q.add_term(t, c);
        for (const auto& [m, cm] : b.terms_) r.add_term(mono_mul(t, m), -c * cm);
    }
    return true;
}

namespace {

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
    Polynomial q;
    if (!Polynomial::divide_exact(a, b, q)) throw Error("internal: inexact polynomial division");
    return q;
}

Polynomial content_in(const Polynomial& p, int v) {
    int d = p.degree_in(v);
    Polynomial g(p.nvars());
    for (int k = 0; k <= d; ++k) {
        Polynomial c = p.coeff_in(v, k);
        if (c.is_zero()) continue;
        g = Polynomial::gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

// Pseudo-remainder of a by b with respect to variable v.
Polynomial prem(const Polynomial& a, const Polynomial& b, int v) {
    int db = b.degree_in(v);
    Polynomial lb = b.coeff_in(v, db);
    Polynomial r(a);
    int n = a.nvars();
    while (!r.is_zero()) {
        int dr = r.degree_in(v);
        if (dr < db) break;
        Polynomial lr = r.coeff_in(v, dr);
        Polynomial shift = dr > db ? Polynomial::monomial(n, mono_var(v, dr - db), Rational(1))
                                   : Polynomial(n, Rational(1));
        // minimal multipliers: the remainder changes only by a v-free factor, which the caller removes
        Polynomial g = Polynomial::gcd(lb, lr);
        r = exact_quotient(lb, g) * r - exact_quotient(lr, g) * shift * b;
        r = r.primitive();
    }
    return r;
}

}  // namespace

namespace {

// Primitive remainder sequence in the lowest variable. Correct but prone to coefficient growth,
// so it only runs when the cheaper routes below give up.
Polynomial prs_gcd(const Polynomial& a, const Polynomial& b) {
    int n = a.nvars() ? a.nvars() : b.nvars();
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    if (a.is_constant() || b.is_constant()) return Polynomial(n, Rational(1));
    if (a == b) return a.primitive();

    int va = a.lowest_var(), vb = b.lowest_var();
    int v = (va < 0) ? vb : (vb < 0 ? va : std::min(va, vb));
    bool a_has = a.degree_in(v) > 0, b_has = b.degree_in(v) > 0;
    if (!a_has) return Polynomial::gcd(a, content_in(b, v));
    if (!b_has) return Polynomial::gcd(content_in(a, v), b);

    Polynomial ca = content_in(a, v), cb = content_in(b, v);
    Polynomial c = Polynomial::gcd(ca, cb);
    Polynomial pa = exact_quotient(a, ca).primitive();
    Polynomial pb = exact_quotient(b, cb).primitive();
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    for (;;) {
        Polynomial r = prem(pa, pb, v);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) {
            pb = Polynomial(n, Rational(1));
            break;
        }
        pa = std::move(pb);
        pb = exact_quotient(r, content_in(r, v)).primitive();
    }
    if (!pb.is_constant()) pb = exact_quotient(pb, content_in(pb, v));
    return (c * pb).primitive();
}

// Images modulo the Mersenne prime 2^61 - 1 certify coprimality: if for every variable the
// univariate images (other variables at random points, leading coefficients kept) are coprime,
// so are the polynomials.
constexpr std::uint64_t kP = (1ULL << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
    std::uint64_t r = static_cast<std::uint64_t>(t & kP) + static_cast<std::uint64_t>(t >> 61);
    return r >= kP ? r - kP : r;
}
std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mulmod(a, a))
        if (e & 1) r = mulmod(r, a);
    return r;
}
std::uint64_t invmod(std::uint64_t a) { return powmod(a, kP - 2); }

bool reduce_mod(const Rational& c, std::uint64_t& out) {
    out = mpz_fdiv_ui(c.get_num().get_mpz_t(), kP);
    if (c.get_den() == 1) return true;
    std::uint64_t d = mpz_fdiv_ui(c.get_den().get_mpz_t(), kP);
    if (d == 0) return false;
    out = mulmod(out, invmod(d));
    return true;
}

using ModPoly = std::vector<std::uint64_t>;

void trim(ModPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// powers[i][e] = pt[i]^e
using PowerTable = std::vector<std::vector<std::uint64_t>>;

bool image(const Polynomial& a, int v, const PowerTable& powers, ModPoly& out) {
    out.assign(a.degree_in(v) + 1, 0);
    for (const auto& [m, c] : a.terms()) {
        std::uint64_t t;
        if (!reduce_mod(c, t)) return false;
        for (int i = 0; i < a.nvars(); ++i)
            if (i != v && mono_exp(m, i)) t = mulmod(t, powers[i][mono_exp(m, i)]);
        std::uint64_t& slot = out[mono_exp(m, v)];
        slot += t;
        if (slot >= kP) slot -= kP;
    }
    std::size_t deg = out.size();
    trim(out);
    return out.size() == deg;  // leading coefficient survived
}

int mod_gcd_degree(ModPoly a, ModPoly b) {
    while (!b.empty()) {
        std::uint64_t inv = invmod(b.back());
        while (a.size() >= b.size()) {
            std::uint64_t f = mulmod(a.back(), inv);
            std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[off + i] = (a[off + i] + kP - mulmod(f, b[i])) % kP;
            trim(a);
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

bool certified_coprime(const Polynomial& a, const Polynomial& b) {
    std::uint64_t state = 0x9E3779B97F4A7C15ULL;
    PowerTable powers(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        std::uint64_t x = (state >> 3) % kP;
        int top = std::max(a.degree_in(i), b.degree_in(i));
        powers[i].assign(top + 1, 1);
        for (int e = 1; e <= top; ++e) powers[i][e] = mulmod(powers[i][e - 1], x);
    }
    for (int v = 0; v < a.nvars(); ++v) {
        if (a.degree_in(v) == 0 || b.degree_in(v) == 0) continue;
        ModPoly ia, ib;
        if (!image(a, v, powers, ia) || !image(b, v, powers, ib)) return false;
        if (mod_gcd_degree(ia, ib) != 0) return false;
    }
    return true;
}

// Heuristic gcd over Z by evaluation at a large integer and symmetric digit interpolation
// (Char, Geddes and Gonnet). Inputs carry integer coefficients.
int highest_var(const Polynomial& p) {
    int best = -1;
    for (const auto& [m, c] : p.terms())
        for (int i = p.nvars() - 1; i > best; --i)
            if (mono_exp(m, i)) best = i;
    return best;
}

mpz_class int_content(const Polynomial& p) {
    mpz_class g = 0;
    for (const auto& [m, c] : p.terms()) g = ::gcd(g, c.get_num());
    return g;
}

mpz_class max_norm(const Polynomial& p) {
    mpz_class n = 0;
    for (const auto& [m, c] : p.terms())
        if (abs(c.get_num()) > n) n = abs(c.get_num());
    return n;
}

Polynomial eval_at(const Polynomial& p, int v, const mpz_class& x) {
    Polynomial r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        int e = mono_exp(m, v);
        mpz_class xe;
        mpz_pow_ui(xe.get_mpz_t(), x.get_mpz_t(), e);
        r.add_term(e ? m - mono_var(v, e) : m, Rational(c.get_num() * xe));
    }
    return r;
}

Polynomial interpolate(Polynomial h, int v, const mpz_class& x) {
    Polynomial out(h.nvars());
    mpz_class half = x / 2;
    for (int k = 0; !h.is_zero(); ++k) {
        Polynomial digit(h.nvars()), next(h.nvars());
        for (const auto& [m, c] : h.terms()) {
            mpz_class d;
            mpz_fdiv_r(d.get_mpz_t(), c.get_num().get_mpz_t(), x.get_mpz_t());
            if (d > half) d -= x;
            if (d != 0) out.add_term(k ? mono_mul(m, mono_var(v, k)) : m, Rational(d));
            mpz_class rest = (c.get_num() - d) / x;
            if (rest != 0) next.add_term(m, Rational(rest));
        }
        h = std::move(next);
    }
    if (!out.is_zero() && out.leading_coeff() < 0) out = -out;
    return out;
}

Polynomial divided_by(const Polynomial& p, const mpz_class& z) { return p.scaled(Rational(mpz_class(1), z)); }

bool heu_gcd(const Polynomial& f0, const Polynomial& g0, Polynomial& h, Polynomial& cf, Polynomial& cg) {
    int n = f0.nvars() ? f0.nvars() : g0.nvars();
    if (f0.is_constant() || g0.is_constant()) {
        mpz_class z = ::gcd(int_content(f0), int_content(g0));
        h = Polynomial(n, Rational(z));
        cf = divided_by(f0, z);
        cg = divided_by(g0, z);
        return true;
    }
    int v = std::max(highest_var(f0), highest_var(g0));
    mpz_class common = ::gcd(int_content(f0), int_content(g0));
    Polynomial f = divided_by(f0, common), g = divided_by(g0, common);
    mpz_class fn = max_norm(f), gn = max_norm(g);
    mpz_class bound = 2 * std::min(fn, gn) + 29;
    mpz_class x = std::min(bound, mpz_class(99 * sqrt(bound)));
    mpz_class alt = 2 * std::min(mpz_class(fn / abs(f.leading_coeff().get_num())),
                                 mpz_class(gn / abs(g.leading_coeff().get_num()))) + 4;
    if (alt > x) x = alt;
    for (int attempt = 0; attempt < 6; ++attempt) {
        Polynomial ff = eval_at(f, v, x), gg = eval_at(g, v, x);
        Polynomial hh, cff, cfg, q, q2;
        if (!ff.is_zero() && !gg.is_zero() && heu_gcd(ff, gg, hh, cff, cfg)) {
            Polynomial cand = interpolate(hh, v, x);
            cand = divided_by(cand, int_content(cand));
            if (Polynomial::divide_exact(f, cand, q) && Polynomial::divide_exact(g, cand, q2)) {
                h = cand.scaled(Rational(common));
                cf = q;
                cg = q2;
                return true;
            }
            Polynomial cofactor = interpolate(cff, v, x);
            if (!cofactor.is_zero() && Polynomial::divide_exact(f, cofactor, q) &&
                Polynomial::divide_exact(g, q, q2)) {
                h = q.scaled(Rational(common));
                cf = cofactor;
                cg = q2;
                return true;
            }
            cofactor = interpolate(cfg, v, x);
            if (!cofactor.is_zero() && Polynomial::divide_exact(g, cofactor, q) &&
                Polynomial::divide_exact(f, q, q2)) {
                h = q.scaled(Rational(common));
                cf = q2;
                cg = cofactor;
                return true;
            }
        }
        x = 73794 * x * mpz_class(sqrt(sqrt(x))) / 27011;
    }
    return false;
}

}  // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    int n = a.nvars_ ? a.nvars_ : b.nvars_;
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    if (a.is_constant() || b.is_constant()) return Polynomial(n, Rational(1));
    if (a == b) return a.primitive();
    Polynomial pa = a.primitive(), pb = b.primitive();
    if (pa == pb) return pa;
    if (certified_coprime(pa, pb)) return Polynomial(n, Rational(1));
    Polynomial q;
    if (pb.total_degree() <= pa.total_degree() && divide_exact(pa, pb, q)) return pb;
    if (pa.total_degree() <= pb.total_degree() && divide_exact(pb, pa, q)) return pa;
    try {
        Polynomial h, cf, cg;
        if (heu_gcd(pa, pb, h, cf, cg)) return h.primitive();
    } catch (const Overflow&) {
        // digit expansion ran past the exponent range; fall through
    }
    return prs_gcd(pa, pb);
}

namespace {
bool rational_sqrt(const Rational& q, Rational& r) {
    if (q < 0) return false;
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    r = Rational(sqrt(n), sqrt(d));
    r.canonicalize();
    return true;
}
}  // namespace

bool Polynomial::sqrt(Polynomial& root) const {
    root = Polynomial(nvars_);
    if (is_zero()) return true;
    Monomial lm = leading_monomial();
    Monomial half = 0;
    for (int i = 0; i < nvars_; ++i) {
        int e = mono_exp(lm, i);
        if (e % 2) return false;
    }
    for (int i = 0; i < nvars_; ++i) {
        int e = mono_exp(lm, i);
        if (e) half = mono_mul(half, mono_var(i, e / 2));
    }
    Rational c;
    if (!rational_sqrt(leading_coeff(), c)) return false;
    root.add_term(half, c);
    Monomial last = half;
    Rational twice = 2 * c;
    for (;;) {
        Polynomial rem = *this - root * root;
        if (rem.is_zero()) return true;
        Monomial lr = rem.leading_monomial();
        if (!mono_divides(half, lr)) return false;
        Monomial t = mono_div(lr, half);
        if (t >= last) return false;
        root.add_term(t, rem.leading_coeff() / twice);
        last = t;
    }
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (a != 1 || m == 0) {
            os << a.get_str();
            wrote = true;
        }
        for (int i = 0; i < nvars_; ++i) {
            int e = mono_exp(m, i);
            if (!e) continue;
            if (wrote) os << "*";
            os << (i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i));
            if (e > 1) os << "^" << e;
            wrote = true;
        }
    }
    return os.str();
}

}  // namespace rdga
