#include "rdga/sampling.hpp"

#include <algorithm>
#include <bit>

namespace rdga {

int Sampler::uniform(int lo, int hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(rng_() % span);
}

bool Sampler::coin(int num, int den) { return uniform(0, den - 1) < num; }

Rational Sampler::small_rational(int bound) {
    Rational q(uniform(-bound, bound), uniform(1, 2));
    q.canonicalize();
    return q;
}

Polynomial Sampler::polynomial(int nvars, int max_deg) {
    Polynomial p(nvars);
    // enumerate monomials up to max_deg
    std::vector<Monomial> monos{0};
    for (int d = 1; d <= max_deg; ++d) {
        std::vector<Monomial> next;
        for (Monomial m : monos)
            if (mono_deg(m) == d - 1)
                for (int i = 0; i < nvars; ++i) next.push_back(mono_mul(m, mono_var(i)));
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        monos.insert(monos.end(), next.begin(), next.end());
    }
    for (Monomial m : monos)
        if (coin()) p.add_term(m, Rational(uniform(-3, 3)));
    return p;
}

Scalar Sampler::scalar(const Ring& ring, int max_deg) { return ring.from_polynomial(polynomial(ring.nvars(), max_deg)); }

Scalar Sampler::nonzero_scalar(const Ring& ring, int max_deg) {
    for (;;) {
        Polynomial p = polynomial(ring.nvars(), max_deg);
        if (!p.is_zero()) return ring.from_polynomial(p);
    }
}

Form Sampler::form(const ChartPtr& chart, int degree, int max_deg) {
    Form f(chart);
    int n = chart->n;
    if (degree < 0 || degree > n) return f;
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        if (std::popcount(m) == degree) masks.push_back(m);
    for (int attempt = 0; attempt < 4 && f.is_zero(); ++attempt)
        for (std::uint32_t m : masks)
            if (masks.size() == 1 || coin(2, 3)) f.add(m, scalar(chart->ring, max_deg));
    return f;
}

Form Sampler::any_form(const ChartPtr& chart, int max_deg) { return form(chart, uniform(0, chart->n), max_deg); }

TwoPointFn Sampler::two_point(int bound) { return {Rational(uniform(-bound, bound)), Rational(uniform(-bound, bound))}; }

}  // namespace rdga
