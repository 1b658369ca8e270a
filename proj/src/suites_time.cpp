#include "rdga/classical.hpp"
#include "rdga/errors.hpp"
#include "rdga/suites.hpp"
#include "rdga/timext.hpp"

namespace rdga {

namespace {

void describe(Report& rep, const Geometry& g, const SuiteConfig& cfg) {
    rep.environment["geometry"] = g.def.name;
    rep.environment["backend"] = g.jet() ? "jet(order " + std::to_string(g.chart->ring.order()) + ")" : "rational";
    rep.environment["seed"] = std::to_string(cfg.seed);
    rep.environment["samples"] = std::to_string(cfg.samples);
    rep.environment["lambda"] = cfg.lambda.get_str();
    rep.environment["cap"] = std::to_string(cfg.cap);
}

SpacetimeRelations relations(const Geometry& g, const SuiteConfig& cfg) {
    if (!g.conformal)
        throw UsageError("geometry '" + g.def.name + "' has no conformal block (tau, alpha, beta); try flat2+euler");
    const double tol = cfg.tol(g);
    ClassicalCleft cc = classical_cleft(g.metric, cfg.lambda, cfg.seed, tol);
    SpacetimeSetup st = spacetime_tau_unchecked(cc, *g.conformal, cfg.seed, cfg.samples, tol);
    return spacetime_relations(st, cfg.seed, cfg.samples, tol);
}

}  // namespace

Report timext_suite(const Geometry& g, const SuiteConfig& cfg) {
    const double tol = cfg.tol(g);
    const ChartPtr& ch = g.chart;
    Report rep = iterated_line_calculus(3, cfg.lambda, cfg.seed);
    rep.suite = "timext";
    Sampler s(cfg.seed + 11);
    std::vector<Form> pool = form_pool(ch, s, 2, 1);
    const Form zero(ch);

    auto ctx0 = make_semi_context<Form>(zero_tau<Form>(), cfg.lambda, zero);
    for (const CheckResult& r : semidirect_checks<Form>(ctx0, pool, cfg.samples, tol, cfg.seed, "semicalc.tau_zero"))
        rep.add(r);

    if (g.conformal) {
        // 𝓛_τ on Ω(M): a degree 0 derivation commuting with d for any 1-form τ
        MetricPtr mp = g.metric;
        Form tau = g.conformal->tau;
        TauDerivation<Form> lie{[mp, tau](const Form& w) { return lie_derivative(*mp, tau, w); }, "lie_tau"};
        for (const CheckResult& r : tau_check<Form>(lie, pool, cfg.samples, tol, cfg.seed, "semicalc.lie_tau.tau"))
            rep.add(r);
        auto ctx1 = make_semi_context<Form>(lie, cfg.lambda, zero);
        for (const CheckResult& r : semidirect_checks<Form>(ctx1, pool, cfg.samples, tol, cfg.seed, "semicalc.lie_tau"))
            rep.add(r);
        rep.merge(spacetime_report(g, cfg));
    }
    describe(rep, g, cfg);
    rep.environment["tolerance"] = std::to_string(tol);
    rep.suite = "timext";
    rep.sort();
    return rep;
}

Report spacetime_report(const Geometry& g, const SuiteConfig& cfg) {
    SpacetimeRelations rel = relations(g, cfg);
    Report rep = rel.report;
    rep.suite = "spacetime";
    describe(rep, g, cfg);
    rep.sort();
    return rep;
}

SpacetimeDisplay spacetime_display(const Geometry& g, const SuiteConfig& cfg) {
    SpacetimeRelations rel = relations(g, cfg);
    SpacetimeDisplay out;
    out.report.suite = "spacetime.display";
    for (const CheckResult& r : rel.display) out.report.add(r);
    out.report.tables.push_back(rel.table);
    describe(out.report, g, cfg);
    out.report.sort();
    out.matches = out.report.all_pass();
    return out;
}

}  // namespace rdga
