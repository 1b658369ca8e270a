// Acceptance criteria, one line each: "criterion N  PASS|FAIL  title  (details)".
// With --criterion N only that criterion runs; the exit code is 0 iff all run criteria pass.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "rdga/classical.hpp"
#include "rdga/conformal.hpp"
#include "rdga/geometry.hpp"
#include "rdga/ncdga.hpp"
#include "rdga/suites.hpp"
#include "rdga/timext.hpp"

using namespace rdga;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [" << what << "]";
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

// every check whose id starts with one of the prefixes passes, and at least one exists per prefix
void require_ids(Outcome& o, const Report& r, const std::string& where, std::initializer_list<std::string> prefixes,
                 int min_samples = 0) {
    for (const std::string& p : prefixes) {
        int seen = 0;
        for (const CheckResult& c : r.checks) {
            if (!starts_with(c.id, p)) continue;
            ++seen;
            o.require(c.pass, where + ": " + c.id + " residual " + std::to_string(c.max_residual));
            if (min_samples) o.require(c.samples >= min_samples, where + ": " + c.id + " has " +
                                                                      std::to_string(c.samples) + " samples");
        }
        o.require(seen > 0, where + ": no check " + p);
    }
}

void require_all(Outcome& o, const Report& r, const std::string& where) {
    for (const CheckResult& c : r.checks) o.require(c.pass, where + ": " + c.id);
    o.require(!r.checks.empty(), where + ": empty report");
}

SuiteConfig config(int samples) {
    SuiteConfig cfg;
    cfg.samples = samples;
    return cfg;
}

Outcome criterion_ricci_reproduction() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    Geometry s = load_geometry("sphere2");
    Report rs = ricci_report(s, config(100));
    require_ids(o, rs, "sphere2", {"ricci.delta_vs_oracle", "ricci.curvature_vs_oracle", "ricci.einstein"});
    Codifferential d = Codifferential::divergence(s.metric);
    double vs_g = (ricci_via_delta(d, 1e-8) - metric_tensor(*s.metric)).magnitude();
    o.require(vs_g <= 1e-8, "sphere2: |Ricci - g| = " + std::to_string(vs_g));
    Geometry f = load_geometry("flat3");
    Codifferential df = Codifferential::divergence(f.metric);
    o.require(ricci_via_delta(df, 0).is_zero(), "flat3: Ricci not exactly zero");
    require_all(o, ricci_report(f, config(100)), "flat3");
    double t = seconds_since(t0);
    o.require(t < 10, "runtime " + std::to_string(t) + " s");
    o.detail << " sphere2 |Ricci-g| = " << vs_g << ", flat3 exact zero, " << t << " s";
    return o;
}

// riemann suites are shared between criteria run in the same process
const Report& riemann(const std::string& name) {
    static std::map<std::string, Report> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, riemann_suite(load_geometry(name), config(100))).first;
    return it->second;
}

Outcome criterion_levi_reconstruction() {
    Outcome o;
    for (const char* g : {"flat2", "sphere2", "diagpoly"}) {
        require_ids(o, riemann(g), g, {"riemann.levi_oracle_coordinate"});
        require_ids(o, riemann(g), g, {"riemann.levi_oracle_two_forms"}, 50);
        require_ids(o, riemann(g), g, {"riemann.torsion_free", "riemann.metric_compatible"}, 100);
    }
    o.detail << " flat2, sphere2, diagpoly";
    return o;
}

Outcome criterion_bv_suite() {
    Outcome o;
    for (const char* g : {"flat2", "flat3", "sphere2", "diagpoly"})
        require_ids(o, riemann(g), g,
                    {"riemann.delta_triple", "riemann.four_term_perp", "riemann.delta_lie", "riemann.comrel",
                     "riemann.schouten_first", "riemann.schouten_second", "forms.L1", "forms.L2",
                     "riemann.liehigher"},
                    100);
    o.detail << " flat2, flat3, sphere2, diagpoly at 100 samples";
    return o;
}

Outcome criterion_bijection_fiber() {
    Outcome o;
    for (const char* name : {"flat2", "diagpoly"}) {
        Geometry g = load_geometry(name);
        Codifferential d = Codifferential::divergence(g.metric);
        ThetaData base = theta_map(d);
        Sampler s(1);
        for (int k = 0; k < 5; ++k) {
            std::vector<Scalar> v;
            for (int i = 0; i < g.chart->n; ++i) v.push_back(s.scalar(g.chart->ring, 2));
            double diff = theta_difference(base, theta_map(Codifferential::with_interior(d, v)));
            o.require(diff == 0, std::string(name) + ": Θ moved by " + std::to_string(diff));
        }
    }
    o.detail << " 5 polynomial vector fields on flat2 and diagpoly";
    return o;
}

Outcome criterion_z2_example() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    Report r = z2_report(PerpTable::standard_table(), kDefaultNcCap, Z2Scope::Example);
    double t = seconds_since(t0);
    for (const CheckResult& c : r.checks) o.require(c.pass && c.max_residual == 0, "z2: " + c.id);
    o.require(t < 1, "runtime " + std::to_string(t) + " s");
    o.detail << " " << r.checks.size() << " exact checks, degrees <= " << kDefaultNcCap << ", " << t << " s";
    return o;
}

const Report& z2_full() {
    static const Report r = z2_report(PerpTable::standard_table(), kDefaultNcCap, Z2Scope::Full);
    return r;
}

const Report& extension(const std::string& name) {
    static std::map<std::string, Report> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, extension_suite(load_geometry(name), config(100))).first;
    return it->second;
}

Outcome criterion_extension_soundness() {
    Outcome o;
    for (const char* g : {"flat2", "sphere2"})
        require_ids(o, extension(g), g,
                    {"extension.cocycle.", "extension.ext.", "extension.ext2.", "extension.cleft.",
                     "extension.corrupted_bracket_rejected"});
    require_ids(o, z2_full(), "z2", {"z2.cocycle.", "z2.extension.", "z2.ext2.", "z2.cleft."});
    o.detail << " flat2, sphere2 and the two-point inner cocycle, 100 triples";
    return o;
}

Outcome criterion_gauge_invariance() {
    Outcome o;
    for (const char* g : {"flat2", "sphere2", "diagpoly"})
        for (const char* b : {"perpB.constant.", "perpB.coordinate.", "perpB.polynomial."})
            require_ids(o, extension(g), g, {std::string(b)});
    for (const char* b : {"perpB.z2.unit.", "perpB.z2.linear.", "perpB.z2.alternating."})
        require_ids(o, z2_full(), "z2", {std::string(b)});
    o.detail << " three maps B on flat2, sphere2, diagpoly and the two-point space";
    return o;
}

Outcome criterion_semidirect() {
    Outcome o;
    for (const char* g : {"flat2+euler", "flat3+sct"}) {
        Report r = timext_suite(load_geometry(g), config(30));
        require_ids(o, r, g, {"semicalc.tau_zero.", "semicalc.lie_tau.", "spacetime.semicalc.", "spacetime.tau."});
        require_all(o, r, g);
    }
    Report line = iterated_line_calculus(3, Rational(1));
    require_all(o, line, "iterated line");
    o.detail << " τ = 0, τ = 𝓛_τ and spacetime τ; iterated line n = 3";
    return o;
}

Outcome criterion_conformal() {
    Outcome o;
    for (const char* name : {"flat2+euler", "flat3+euler"}) {
        Geometry g = load_geometry(name);
        Codifferential d = Codifferential::divergence(g.metric);
        for (ConformalMode mode : {ConformalMode::Degree1, ConformalMode::Strong})
            for (const CheckResult& c : conformal_check(d, *g.conformal, mode, 1, 100, 0))
                o.require(c.pass && c.max_residual == 0, std::string(name) + ": " + c.id);
        ConformalData wrong = *g.conformal;
        wrong.alpha = wrong.alpha + g.chart->ring.one();
        bool rejected = false;
        for (const CheckResult& c : conformal_check(d, wrong, ConformalMode::Strong, 1, 100, 0))
            rejected = rejected || !c.pass;
        o.require(rejected, std::string(name) + ": α + 1 accepted");
    }
    o.detail << " Euler form on flat2 and flat3, wrong α rejected";
    return o;
}

Outcome criterion_spacetime() {
    Outcome o;
    SuiteConfig cfg = config(30);
    for (const char* g : {"flat2+euler", "flat2+sct", "flat3+sct"})
        require_all(o, spacetime_report(load_geometry(g), cfg), g);
    Report two = spacetime_report(load_geometry("flat2+sct"), cfg);
    Report three = spacetime_report(load_geometry("flat3+sct"), cfg);
    for (const CheckResult& c : two.checks)
        if (c.id == "spacetime.lambda2_term_expected_vanishing")
            o.require(c.note.find("expected zero") == 0, "flat2: λ² term not zero");
    for (const CheckResult& c : three.checks)
        if (c.id == "spacetime.lambda2_term_expected_vanishing")
            o.require(c.note.find("expected nonzero") == 0, "flat3: λ² term vanished");
    for (const char* g : {"flat2+euler", "flat3+sct"}) {
        SpacetimeDisplay disp = spacetime_display(load_geometry(g), cfg);
        for (const CheckResult& c : disp.report.checks)
            o.require(c.pass, std::string(g) + ": relation table differs from display at " + c.id);
    }
    o.detail << " τ laws and λ²(n−2)/4 term checked; display comparison on flat2+euler, flat3+sct";
    return o;
}

struct Criterion {
    int number;
    const char* title;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria{
        {1, "Ricci reproduction", criterion_ricci_reproduction},
        {2, "Levi-Civita reconstruction", criterion_levi_reconstruction},
        {3, "BV identities", criterion_bv_suite},
        {4, "bijection fiber", criterion_bijection_fiber},
        {5, "two-point example", criterion_z2_example},
        {6, "extension soundness", criterion_extension_soundness},
        {7, "gauge invariance", criterion_gauge_invariance},
        {8, "semidirect product", criterion_semidirect},
        {9, "conformal suite", criterion_conformal},
        {10, "spacetime quantization", criterion_spacetime},
    };
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--criterion" && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: acceptance [--criterion N]\n";
            return 2;
        }
    }
    if (only < 0 || only > static_cast<int>(criteria.size())) {
        std::cerr << "no criterion " << only << "\n";
        return 2;
    }
    bool all = true;
    for (const Criterion& c : criteria) {
        if (only && c.number != only) continue;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << " [exception: " << e.what() << "]";
        }
        all = all && o.pass;
        std::cout << "criterion " << c.number << (c.number < 10 ? "   " : "  ") << (o.pass ? "PASS" : "FAIL") << "  "
                  << c.title << " (" << o.detail.str().substr(1) << ")" << std::endl;
    }
    return all ? 0 : 1;
}
