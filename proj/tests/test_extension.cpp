#include <doctest.h>

#include "rdga/classical.hpp"
#include "rdga/geometry.hpp"
#include "rdga/suites.hpp"

using namespace rdga;

namespace {
using X = ExtElement<Form>;

X commutator(const Cocycle<Form>& c, const X& a, const X& b) { return ext_mul(c, a, b) - ext_mul(c, b, a); }
}  // namespace

TEST_SUITE("extension") {
    TEST_CASE("flat plane: [x, dx] = λθ′, [x, y] = 0 and d·x = dx") {
        Geometry g = load_geometry("flat2");
        const ChartPtr& ch = g.chart;
        for (const Rational& lambda : {Rational(1), ratio(-1, 2), Rational(0)}) {
            CAPTURE(lambda.get_str());
            ClassicalCleft cc = classical_cleft(g.metric, lambda, 1, 0);
            const Cocycle<Form>& c = cc.data.cocycle;
            X x = X::embed(Form::coordinate(ch, 0)), y = X::embed(Form::coordinate(ch, 1));
            X dx = X::embed(Form::dx(ch, 0)), dy = X::embed(Form::dx(ch, 1));
            X r = commutator(c, x, dx);
            CHECK(r.body.is_zero());
            CHECK((r.prime - Form::constant(ch, lambda)).is_zero());
            CHECK(commutator(c, x, dy).magnitude() == 0);
            CHECK(commutator(c, x, y).magnitude() == 0);
            X d = ext_d(c, x);
            CHECK((d.body - Form::dx(ch, 0)).is_zero());
            CHECK(d.prime.is_zero());
        }
    }

    TEST_CASE("cocycle identities and soundness of the extension on flat2 and sphere2") {
        SuiteConfig cfg;
        cfg.samples = 8;
        for (const char* name : {"flat2", "sphere2"}) {
            CAPTURE(name);
            Report r = extension_suite(load_geometry(name), cfg);
            for (const CheckResult& c : r.checks) {
                CAPTURE(c.id);
                CHECK(c.pass);
            }
        }
    }

    TEST_CASE("a bracket shifted by ω·δη is not a cocycle") {
        Geometry g = load_geometry("flat2");
        ClassicalCleft cc = classical_cleft(g.metric, Rational(1), 1, 0);
        Cocycle<Form> bad = cc.data.cocycle;
        HostMap<Form> delta = cc.delta.as_map();
        Cocycle<Form> good = bad;
        bad.bracket = [good, delta](const Form& w, const Form& e) { return good.bracket(w, e) + w * delta(e); };
        const ChartPtr& ch = g.chart;
        Form x = Form::coordinate(ch, 0), dx = Form::dx(ch, 0), dy = Form::dx(ch, 1);
        std::vector<std::vector<Form>> triples{{x, dx, dy}, {dx, x * dy, dx * dy}, {x * x, dy, x * dx}};
        bool rejected = false;
        for (const CheckResult& r : cocycle_check(bad, triples, 0, 1, "bad")) rejected = rejected || !r.pass;
        CHECK(rejected);
        for (const CheckResult& r : cocycle_check(good, triples, 0, 1, "good")) CHECK(r.pass);
    }

    TEST_CASE("quantize relation table on flat2 names the generators") {
        SuiteConfig cfg;
        cfg.samples = 5;
        Report r = quantize_report(load_geometry("flat2"), cfg);
        CHECK(r.all_pass());
        REQUIRE_FALSE(r.tables.empty());
        CHECK(r.tables.front().find("[x, dx]") != std::string::npos);
    }
}
