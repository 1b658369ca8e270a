#include <doctest.h>

#include "rdga/errors.hpp"
#include "rdga/ncdga.hpp"

using namespace rdga;

namespace {
const TwoPointFn f{Rational(2), Rational(5)};
NcForm th(int n = 1) { return NcForm::theta_pow(n); }
}  // namespace

TEST_SUITE("ncdga") {
    TEST_CASE("inner calculus on two points: θf = f̄θ and df = [θ, f]") {
        NcForm F = NcForm::function(f);
        CHECK(th() * F == NcForm::theta_pow(1, f.bar()));
        CHECK(F.d() == NcForm::theta_pow(1, TwoPointFn(3, -3)));
        CHECK(th().d() == th(2).scaled(2));
        CHECK(F.d().d().is_zero());  // θ² is central
        CHECK((th(2) * F - F * th(2)).is_zero());
    }

    TEST_CASE("⊥ table c(m,n) = 2(-1)^{m+1} m n") {
        PerpTable p = PerpTable::standard_table();
        CHECK(nc_perp(p, th(), th()) == NcForm::function(2));
        CHECK(nc_perp(p, th(2), th()) == th().scaled(-4));
        CHECK(nc_perp(p, th(2), th(3)) == th(3).scaled(-12));
        CHECK(nc_inner_delta(p, th(3)) == th(2).scaled(6));
        CHECK(nc_pairing(p, th(), th()) == TwoPointFn(1));
    }

    TEST_CASE("products past the cap raise Overflow") {
        NcForm a = NcForm::theta_pow(3, 1, 4), b = NcForm::theta_pow(2, 1, 4);
        CHECK_THROWS_AS(a * b, Overflow);
    }

    TEST_CASE("the two-point example reproduces every quoted value") {
        Report r = z2_report(PerpTable::standard_table(), 8, Z2Scope::Example);
        for (const CheckResult& c : r.checks) {
            CAPTURE(c.id);
            CHECK(c.pass);
            CHECK(c.max_residual == 0);
        }
        CHECK(r.checks.size() > 25);
        CHECK(r.environment.at("perp_table") == PerpTable::standard_table().name);
    }

    TEST_CASE("a user table is reported without a verdict on the example values") {
        PerpTable p = PerpTable::from_rule("twice", [](int m, int n) { return TwoPointFn(Rational(4 * m * n)); });
        CHECK_FALSE(p.standard);
        Report r = z2_report(p, 6, Z2Scope::Example);
        CHECK(r.environment.count("note") == 1);
    }
}
