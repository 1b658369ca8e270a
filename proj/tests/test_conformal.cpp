#include <doctest.h>

#include "rdga/conformal.hpp"
#include "rdga/geometry.hpp"

using namespace rdga;

namespace {
bool all_pass(const std::vector<CheckResult>& rs) {
    for (const CheckResult& r : rs)
        if (!r.pass) return false;
    return !rs.empty();
}
}  // namespace

TEST_SUITE("conformal") {
    TEST_CASE("Euler form is δ-conformal with α = 2, β = n/2") {
        for (const char* name : {"flat2+euler", "flat3+euler"}) {
            CAPTURE(name);
            Geometry g = load_geometry(name);
            REQUIRE(g.conformal);
            Codifferential d = Codifferential::divergence(g.metric);
            CHECK((g.conformal->alpha - g.chart->ring.constant(2)).is_zero());
            CHECK(g.conformal->beta == ratio(g.chart->n, 2));
            CHECK(all_pass(conformal_check(d, *g.conformal, ConformalMode::Degree1, 1, 20, 0)));
            CHECK(all_pass(conformal_check(d, *g.conformal, ConformalMode::Strong, 1, 20, 0)));
        }
    }

    TEST_CASE("special conformal and Killing forms") {
        for (const char* name : {"flat2+sct", "flat3+killing"}) {
            CAPTURE(name);
            Geometry g = load_geometry(name);
            Codifferential d = Codifferential::divergence(g.metric);
            CHECK(all_pass(conformal_check(d, *g.conformal, ConformalMode::Strong, 2, 15, 0)));
        }
    }

    TEST_CASE("the conformal defect of the Euler form vanishes on x dx and not for a wrong α") {
        Geometry g = load_geometry("flat2+euler");
        Codifferential d = Codifferential::divergence(g.metric);
        Form w = Form::coordinate(g.chart, 0) * Form::dx(g.chart, 0);  // δw = 1
        CHECK(conformal_defect(d, *g.conformal, w).is_zero());
        ConformalData wrong = *g.conformal;
        wrong.alpha = g.chart->ring.constant(3);
        CHECK((conformal_defect(d, wrong, w) + Form::constant(g.chart, 1)).is_zero());
        CHECK_FALSE(all_pass(conformal_check(d, wrong, ConformalMode::Strong, 1, 10, 0)));
    }

    TEST_CASE("a Euclidean rotation is Killing on a geometry file") {
        Geometry g = load_geometry(std::string(RDGA_SOURCE_DIR) + "/geometries/plane_rotation.geom");
        REQUIRE(g.conformal);
        Codifferential d = Codifferential::divergence(g.metric);
        CHECK(all_pass(conformal_check(d, *g.conformal, ConformalMode::Strong, 1, 15, 0)));
    }
}
