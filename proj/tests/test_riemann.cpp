#include <doctest.h>

#include <cmath>

#include "rdga/errors.hpp"
#include "rdga/geometry.hpp"
#include "rdga/riemann.hpp"
#include "rdga/sampling.hpp"

using namespace rdga;

namespace {
double jet_value(const Scalar& a) { return static_cast<double>(a.jet().constant()); }

std::string source_dir() { return RDGA_SOURCE_DIR; }
}  // namespace

TEST_SUITE("riemann") {
    TEST_CASE("sphere Christoffel symbols at the base point") {
        Geometry g = load_geometry("sphere2");
        Christoffel G(*g.metric);
        CHECK(jet_value(G(0, 1, 1)) == doctest::Approx(-std::sin(1.0) * std::cos(1.0)).epsilon(1e-12));
        CHECK(jet_value(G(1, 0, 1)) == doctest::Approx(std::cos(1.0) / std::sin(1.0)).epsilon(1e-12));
        CHECK(G(0, 0, 0).magnitude() < 1e-20);
    }

    TEST_CASE("divergence codifferential on flat2") {
        Geometry g = load_geometry("flat2");
        Codifferential d = Codifferential::divergence(g.metric);
        const ChartPtr& ch = g.chart;
        Form x = Form::coordinate(ch, 0), y = Form::coordinate(ch, 1);
        Form euler = x * Form::dx(ch, 0) + y * Form::dx(ch, 1);
        CHECK((d(euler) - Form::constant(ch, 2)).is_zero());
        CHECK(d(Form::dx(ch, 0) * Form::dx(ch, 1)).is_zero());
        CHECK((d(x * Form::dx(ch, 0) * Form::dx(ch, 1)) - Form::dx(ch, 1)).is_zero());
    }

    TEST_CASE("regularity, δ² = 0 and Hodge agreement on seeded samples") {
        Geometry g = load_geometry("diagpoly");
        Codifferential d = Codifferential::divergence(g.metric);
        Sampler s(11);
        for (int k = 0; k < 15; ++k) {
            Form a = s.form(g.chart, 0, 1), w = s.any_form(g.chart, 1);
            CHECK(d(d(w)).is_zero());
            CHECK((d(a * w) - a * d(w) - interior(*g.metric, a.d(), w)).is_zero());
        }
        Geometry f = load_geometry("flat3");
        Codifferential df = Codifferential::divergence(f.metric);
        for (int k = 0; k < 10; ++k) {
            Form w = s.any_form(f.chart);
            CHECK((hodge_delta(*f.metric, 1, w) - df(w)).is_zero());
        }
    }

    TEST_CASE("Levi-Civita from δ agrees with Christoffel symbols on coordinate forms") {
        for (const char* name : {"diagpoly", "sphere2"}) {
            Geometry g = load_geometry(name);
            Codifferential d = Codifferential::divergence(g.metric);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    Form dxi = Form::dx(g.chart, i), dxj = Form::dx(g.chart, j);
                    CHECK((levi_connection(d, dxi, dxj) - oracle_nabla(*g.metric, d.christoffel(), dxi, dxj))
                              .magnitude() <= g.default_tolerance());
                }
        }
    }

    TEST_CASE("Ricci as -1/2 Δ(g)") {
        SUBCASE("unit sphere: Ricci = g within 1e-8 per jet coefficient") {
            Geometry g = load_geometry("sphere2");
            Codifferential d = Codifferential::divergence(g.metric);
            CHECK((ricci_via_delta(d, 1e-8) - metric_tensor(*g.metric)).magnitude() < 1e-8);
        }
        SUBCASE("sphere of radius 2: Ricci = g / 4") {
            Geometry g = load_geometry("sphere2r:2");
            Codifferential d = Codifferential::divergence(g.metric);
            CHECK((ricci_via_delta(d, 1e-8) - metric_tensor(*g.metric).scaled(ratio(1, 4))).magnitude() < 1e-8);
        }
        SUBCASE("flat3 is exactly Ricci flat") {
            Geometry g = load_geometry("flat3");
            Codifferential d = Codifferential::divergence(g.metric);
            CHECK(ricci_via_delta(d, 0).is_zero());
        }
        SUBCASE("hyperbolic plane from a geometry file: Ricci = -g exactly") {
            Geometry g = load_geometry(source_dir() + "/geometries/hyperbolic2.geom");
            Codifferential d = Codifferential::divergence(g.metric);
            CHECK((ricci_via_delta(d, 0) + metric_tensor(*g.metric)).is_zero());
            CHECK((ricci_via_curvature(d) + metric_tensor(*g.metric)).is_zero());
        }
    }

    TEST_CASE("curvature of the unit sphere: R(X,Y)ζ against the oracle") {
        Geometry g = load_geometry("sphere2");
        Codifferential d = Codifferential::divergence(g.metric);
        Form dth = Form::dx(g.chart, 0), dph = Form::dx(g.chart, 1);
        Form r = curvature(d, dth, dph, dth);
        CHECK((r - oracle_curvature(*g.metric, d.christoffel(), dth, dph, dth)).magnitude() < 1e-8);
        CHECK(r.magnitude() > 1e-3);
    }

    TEST_CASE("Θ is constant along δ + ⌊_v") {
        Geometry g = load_geometry("diagpoly");
        Codifferential d = Codifferential::divergence(g.metric);
        ThetaData base = theta_map(d);
        Sampler s(5);
        for (int k = 0; k < 3; ++k) {
            std::vector<Scalar> v{s.scalar(g.chart->ring, 2), s.scalar(g.chart->ring, 2)};
            CHECK(theta_difference(base, theta_map(Codifferential::with_interior(d, v))) == 0);
        }
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) CHECK((base.pairing[i][j] - g.metric->ginv(i, j)).is_zero());
    }

    TEST_CASE("a third order operator is not regular") {
        Geometry g = load_geometry("flat2");
        FormMap f = [](const Form& w) {
            Form r(w.chart());
            for (const auto& [mask, a] : w.terms()) r.add(mask, a.partial(0).partial(0));
            return contract(0, r);
        };
        CHECK_THROWS_AS(theta_map(Codifferential::custom(g.metric, f)), NotRegular);
    }
}
