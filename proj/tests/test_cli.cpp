#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "rdga/errors.hpp"
#include "rdga/geometry.hpp"

using namespace rdga;

namespace {
struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}
}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("geometry files: parse errors carry line and column") {
        const std::string text = "name = bad\ncoordinates = x, y\nmetric = [\n  x +, 0\n  0, 1\n]\n";
        try {
            parse_geometry(text);
            FAIL("expected a ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 4);
            CHECK(e.column == 6);
        }
        CHECK_THROWS_AS(parse_geometry("name = a\ncoordinates = x\nmetric = [ x ]\ncolour = red\n"), ParseError);
    }

    TEST_CASE("geometry files: asymmetric or singular metrics are rejected") {
        CHECK_THROWS_AS(parse_geometry("name = a\ncoordinates = x, y\nmetric = [ 1, x; 0, 1 ]\n"), InvalidMetric);
        CHECK_THROWS_AS(parse_geometry("name = a\ncoordinates = x, y\nmetric = [ x, y; y, y^2/x ]\n"), InvalidMetric);
    }

    TEST_CASE("geometry files: built-ins round trip through their text") {
        for (const std::string& name : builtin_geometry_names()) {
            CAPTURE(name);
            GeometryDef def = parse_geometry(*builtin_geometry_text(name));
            CHECK(parse_geometry(geometry_text(def)).name == def.name);
        }
        Geometry s = load_geometry("sphere2");
        CHECK(s.jet());
        CHECK(s.chart->names == std::vector<std::string>{"θ", "φ"});
        CHECK(s.chart->ring.order() == 4);
        CHECK_THROWS_AS(load_geometry("no-such-geometry"), UsageError);
    }

    TEST_CASE("expressions: decimals, negative powers and functions") {
        Geometry g = load_geometry("flat2");
        Scalar a = parse_expression("0.25*x^-2 - 1/(4*x^2)", *g.chart);
        CHECK(a.is_zero());
        CHECK_THROWS_AS(parse_expression("sin(x)", *g.chart), ParseError);
        CHECK_THROWS_AS(parse_expression("1/(x-x)", *g.chart), ParseError);
    }

    TEST_CASE("exit codes: pass, check failure, usage error") {
        CHECK(run({"z2"}).code == 0);
        CHECK(run({"verify", "--geometry", "flat2", "--suite", "timext", "--samples", "3"}).code == 0);
        Run zero_tol = run({"verify", "--geometry", "sphere2", "--suite", "riemann", "--samples", "2", "--tolerance", "0"});
        CHECK(zero_tol.code == 1);
        CHECK(zero_tol.out.find("FAIL") != std::string::npos);
        Run st = run({"spacetime", "--geometry", "flat2"});
        CHECK(st.code == 2);
        CHECK(st.err.find("UsageError") != std::string::npos);
        CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
        CHECK(run({"frobnicate"}).code == 2);
        CHECK(run({"ricci", "--geometry", "missing.geom"}).code == 2);
        CHECK(run({"quantize", "--lambda", "one"}).code == 2);
    }

    TEST_CASE("ricci prints both methods and their difference") {
        Run r = run({"ricci", "--geometry", "flat3"});
        CHECK(r.code == 0);
        CHECK(r.out.find("ricci.delta_vs_oracle") != std::string::npos);
        CHECK(r.out.find("ricci.curvature_vs_oracle") != std::string::npos);
    }

    TEST_CASE("reports are byte identical for the same seed and carry the structured fields") {
        std::vector<std::string> args{"quantize", "--geometry", "flat2", "--samples", "4", "--seed", "9", "--json", "-"};
        Run a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        nlohmann::json j = nlohmann::json::parse(a.out);
        CHECK(j["suite"] == "quantize");
        CHECK(j["environment"]["seed"] == "9");
        CHECK(j["environment"]["lambda"] == "1");
        REQUIRE(j["checks"].is_array());
        for (const auto& c : j["checks"]) {
            CHECK(c.contains("id"));
            CHECK(c.contains("samples"));
            CHECK(c.contains("max_residual"));
            CHECK(c["pass"] == true);
            CHECK(c["seed"].is_number());
        }
    }

    TEST_CASE("λ = 0 quantizes to the classical relations") {
        Run r = run({"quantize", "--geometry", "flat2", "--lambda", "0", "--samples", "3"});
        CHECK(r.code == 0);
        CHECK(r.out.find("[x, dx] = 0") != std::string::npos);
    }
}
