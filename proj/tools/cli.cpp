#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>

#include "rdga/errors.hpp"
#include "rdga/ncdga.hpp"
#include "rdga/polynomial.hpp"
#include "rdga/suites.hpp"

namespace rdga {

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

struct Options {
    std::string geometry = "flat2";
    std::string suite = "all";
    std::uint64_t seed = 1;
    int samples = 100;
    std::string lambda = "1";
    std::optional<double> tolerance;
    int order = 0;
    int cap = kDefaultNcCap;
    std::string json;
};

Rational parse_lambda(const std::string& s) {
    try {
        return parse_rational(s);
    } catch (const std::invalid_argument&) {
        throw UsageError("--lambda expects a rational such as 1, -2, 1/2 or 0.25, got '" + s + "'");
    }
}

SuiteConfig config(const Options& o) {
    SuiteConfig cfg;
    cfg.seed = o.seed;
    cfg.samples = o.samples;
    cfg.tolerance = o.tolerance;
    cfg.lambda = parse_lambda(o.lambda);
    cfg.cap = o.cap;
    return cfg;
}

int emit(const Report& rep, const Options& o, std::ostream& out) {
    if (o.json == "-") {
        out << rep.json();
    } else {
        out << rep.text();
        if (!o.json.empty()) {
            std::ofstream f(o.json);
            if (!f) throw UsageError("cannot write '" + o.json + "'");
            f << rep.json();
        }
    }
    return rep.all_pass() ? kPass : kFail;
}

std::string geometry_help() {
    std::string s = "built-in name or path to a geometry file; built-ins:";
    for (const std::string& n : builtin_geometry_names()) s += " " + n;
    return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Riemannian geometry as a deformed differential graded algebra: identity checks and quantization"};
    app.name("rdga");
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* c, bool geometry, bool sampling) {
        if (geometry) {
            c->add_option("--geometry", o.geometry, geometry_help());
            c->add_option("--order", o.order, "jet order for jet-backed geometries (default from the file)")
                ->check(CLI::Range(0, 8));
        }
        if (sampling) {
            c->add_option("--seed", o.seed, "seed for every sampler");
            c->add_option("--samples", o.samples, "random samples per identity")->check(CLI::Range(1, 100000));
            c->add_option("--tolerance", o.tolerance,
                          "residual tolerance (default: 0 on rationals, 1e-8 per jet coefficient)");
        }
        c->add_option("--lambda", o.lambda, "deformation parameter λ");
        c->add_option("--cap", o.cap, "top θ-degree kept on the two-point space")->check(CLI::Range(2, 64));
        c->add_option("--json", o.json, "also write the structured report to this path ('-' prints only JSON)");
    };

    CLI::App* verify_cmd = app.add_subcommand("verify", "run verification suites");
    common(verify_cmd, true, true);
    verify_cmd->add_option("--suite", o.suite, "riemann | extension | timext | all")
        ->check(CLI::IsMember({"riemann", "extension", "timext", "all"}));
    CLI::App* ricci_cmd = app.add_subcommand("ricci", "Ricci via -1/2 Δ(g) and via Christoffel symbols");
    common(ricci_cmd, true, true);
    CLI::App* quantize_cmd = app.add_subcommand("quantize", "relations of the quantized calculus on generators");
    common(quantize_cmd, true, true);
    CLI::App* z2_cmd = app.add_subcommand("z2", "the two-point example");
    common(z2_cmd, false, false);
    CLI::App* spacetime_cmd = app.add_subcommand("spacetime", "quantized spacetime from conformal data");
    common(spacetime_cmd, true, true);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "UsageError: " << e.what() << "\n";
        if (!app.get_subcommands().empty()) err << "run with --help for usage\n";
        return kUsage;
    }

    Report rep;
    try {
        if (z2_cmd->parsed()) {
            rep = z2_report(PerpTable::standard_table(), o.cap);
            return emit(rep, o, out);
        }
        const SuiteConfig cfg = config(o);
        const Geometry g = load_geometry(o.geometry, o.order);
        if (verify_cmd->parsed())
            rep = verify(g, o.suite, cfg);
        else if (ricci_cmd->parsed())
            rep = ricci_report(g, cfg);
        else if (quantize_cmd->parsed())
            rep = quantize_report(g, cfg);
        else
            rep = spacetime_report(g, cfg);
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    } catch (const InvalidMetric& e) {
        err << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kFail;
    }
    try {
        return emit(rep, o, out);
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace rdga
