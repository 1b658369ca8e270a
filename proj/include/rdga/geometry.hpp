#pragma once
#include <optional>
#include <string>
#include <vector>

#include "rdga/conformal.hpp"

namespace rdga {

// Parses an expression over the chart coordinates into the chart's ring.
// Grammar: + − * / ^ (integer powers), parentheses, sin cos exp sqrt, decimal literals.
// line and column locate the first character for ParseError positions.
Scalar parse_expression(const std::string& text, const Chart& chart, int line = 1, int column = 1);

// A piece of source text with its position in the document.
struct SourceText {
    std::string text;
    int line = 0, column = 0;
};

struct GeometryDef {
    std::string name;
    std::vector<std::string> coords;
    bool jet = false;
    std::vector<Rational> base_point;
    int order = 4;
    std::vector<std::vector<SourceText>> metric;
    std::vector<SourceText> tau;  // components on dx^i
    SourceText alpha, beta;
    // Ricci = k·g when known (for the ricci command's Einstein check)
    std::optional<Rational> einstein;

    bool has_conformal() const { return !tau.empty(); }
};

struct Geometry {
    GeometryDef def;
    ChartPtr chart;
    MetricPtr metric;
    std::optional<ConformalData> conformal;

    bool jet() const { return def.jet; }
    // exact on the rational backend, per jet coefficient otherwise
    double default_tolerance() const { return def.jet ? 1e-8 : 0.0; }
};

// Line-oriented document: `key = value` lines, `metric = [` rows `]`, optional `conformal {` ... `}`.
// Throws ParseError on malformed text and InvalidMetric when the metric is asymmetric or singular.
GeometryDef parse_geometry(const std::string& text);
std::string geometry_text(const GeometryDef& def);
// order > 0 overrides the jet order of the definition
Geometry build_geometry(const GeometryDef& def, int order = 0);

std::vector<std::string> builtin_geometry_names();
std::optional<std::string> builtin_geometry_text(const std::string& name);
// A built-in name (flat2, flat3, sphere2, sphere2r[:r], diagpoly, with +euler/+sct/+killing on flat charts)
// or a path to a geometry file.
Geometry load_geometry(const std::string& name_or_path, int order = 0);

}  // namespace rdga
