#include "rdga/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace rdga {

void Check::add(double residual) {
    ++samples_;
    if (std::isnan(residual) || residual > max_ || std::isinf(residual)) max_ = std::isnan(residual) ? INFINITY : residual;
}

void Check::fail(const std::string& why) {
    forced_fail_ = true;
    note_ = why;
}

CheckResult Check::result() const {
    CheckResult r;
    r.id = id_;
    r.samples = samples_;
    r.max_residual = max_;
    r.pass = !forced_fail_ && max_ <= tol_;
    r.seed = seed_;
    r.note = note_;
    return r;
}

bool Report::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void Report::merge(const Report& o) {
    checks.insert(checks.end(), o.checks.begin(), o.checks.end());
    tables.insert(tables.end(), o.tables.begin(), o.tables.end());
    for (const auto& [k, v] : o.environment) environment.emplace(k, v);
}

void Report::sort() {
    std::stable_sort(checks.begin(), checks.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
}

namespace {
std::string fmt_residual(double r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", r);
    return buf;
}
}  // namespace

std::string residual_text(double r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", r);
    return buf;
}

std::string Report::text() const {
    std::string out = "suite: " + suite + "\n";
    for (const auto& [k, v] : environment) out += "  " + k + " = " + v + "\n";
    char line[512];
    std::snprintf(line, sizeof line, "%-58s %7s %12s %6s\n", "check", "samples", "max_resid", "status");
    out += line;
    for (const auto& c : checks) {
        std::snprintf(line, sizeof line, "%-58s %7d %12s %6s", c.id.c_str(), c.samples, fmt_residual(c.max_residual).c_str(),
                      c.pass ? "PASS" : "FAIL");
        out += line;
        if (!c.note.empty()) out += "  " + c.note;
        out += "\n";
    }
    for (const auto& t : tables) out += "\n" + t;
    std::size_t failed = std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; });
    out += "\n" + std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) + " checks passed\n";
    return out;
}

std::string Report::json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["samples"] = c.samples;
        e["max_residual"] = std::isinf(c.max_residual) ? nlohmann::ordered_json("inf") : nlohmann::ordered_json(c.max_residual);
        e["pass"] = c.pass;
        e["seed"] = c.seed;
        if (!c.note.empty()) e["note"] = c.note;
        j["checks"].push_back(e);
    }
    nlohmann::ordered_json env = nlohmann::ordered_json::object();
    for (const auto& [k, v] : environment) env[k] = v;
    j["environment"] = env;
    if (!tables.empty()) j["tables"] = tables;
    return j.dump(2) + "\n";
}

}  // namespace rdga
