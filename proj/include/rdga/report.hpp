#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rdga {

// "1.234e-05"; residuals are far below std::to_string's six decimals
std::string residual_text(double r);

struct CheckResult {
    std::string id;
    int samples = 0;
    double max_residual = 0;
    bool pass = true;
    std::uint64_t seed = 0;
    std::string note;
};

// Running maximum of residuals for one identity.
class Check {
public:
    Check(std::string id, double tol, std::uint64_t seed) : id_(std::move(id)), tol_(tol), seed_(seed) {}
    void add(double residual);
    void note(const std::string& s) { note_ = s; }
    // force a failure independent of residuals (e.g. an unexpected exception)
    void fail(const std::string& why);
    CheckResult result() const;
    double max() const { return max_; }

private:
    std::string id_;
    double tol_;
    std::uint64_t seed_;
    int samples_ = 0;
    double max_ = 0;
    bool forced_fail_ = false;
    std::string note_;
};

struct Report {
    std::string suite;
    std::vector<CheckResult> checks;
    std::map<std::string, std::string> environment;
    std::vector<std::string> tables;  // free text blocks printed after the check table

    bool all_pass() const;
    void add(const CheckResult& c) { checks.push_back(c); }
    void merge(const Report& o);
    void sort();
    std::string text() const;
    std::string json() const;
};

}  // namespace rdga
