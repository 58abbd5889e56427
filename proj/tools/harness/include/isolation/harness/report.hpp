#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace isolation::harness {

enum ExitCode : int {
    exit_success = 0,
    exit_violations = 1,
    exit_usage = 2,
};

/// Outcome of one CLI command: machine-readable records plus the same
/// information as plain text lines.
struct RunReport {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json records = nlohmann::json::array();
    nlohmann::json aggregate = nlohmann::json::object();
    std::vector<std::string> lines;
    int violations = 0;

    [[nodiscard]] auto exit_code() const -> int { return violations > 0 ? exit_violations : exit_success; }
    [[nodiscard]] auto to_json() const -> nlohmann::json;
    [[nodiscard]] auto to_text() const -> std::string;
};

/// Exact rational kept as an integer pair, compared by cross-multiplication.
struct Ratio {
    long long num = 0;
    long long den = 1;

    friend auto operator<(const Ratio & a, const Ratio & b) -> bool { return a.num * b.den < b.num * a.den; }
    friend auto operator==(const Ratio & a, const Ratio & b) -> bool { return a.num * b.den == b.num * a.den; }
    [[nodiscard]] auto reduced() const -> Ratio;
    [[nodiscard]] auto str() const -> std::string;
    [[nodiscard]] auto json() const -> nlohmann::json;
};

} // namespace isolation::harness
