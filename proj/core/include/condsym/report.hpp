#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace condsym::report {

// One verdict-producing check. Every verifier in the project reports through
// this row so the CLI renders a uniform document.
struct CheckRow {
    std::string id;
    std::string target;
    std::string mode;   // "symbolic" | "numeric" | "symbolic->numeric"
    std::string status; // "pass" | "fail" | "inconclusive"
    std::optional<double> max_residual;
    double tolerance = 0;
    std::optional<int> samples;
    std::optional<std::uint64_t> seed;
    std::optional<std::vector<double>> location;
    std::string note;

    bool passed() const { return status == "pass"; }
};

struct Summary {
    int pass = 0, fail = 0, inconclusive = 0;
};

Summary summarize(const std::vector<CheckRow>& checks);

struct Report {
    std::string command;
    nlohmann::ordered_json config;
    std::vector<CheckRow> checks;
    bool with_timestamp = true;

    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
    // 0 all pass, 1 any fail, 3 inconclusive present and strict
    int exit_code(bool strict) const;
};

nlohmann::ordered_json row_to_json(const CheckRow& row);

} // namespace condsym::report
