#include "condsym/report.hpp"

#include <chrono>
#include <sstream>

namespace condsym::report {

Summary summarize(const std::vector<CheckRow>& checks) {
    Summary s;
    for (const auto& c : checks) {
        if (c.status == "pass") ++s.pass;
        else if (c.status == "fail") ++s.fail;
        else ++s.inconclusive;
    }
    return s;
}

nlohmann::ordered_json row_to_json(const CheckRow& row) {
    nlohmann::ordered_json j;
    j["id"] = row.id;
    j["target"] = row.target;
    j["mode"] = row.mode;
    j["status"] = row.status;
    j["max_residual"] = row.max_residual ? nlohmann::ordered_json(*row.max_residual)
                                         : nlohmann::ordered_json(nullptr);
    j["tolerance"] = row.tolerance;
    j["samples"] = row.samples ? nlohmann::ordered_json(*row.samples)
                               : nlohmann::ordered_json(nullptr);
    j["seed"] = row.seed ? nlohmann::ordered_json(*row.seed) : nlohmann::ordered_json(nullptr);
    j["location"] = row.location ? nlohmann::ordered_json(*row.location)
                                 : nlohmann::ordered_json(nullptr);
    if (!row.note.empty()) j["note"] = row.note;
    return j;
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["config"] = config;
    if (with_timestamp) {
        auto now = std::chrono::system_clock::now().time_since_epoch();
        j["timestamp_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(now).count();
    }
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) j["checks"].push_back(row_to_json(c));
    Summary s = summarize(checks);
    j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"inconclusive", s.inconclusive}};
    return j;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "== " << command << "\n";
    for (const auto& c : checks) {
        std::string tag = c.status == "pass" ? "PASS" : (c.status == "fail" ? "FAIL" : "INCONCLUSIVE");
        os << "[" << tag << "] " << c.id;
        if (!c.target.empty()) os << "  target=" << c.target;
        os << "  mode=" << c.mode;
        if (c.max_residual) {
            os.precision(6);
            os << "  max_residual=" << std::scientific << *c.max_residual;
            os.unsetf(std::ios_base::floatfield);
        }
        if (c.tolerance > 0) {
            os.precision(6);
            os << "  tol=" << std::scientific << c.tolerance;
            os.unsetf(std::ios_base::floatfield);
        }
        if (c.samples) os << "  samples=" << *c.samples;
        if (!c.note.empty()) os << "  (" << c.note << ")";
        os << "\n";
    }
    Summary s = summarize(checks);
    os << "summary: pass=" << s.pass << " fail=" << s.fail << " inconclusive=" << s.inconclusive
       << "\n";
    return os.str();
}

int Report::exit_code(bool strict) const {
    Summary s = summarize(checks);
    if (s.fail > 0) return 1;
    if (strict && s.inconclusive > 0) return 3;
    return 0;
}

} // namespace condsym::report
