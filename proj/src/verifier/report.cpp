#include <sstream>

#include "fubini/verifier.hpp"

namespace fubini::verify {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

nlohmann::json bounds_json(const Bounds& b) {
    return {{"n_max", b.n_max}, {"m_max", b.m_max}, {"k_max", b.k_max}, {"p_max", b.p_max}, {"samples", b.samples}};
}

}  // namespace

std::string params_to_string(const Params& params) {
    std::string out;
    for (const auto& [key, value] : params) {
        if (!out.empty()) out += ';';
        out += key + "=" + value.str();
    }
    return out;
}

nlohmann::json to_json(const IdentityReport& report, bool include_timing) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [key, value] : report.params) params[key] = value.str();
    nlohmann::json j{{"identity", report.identity},
                     {"params", std::move(params)},
                     {"status", std::string(to_string(report.status))},
                     {"lhs", report.lhs},
                     {"rhs", report.rhs}};
    if (include_timing) j["elapsed_us"] = report.elapsed_us;
    return j;
}

nlohmann::json to_json(const VerifyAllResult& result, bool include_timing) {
    nlohmann::json reports = nlohmann::json::array();
    for (const auto& r : result.reports) reports.push_back(to_json(r, include_timing));
    return {{"profile", std::string(to_string(result.profile))},
            {"summary",
             {{"passed", result.summary.passed},
              {"failed", result.summary.failed},
              {"skipped-precondition", result.summary.skipped}}},
            {"reports", std::move(reports)}};
}

nlohmann::json to_json(const RegistryEntry& entry) {
    nlohmann::json j{{"id", entry.id},
                     {"formula", entry.formula},
                     {"description", entry.description},
                     {"corrected", entry.corrected},
                     {"quick", bounds_json(entry.quick)},
                     {"full", bounds_json(entry.full)}};
    if (entry.corrected) j["printed_form"] = entry.printed_form;
    return j;
}

std::string csv_header() { return "identity,params,status,lhs,rhs,elapsed_us"; }

std::string to_csv_row(const IdentityReport& report, bool include_timing) {
    std::ostringstream os;
    os << csv_field(report.identity) << ',' << csv_field(params_to_string(report.params)) << ','
       << to_string(report.status) << ',' << csv_field(report.lhs) << ',' << csv_field(report.rhs) << ',';
    if (include_timing) os << report.elapsed_us;
    return os.str();
}

std::string to_plain(const IdentityReport& report) {
    std::string out;
    switch (report.status) {
        case Status::pass: out = "PASS "; break;
        case Status::fail: out = "FAIL "; break;
        case Status::skipped_precondition: out = "SKIP "; break;
    }
    out += report.identity;
    const std::string params = params_to_string(report.params);
    if (!params.empty()) out += " [" + params + "]";
    if (report.status == Status::fail) out += "\n  lhs: " + report.lhs + "\n  rhs: " + report.rhs;
    if (report.status == Status::skipped_precondition) out += " (" + report.lhs + ")";
    return out;
}

}  // namespace fubini::verify
