#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "fubini/verifier.hpp"

namespace fubini::verify {

namespace {

struct Case {
    const RegistryEntry* entry = nullptr;
    Params params;
    bool witness = false;
};

IdentityReport run_case(const Case& c) {
    IdentityReport report{.identity = c.entry->id, .params = c.params};
    const auto start = std::chrono::steady_clock::now();
    try {
        const Sides s = c.witness ? c.entry->printed_witness() : c.entry->evaluate(c.params);
        report.lhs = s.lhs;
        report.rhs = s.rhs;
        report.status = (s.lhs == s.rhs) ? Status::pass : Status::fail;
    } catch (const DomainError& e) {
        report.status = Status::skipped_precondition;
        report.lhs = e.what();
    } catch (const std::exception& e) {
        report.status = Status::fail;
        report.lhs = std::string("error: ") + e.what();
    }
    const auto stop = std::chrono::steady_clock::now();
    report.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
    return report;
}

void add_cases(const RegistryEntry& entry, const Bounds& bounds, std::vector<Case>& out) {
    for (auto& p : entry.grid(bounds)) out.push_back({&entry, std::move(p), false});
    if (entry.printed_witness) {
        Params p = entry.witness_params;
        p.emplace("printed_witness", Rat(1));
        out.push_back({&entry, std::move(p), true});
    }
}

std::vector<IdentityReport> run_all(const std::vector<Case>& cases, unsigned jobs) {
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, std::max<std::size_t>(1, cases.size()));

    std::vector<IdentityReport> reports(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) reports[i] = run_case(cases[i]);
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();

    std::stable_sort(reports.begin(), reports.end(), [](const IdentityReport& a, const IdentityReport& b) {
        if (a.identity != b.identity) return a.identity < b.identity;
        return a.params < b.params;
    });
    return reports;
}

}  // namespace

std::string_view to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped_precondition: return "skipped-precondition";
    }
    return "fail";
}

Profile parse_profile(std::string_view text) {
    if (text == "quick") return Profile::quick;
    if (text == "full") return Profile::full;
    throw UsageError("unknown profile '" + std::string(text) + "' (expected quick or full)");
}

std::string_view to_string(Profile p) { return p == Profile::quick ? "quick" : "full"; }

std::vector<IdentityReport> verify(const RegistryEntry& entry, const Bounds& bounds, unsigned jobs) {
    std::vector<Case> cases;
    add_cases(entry, bounds, cases);
    return run_all(cases, jobs);
}

std::vector<IdentityReport> verify(std::string_view id, const BoundOverrides& overrides, unsigned jobs) {
    const RegistryEntry& entry = find_entry(id);
    return verify(entry, overrides.apply(entry.full), jobs);
}

Summary summarize(const std::vector<IdentityReport>& reports) {
    Summary s;
    for (const auto& r : reports) {
        switch (r.status) {
            case Status::pass: ++s.passed; break;
            case Status::fail: ++s.failed; break;
            case Status::skipped_precondition: ++s.skipped; break;
        }
    }
    return s;
}

VerifyAllResult verify_all(Profile profile, unsigned jobs) {
    std::vector<Case> cases;
    for (const auto& entry : registry()) add_cases(entry, profile == Profile::quick ? entry.quick : entry.full, cases);
    VerifyAllResult out{.profile = profile, .reports = run_all(cases, jobs)};
    out.summary = summarize(out.reports);
    return out;
}

}  // namespace fubini::verify
