#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fubini/apostol.hpp"
#include "fubini/bernoulli.hpp"
#include "fubini/combinatorics.hpp"
#include "fubini/fubini.hpp"
#include "fubini/serialize.hpp"
#include "fubini/verifier.hpp"

namespace {

using namespace fubini;
using verify::UsageError;
using json = nlohmann::json;

enum class Format { plain, json, csv };

const std::map<std::string, Format> kFormats{{"plain", Format::plain}, {"json", Format::json}, {"csv", Format::csv}};

struct ComputeArgs {
    std::string object;
    std::optional<unsigned> n, k, m, p;
    std::optional<std::string> at;
    Format format = Format::plain;
};

// One computed value in the three output shapes.
struct Value {
    std::string plain;
    json as_json;
    std::string csv;
};

unsigned need(const std::optional<unsigned>& v, const ComputeArgs& a, const char* flag) {
    if (!v) throw UsageError("compute " + a.object + " requires " + flag);
    return *v;
}

Rat parse_at(const std::string& text) {
    try {
        return Rat::parse(text);
    } catch (const std::exception&) {
        throw UsageError("--at expects a rational literal like -3/7, got '" + text + "'");
    }
}

Value scalar(const std::string& s) { return {s, s, s}; }

Value compute_value(const ComputeArgs& a) {
    const std::string& o = a.object;
    if (o == "stirling1") return scalar(to_string(stirling1_unsigned(need(a.n, a, "--n"), need(a.k, a, "--k"))));
    if (o == "stirling2") return scalar(to_string(stirling2(need(a.n, a, "--n"), need(a.k, a, "--k"))));
    if (o == "fubini-number") return scalar(to_string(fubini_number(need(a.n, a, "--n"))));
    if (o == "bernoulli") return scalar(bernoulli(need(a.n, a, "--n")).str());
    if (o == "p-bernoulli") return scalar(p_bernoulli(need(a.n, a, "--n"), need(a.p, a, "--p")).str());
    if (o == "fubini-poly") {
        const PolyZ& f = fubini_poly(need(a.n, a, "--n")).poly;
        if (a.at) return scalar(f.eval(parse_at(*a.at)).str());
        return {pretty(f, "y"), to_json(f), serialize(f)};
    }
    if (o == "fubini-two-var") {
        const BiPolyZ f = fubini_two_var(need(a.n, a, "--n")).poly;
        return {pretty(f), to_json(f), serialize(f)};
    }
    if (o == "apostol") {
        const RatFunc& f = apostol_bernoulli(need(a.n, a, "--n")).fn;
        if (a.at) return scalar(f.eval(parse_at(*a.at)).str());
        return {pretty(f, "λ"), to_json(f), serialize(f)};
    }
    throw UsageError("unknown object '" + o + "'");
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

int run_compute(const ComputeArgs& a) {
    const Value v = compute_value(a);
    std::vector<std::pair<std::string, std::string>> params;
    auto push = [&](const char* name, const std::optional<unsigned>& x) {
        if (x) params.emplace_back(name, std::to_string(*x));
    };
    push("n", a.n);
    push("k", a.k);
    push("m", a.m);
    push("p", a.p);
    if (a.at) params.emplace_back("at", parse_at(*a.at).str());

    switch (a.format) {
        case Format::plain: std::cout << v.plain << '\n'; break;
        case Format::json: {
            json p = json::object();
            for (const auto& [key, value] : params) p[key] = value;
            std::cout << json{{"object", a.object}, {"params", p}, {"value", v.as_json}}.dump() << '\n';
            break;
        }
        case Format::csv: {
            std::string header = "object", row = a.object;
            for (const auto& [key, value] : params) {
                header += "," + key;
                row += "," + csv_quote(value);
            }
            std::cout << header << ",value\n" << row << ',' << csv_quote(v.csv) << '\n';
            break;
        }
    }
    return 0;
}

int run_table(const std::string& object, unsigned n_max, Format format) {
    auto value = [&](unsigned n) {
        if (object == "bernoulli") return bernoulli(n).str();
        return to_string(fubini_number(n));
    };
    if (format == Format::json) {
        json rows = json::array();
        for (unsigned n = 0; n <= n_max; ++n) rows.push_back({{"n", n}, {"value", value(n)}});
        std::cout << json{{"table", object}, {"rows", rows}}.dump() << '\n';
        return 0;
    }
    if (format == Format::csv) std::cout << "n,value\n";
    for (unsigned n = 0; n <= n_max; ++n) std::cout << n << (format == Format::csv ? "," : " ") << value(n) << '\n';
    return 0;
}

void print_reports(const std::vector<verify::IdentityReport>& reports, const verify::Summary& s, Format format,
                   bool timing, const json& header) {
    switch (format) {
        case Format::json: {
            json out = header;
            json list = json::array();
            for (const auto& r : reports) list.push_back(verify::to_json(r, timing));
            out["summary"] = {{"passed", s.passed}, {"failed", s.failed}, {"skipped-precondition", s.skipped}};
            out["reports"] = std::move(list);
            std::cout << out.dump(2) << '\n';
            break;
        }
        case Format::csv:
            std::cout << verify::csv_header() << '\n';
            for (const auto& r : reports) std::cout << verify::to_csv_row(r, timing) << '\n';
            break;
        case Format::plain:
            for (const auto& r : reports) std::cout << verify::to_plain(r) << '\n';
            std::cout << s.passed << " passed, " << s.failed << " failed, " << s.skipped << " skipped\n";
            break;
    }
}

int run_list(Format format) {
    const auto& entries = verify::registry();
    if (format == Format::json) {
        json list = json::array();
        for (const auto& e : entries) list.push_back(verify::to_json(e));
        std::cout << list.dump(2) << '\n';
        return 0;
    }
    if (format == Format::csv) std::cout << "id,corrected,formula\n";
    for (const auto& e : entries) {
        if (format == Format::csv)
            std::cout << e.id << ',' << (e.corrected ? "true" : "false") << ',' << csv_quote(e.formula) << '\n';
        else
            std::cout << e.id << (e.corrected ? " [corrected]" : "") << "\n    " << e.formula << '\n';
    }
    return 0;
}

void add_format(CLI::App* cmd, Format& format) {
    cmd->add_option("--format", format, "Output format")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Fubini polynomial, Bernoulli and Apostol-Bernoulli computations with an identity verifier"};
    app.require_subcommand(1);

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "Compute one exact object");
    c->add_option("object", compute.object, "Object to compute")
        ->required()
        ->check(CLI::IsMember({"stirling1", "stirling2", "fubini-number", "fubini-poly", "fubini-two-var", "bernoulli",
                               "p-bernoulli", "apostol"}));
    c->add_option("--n", compute.n, "Index n");
    c->add_option("--k", compute.k, "Index k");
    c->add_option("--m", compute.m, "Index m");
    c->add_option("--p", compute.p, "Order p");
    c->add_option("--at", compute.at, "Evaluate at a rational point");
    add_format(c, compute.format);

    std::string table_object;
    unsigned table_n_max = 20;
    Format table_format = Format::plain;
    auto* t = app.add_subcommand("table", "Print a table of values for n = 0..n-max");
    t->add_option("object", table_object, "Sequence")->required()->check(CLI::IsMember({"bernoulli", "fubini-number"}));
    t->add_option("--n-max", table_n_max, "Largest index");
    add_format(t, table_format);

    std::string verify_id;
    verify::BoundOverrides overrides;
    Format verify_format = Format::plain;
    bool omit_timing = false;
    unsigned jobs = 0;
    std::optional<unsigned> sabotage;
    auto* v = app.add_subcommand("verify", "Verify one identity on its grid");
    v->add_option("identity", verify_id, "Identity id (see list-identities)")->required();
    v->add_option("--n-max", overrides.n_max);
    v->add_option("--m-max", overrides.m_max);
    v->add_option("--k-max", overrides.k_max);
    v->add_option("--p-max", overrides.p_max);
    v->add_option("--samples", overrides.samples, "Rational sample points");
    add_format(v, verify_format);

    std::string profile_text;
    auto* va = app.add_subcommand("verify-all", "Verify every registered identity");
    va->add_option("--profile", profile_text, "quick or full")->required();
    add_format(va, verify_format);

    for (auto* cmd : {v, va}) {
        cmd->add_flag("--omit-timing", omit_timing, "Drop elapsed_us so reports compare byte for byte");
        cmd->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
        cmd->add_option("--sabotage-bernoulli", sabotage)->group("");
    }

    Format list_format = Format::plain;
    auto* l = app.add_subcommand("list-identities", "List the identity registry");
    add_format(l, list_format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sabotage) testing::sabotage_bernoulli(*sabotage, Rat(1));
        if (*c) return run_compute(compute);
        if (*t) return run_table(table_object, table_n_max, table_format);
        if (*l) return run_list(list_format);
        if (*v) {
            const auto reports = verify::verify(verify_id, overrides, jobs);
            const auto summary = verify::summarize(reports);
            print_reports(reports, summary, verify_format, !omit_timing, json{{"identity", verify_id}});
            return summary.exit_code();
        }
        if (*va) {
            const auto result = verify::verify_all(verify::parse_profile(profile_text), jobs);
            if (verify_format == Format::json) {
                std::cout << verify::to_json(result, !omit_timing).dump(2) << '\n';
            } else {
                print_reports(result.reports, result.summary, verify_format, !omit_timing, json::object());
            }
            return result.summary.exit_code();
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
