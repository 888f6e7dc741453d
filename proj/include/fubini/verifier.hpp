#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fubini/rat.hpp"

namespace fubini::verify {

/// Unknown identity id, unknown profile, malformed flag values.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parameter binding of one case, ordered by name. Integers are Rats with
/// denominator 1.
using Params = std::map<std::string, Rat>;

enum class Status { pass, fail, skipped_precondition };

std::string_view to_string(Status s);

struct IdentityReport {
    std::string identity;
    Params params;
    Status status = Status::fail;
    std::string lhs;
    std::string rhs;
    std::int64_t elapsed_us = 0;
};

/// Canonical text of both sides; a case passes iff the strings match.
struct Sides {
    std::string lhs;
    std::string rhs;
};

/// Grid extents. Each identity reads the fields that apply to it.
struct Bounds {
    unsigned n_max = 0;
    unsigned m_max = 0;
    unsigned k_max = 0;
    unsigned p_max = 0;
    unsigned samples = 25;
};

struct BoundOverrides {
    std::optional<unsigned> n_max;
    std::optional<unsigned> m_max;
    std::optional<unsigned> k_max;
    std::optional<unsigned> p_max;
    std::optional<unsigned> samples;

    Bounds apply(Bounds b) const;
};

struct RegistryEntry {
    std::string id;
    /// The identity in plain notation; doubles as the anchor into
    /// docs/formulas.md.
    std::string formula;
    std::string description;
    /// True when the implemented statement corrects a misprinted one.
    bool corrected = false;
    /// The misprinted statement, for corrected entries.
    std::string printed_form;
    Bounds quick;
    Bounds full;
    std::function<std::vector<Params>(const Bounds&)> grid;
    /// Throws DomainError when the case is outside the identity's domain.
    std::function<Sides(const Params&)> evaluate;
    /// Corrected entries: evaluates the printed statement at one point;
    /// lhs is "refuted" or "holds", rhs is the expected "refuted".
    Params witness_params;
    std::function<Sides()> printed_witness;
};

const std::vector<RegistryEntry>& registry();

/// Throws UsageError for an unknown id.
const RegistryEntry& find_entry(std::string_view id);

/// The fixed 25-point rational grid; with samples > 25, seeded
/// pseudo-random points p/q are appended.
std::vector<Rat> sample_grid(unsigned samples);

enum class Profile { quick, full };

/// Throws UsageError for anything but "quick" / "full".
Profile parse_profile(std::string_view text);
std::string_view to_string(Profile p);

/// Runs every grid case (and the printed witness, when present) of one
/// identity. Reports come back sorted by (identity, params). jobs = 0 picks
/// the hardware concurrency.
std::vector<IdentityReport> verify(const RegistryEntry& entry, const Bounds& bounds, unsigned jobs = 0);
std::vector<IdentityReport> verify(std::string_view id, const BoundOverrides& overrides, unsigned jobs = 0);

struct Summary {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;

    /// 0 when nothing failed, 1 otherwise.
    int exit_code() const { return failed == 0 ? 0 : 1; }
};

Summary summarize(const std::vector<IdentityReport>& reports);

struct VerifyAllResult {
    Profile profile = Profile::quick;
    std::vector<IdentityReport> reports;
    Summary summary;
};

VerifyAllResult verify_all(Profile profile, unsigned jobs = 0);

// Report encodings.
std::string params_to_string(const Params& params);
nlohmann::json to_json(const IdentityReport& report, bool include_timing = true);
nlohmann::json to_json(const VerifyAllResult& result, bool include_timing = true);
nlohmann::json to_json(const RegistryEntry& entry);
std::string csv_header();
std::string to_csv_row(const IdentityReport& report, bool include_timing = true);
std::string to_plain(const IdentityReport& report);

}  // namespace fubini::verify
