#pragma once

#include "hyperforge/identities.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hyperforge {

struct RunConfig {
    std::vector<std::string> identities;  // empty: every entry
    std::vector<std::string> cases;
    int samples = 20;
    std::uint64_t seed = 1;
    std::string mode = "exact";  // exact | numeric | both
    int precision = 64;
    long budget = 100000;
    int threads = 0;  // 0: hardware concurrency
};

enum class Status { Pass, Fail, Skipped };
const char* to_string(Status s);

struct CheckRecord {
    std::string kind;       // exact, numeric, derive
    std::string extension;  // numeric-extension note
    std::vector<std::pair<std::string, std::string>> params;
    std::optional<Scalar> lhs, rhs;
    std::optional<Real> discrepancy;
    bool exact = false;
    long terms = 0;
    Status status = Status::Skipped;
    std::string reason;
    double elapsed_ms = 0;
};

struct EntryReport {
    std::string id, anchor;
    std::vector<CheckRecord> checks;
};

struct ReportSummary {
    long pass = 0, fail = 0, skipped = 0;
    std::optional<Real> worst;  // largest relative discrepancy among numeric checks
};

struct VerificationReport {
    std::string command;
    RunConfig config;
    std::vector<EntryReport> entries;
    std::vector<Adjudication> adjudications;
    ReportSummary summary;
};

// Entries matching the id/case filter, in catalog order. Unknown ids throw.
std::vector<const IdentityEntry*> select_entries(const RunConfig& cfg);

// Per-unit seed; depends only on (seed, id, unit index).
std::uint64_t unit_seed(std::uint64_t seed, const std::string& id, long index);

VerificationReport run_verify(const RunConfig& cfg);
VerificationReport run_derive(const RunConfig& cfg);

// Timing fields are omitted when `timing` is false.
nlohmann::json to_json(const VerificationReport& r, bool timing = true);
std::string scalar_text(const Scalar& s, int digits);

}  // namespace hyperforge
