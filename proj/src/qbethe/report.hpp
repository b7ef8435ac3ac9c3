#pragma once

#include "qbethe/rmatrix.hpp"
#include "qbethe/sample.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qbethe {

// ---------------------------------------------------------------------------
// Verification suites.  A suite is a fixed list of named checks; each
// check verifies one identity at seeded random rational points and
// produces one report.  The full run is deterministic in the
// configuration: report contents (everything except durations) depend
// only on (seed, filters, sample counts).
// ---------------------------------------------------------------------------

struct SuiteConfig {
    std::uint64_t seed = 0;
    // Sample count for ordinary checks.  Checks whose statement pins
    // its own count (index-duality quadruples, random minor states,
    // size-vector batches, the explicit rank-three example) keep that
    // count regardless.
    int samples = 5;
    int jobs = 1;
    // Size bounds for the nested-partition checks: largest per-level
    // parameter-list size for the universal vectors, and largest index
    // part for the tower-vector relations.
    int levelCap = 2;
    int partCap = 2;
    // Optional instance filters.  A set filter restricts the suite to
    // checks whose instance matches; non-matching checks are reported
    // as SKIPPED.
    std::optional<int> rankFilter;
    std::optional<std::vector<int>> sizesFilter;
    std::optional<int> lengthFilter;
    std::optional<RFlavor> flavorFilter;
};

struct SampleRecord {
    int index = 0;
    Assignment point;
    bool equal = false;
};

struct VerificationReport {
    std::string identity; // unique check name, e.g. "rmatrix-ybe-trigA-N2"
    std::string anchor;   // the identity in plain ASCII notation
    std::string flavor;   // "trigA" | "trigB" | "rational" | "mixed"
    std::optional<int> rank;   // instance N, when meaningful
    std::vector<int> sizes;    // instance family sizes, when meaningful
    std::optional<int> length; // instance quantum length n, when meaningful
    std::uint64_t seed = 0;
    int samples = 0;
    std::string status; // "PASS" | "FAIL" | "SKIPPED"
    std::vector<SampleRecord> records;
    std::optional<Assignment> counterexample;
    // Diagnostic for a check aborted by a structural error (for
    // example a singularity that persists across every replacement
    // sample); such a check is reported FAIL with no counterexample.
    std::optional<std::string> errorText;
    std::int64_t durationMs = 0;
};

// Suite names in canonical order, excluding the aggregate "all".
const std::vector<std::string>& suiteNames();

// True for every suite name accepted by runSuite, including "all".
bool isSuiteName(const std::string& name);

// Runs every check of the named suite ("all" concatenates every suite)
// and returns the reports sorted by check identity.  Checks run
// concurrently when config.jobs > 1; the report order and contents are
// unaffected by the job count.  Throws InvalidArgError on an unknown
// suite name.
std::vector<VerificationReport> runSuite(const std::string& suite,
                                         const SuiteConfig& config);

// Same, restricted to checks whose identity satisfies `keep`.
std::vector<VerificationReport> runSuiteMatching(
    const std::string& suite, const SuiteConfig& config,
    const std::function<bool(const std::string& identity)>& keep);

// True when no report failed (SKIPPED does not count as failure).
bool allPassed(const std::vector<VerificationReport>& reports);

// Serializes reports as a stable JSON document:
//   {"report_version": "1", "reports": [...]}
// with every rational rendered as "num/den".
std::string reportsToJson(const std::vector<VerificationReport>& reports);

// Human-readable one-line-per-check rendering; `color` adds ANSI
// status colors.
std::string reportsToText(const std::vector<VerificationReport>& reports,
                          bool color);

} // namespace qbethe
