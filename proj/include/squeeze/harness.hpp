#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace squeeze {

struct FailureRecord {
    std::string inputs;  // replayable description of the failing case
    double expected = 0.0;
    double actual = 0.0;
    double tolerance = 0.0;
};

/// Deterministic result of one verification suite. Reproducible from
/// (suite, seed, config); wall_time is informational and excluded from the
/// canonical form used for reproducibility comparisons.
struct VerificationReport {
    std::string suite;
    long cases_run = 0;
    std::vector<FailureRecord> failures;
    double max_violation = 0.0;
    double tolerance = 0.0;
    std::uint64_t seed = 0;
    double wall_time = 0.0;  // seconds

    bool vacuous() const { return cases_run == 0; }
    /// A suite with zero executed assertions never reports success.
    bool passed() const { return !vacuous() && failures.empty(); }
};

struct HarnessConfig {
    long samples = 1000;
    std::uint64_t seed = 42;
    std::optional<double> tolerance;  // overrides the per-suite default
};

/// The fixed suite list, in canonical order.
const std::vector<std::string>& suite_names();

/// Runs one suite; throws ValidationError for an unknown name.
VerificationReport run_suite(const std::string& name, const HarnessConfig& config = {});

/// Runs every suite in canonical order.
std::vector<VerificationReport> run_all(const HarnessConfig& config = {});

/// JSON-lines serialization (17 significant digits). With
/// include_wall_time = false yields the canonical reproducible form.
std::string report_to_json(const VerificationReport& report, bool include_wall_time = true);

} // namespace squeeze
