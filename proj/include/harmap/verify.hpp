#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace harmap {

/// How `measured` is compared with `expected`.
enum class Relation {
    near,     // |measured - expected| <= tol
    at_most,  // measured <= expected + tol
    at_least, // measured >= expected - tol
    below,    // measured < expected
    above,    // measured > expected
};

struct Check {
    std::string description;
    /// Where the expected value comes from: "published" (a constant or
    /// function stated in the literature), "oracle" (computed independently
    /// in this code base) or "identity" (exact algebra).
    std::string provenance;
    Relation relation;
    double expected;
    double measured;
    double tolerance;
    bool pass;
    /// Reproduction data on failure: seed, point, leading coefficients.
    std::string witness;
};

struct SuiteReport {
    std::string suite_id;
    std::vector<Check> checks;
    double elapsed = 0.0;

    bool passed() const;
    /// One tab-separated line per check:
    /// suite, description [provenance], expected, measured, tolerance, PASS|FAIL[, witness].
    std::string to_text() const;
};

struct SuiteOptions {
    std::uint64_t seed = 42;
    /// Where the figure suites write their SVG files; empty writes nothing.
    std::string figure_dir;
};

/// All suite ids in run order.
const std::vector<std::string_view>& suite_ids();

/// Runs one suite deterministically for the seed. Throws ArgumentError for an unknown id.
SuiteReport run_suite(std::string_view id, const SuiteOptions& opts = {});

std::string format_number(double v);

} // namespace harmap
