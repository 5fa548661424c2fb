#pragma once

#include "quadnorm/fixtures.hpp"
#include "quadnorm/json_io.hpp"

namespace quadnorm {

struct VerifyConfig {
    uint64_t seed = 0;
    int cases_per_law = 200;
    std::vector<RingPtr> ring_family;     // empty = FixtureGen::default_ring_family()
    std::vector<std::string> laws;        // empty or {"all"} = every law
};

struct LawResult {
    std::string law;
    int cases = 0;
    int passes = 0;
    int fails = 0;
    std::optional<json> first_counterexample;
    json detail;    // law-specific statistics (deterministic)
    double seconds = 0.0;
};

struct VerifyReport {
    uint64_t seed = 0;
    int cases_per_law = 0;
    std::vector<LawResult> laws;

    bool ok() const {
        for (const auto& r : laws)
            if (r.fails != 0) return false;
        return true;
    }
};

/// Names of every law, in report order.
std::vector<std::string> law_names();

/// Run the selected laws; cases are evaluated law-by-law in parallel, each
/// law on its own deterministic stream derived from the seed and law name.
VerifyReport run_verify(const VerifyConfig& config);

/// Canonical JSON for a report. Timings are only included on request so that
/// the document is bit-identical across runs with the same seed.
json report_to_json(const VerifyReport& report, bool include_timings);

} // namespace quadnorm
