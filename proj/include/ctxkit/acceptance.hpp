#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ctxkit {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    std::string detail;    // measured values, deterministic for a fixed seed
    double seconds = 0.0;  // wall time, excluded from serialized comparisons
};

// Runs the full self-check suite. Criteria 1-10 exercise the library against
// its reference values; criterion 11 reruns 1-10 with the same seed and
// checks that the serialized results (timings excluded) are byte-identical.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

// The deterministic serialization used for the reproducibility comparison.
std::string serialize_results(const std::vector<CriterionResult>& results);

} // namespace ctxkit
