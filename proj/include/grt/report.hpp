#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace grt {

/// Outcome of checking one identity over a batch of random instances.
struct AxiomReport {
    std::string axiom;
    std::size_t samples = 0;
    std::size_t failures = 0;
    double max_residual = 0.0;

    bool pass() const noexcept { return failures == 0 && samples > 0; }

    void record(bool ok, double residual) {
        ++samples;
        if (!ok) ++failures;
        max_residual = std::max(max_residual, residual);
    }
};

inline bool all_pass(const std::vector<AxiomReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const AxiomReport& r) { return r.pass(); });
}

}  // namespace grt
