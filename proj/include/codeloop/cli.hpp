#pragma once

// Command-line orchestration, kept in the library so that tests can drive it in-process.

#include "codeloop/cubic.hpp"
#include "codeloop/report.hpp"
#include "codeloop/triality.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace codeloop {

struct RunConfig {
    std::uint64_t seed = 0;
    std::uint64_t samples = 1000;
    /// Largest enumeration (tuples of elements) an exhaustive suite may perform.
    std::uint64_t exhaustive_limit = std::uint64_t{1} << 24;
    ReportFormat format = ReportFormat::Text;
};

/// Elementwise suites stay below 2^14 elements; tuple suites use the full limit.
[[nodiscard]] VerifyMode verify_mode(const RunConfig& config);

/// Every verification suite at the scale the config permits. `product` replaces the
/// group multiplication in the presentation suite only.
[[nodiscard]] std::vector<Report> verify_all(const CubicSpace& space, const RunConfig& config,
                                             const ProductFn& product = {});

/// Sigma, kappa and alpha read off the loop compared with `space`, constant by constant.
[[nodiscard]] Report recovery_report(const CubicSpace& space);

/// `args` excludes the program name. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace codeloop
