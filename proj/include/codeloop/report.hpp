#pragma once

// Verification reports shared by every checking operation.

#include <cstdint>
#include <deque>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace codeloop {

/// Counts for one identity or property; keeps the first failing witness.
struct Check {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::string witness;

    [[nodiscard]] bool passed() const noexcept { return failures == 0; }

    /// Records one evaluation; `describe` is called only for the first failure.
    template <class Describe>
    bool record(bool ok, Describe&& describe) {
        ++checks;
        if (!ok) {
            if (failures == 0) witness = std::forward<Describe>(describe)();
            ++failures;
        }
        return ok;
    }
    bool record(bool ok) {
        return record(ok, [] { return std::string{}; });
    }
};

/// Skipped suites carry a note with the reason and no checks.
enum class CheckMode { Exhaustive, Sampled, Closed, Skipped };

[[nodiscard]] const char* to_string(CheckMode mode) noexcept;

struct Report {
    std::string suite;
    CheckMode mode = CheckMode::Exhaustive;
    std::optional<std::uint64_t> seed;
    std::deque<Check> checks;  // references returned by check() stay valid
    std::vector<std::string> notes;

    Check& check(const std::string& name);
    [[nodiscard]] const Check* find(const std::string& name) const;
    [[nodiscard]] bool passed() const noexcept;
    [[nodiscard]] std::uint64_t total_checks() const noexcept;
    [[nodiscard]] std::uint64_t total_failures() const noexcept;
};

/// Sampling parameters for verification suites.
struct SampleSpec {
    std::uint64_t count = 0;
    std::uint64_t seed = 0;
};

enum class ReportFormat { Text, JsonLines };

/// One line per check (jsonl) or an indented block per suite (text). Deterministic.
void write_report(std::ostream& out, const Report& report, ReportFormat format);

}  // namespace codeloop
