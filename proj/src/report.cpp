#include "codeloop/report.hpp"

#include <json.hpp>

#include <algorithm>

namespace codeloop {

const char* to_string(CheckMode mode) noexcept {
    switch (mode) {
    case CheckMode::Exhaustive:
        return "exhaustive";
    case CheckMode::Sampled:
        return "sampled";
    case CheckMode::Closed:
        return "closed-form";
    case CheckMode::Skipped:
        return "skipped";
    }
    return "?";
}

Check& Report::check(const std::string& name) {
    auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
    if (it != checks.end()) return *it;
    Check c;
    c.name = name;
    checks.push_back(std::move(c));
    return checks.back();
}

const Check* Report::find(const std::string& name) const {
    auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
    return it == checks.end() ? nullptr : &*it;
}

bool Report::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
}

std::uint64_t Report::total_checks() const noexcept {
    std::uint64_t n = 0;
    for (const auto& c : checks) n += c.checks;
    return n;
}

std::uint64_t Report::total_failures() const noexcept {
    std::uint64_t n = 0;
    for (const auto& c : checks) n += c.failures;
    return n;
}

void write_report(std::ostream& out, const Report& report, ReportFormat format) {
    if (format == ReportFormat::JsonLines) {
        nlohmann::ordered_json suite;
        suite["suite"] = report.suite;
        suite["mode"] = to_string(report.mode);
        if (report.seed) suite["seed"] = *report.seed;
        suite["passed"] = report.passed();
        suite["checks"] = report.total_checks();
        suite["failures"] = report.total_failures();
        if (!report.notes.empty()) suite["notes"] = report.notes;
        out << suite.dump() << '\n';
        for (const auto& c : report.checks) {
            nlohmann::ordered_json line;
            line["suite"] = report.suite;
            line["check"] = c.name;
            line["checks"] = c.checks;
            line["failures"] = c.failures;
            if (!c.witness.empty()) line["witness"] = c.witness;
            out << line.dump() << '\n';
        }
        return;
    }
    const char* verdict = report.mode == CheckMode::Skipped ? "SKIP" : report.passed() ? "PASS" : "FAIL";
    out << "[" << verdict << "] " << report.suite << " (" << to_string(report.mode);
    if (report.seed) out << ", seed " << *report.seed;
    out << ")\n";
    for (const auto& note : report.notes) out << "    note: " << note << '\n';
    for (const auto& c : report.checks) {
        out << "    " << (c.passed() ? "ok  " : "FAIL") << ' ' << c.name << ": " << c.checks << " checks, " << c.failures
            << " failures";
        if (!c.witness.empty()) out << "; witness " << c.witness;
        out << '\n';
    }
}

}  // namespace codeloop
