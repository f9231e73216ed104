#include "codeloop/cli.hpp"

#include "codeloop/codes.hpp"
#include "codeloop/errors.hpp"
#include "codeloop/moufang.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace codeloop {

namespace {

bool fits(unsigned log2_count, std::uint64_t limit) { return log2_count < 64 && (std::uint64_t{1} << log2_count) <= limit; }

Report skipped(const std::string& suite, const std::string& why) {
    Report r;
    r.suite = suite;
    r.mode = CheckMode::Skipped;
    r.notes.push_back(why);
    return r;
}

}  // namespace

VerifyMode verify_mode(const RunConfig& config) {
    VerifyMode mode;
    mode.triple_limit = config.exhaustive_limit;
    mode.element_limit = std::min(config.exhaustive_limit, std::uint64_t{1} << 14);
    mode.sample = {config.samples, config.seed};
    return mode;
}

Report recovery_report(const CubicSpace& space) {
    Report report;
    report.suite = "recovery";
    report.mode = CheckMode::Exhaustive;
    const CodeLoop L(space);
    CubicSpace got;
    try {
        got = recovered_constants(L);
    } catch (const StructuralError& e) {
        report.check("recovered-constants").record(false, [&] { return std::string(e.what()); });
        return report;
    }
    const std::size_t n = space.dim();
    auto& s = report.check("sigma");
    auto& k = report.check("kappa");
    auto& a = report.check("alpha");
    for (std::size_t i = 0; i < n; ++i) {
        s.record(got.sigma(i) == space.sigma(i), [&] { return "sigma_" + std::to_string(i + 1); });
        for (std::size_t j = i + 1; j < n; ++j) {
            k.record(got.kappa(i, j) == space.kappa(i, j),
                     [&] { return "kappa_" + std::to_string(i + 1) + "," + std::to_string(j + 1); });
            for (std::size_t l = j + 1; l < n; ++l)
                a.record(got.alpha(i, j, l) == space.alpha(i, j, l), [&] {
                    return "alpha_" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(l + 1);
                });
        }
    }
    return report;
}

std::vector<Report> verify_all(const CubicSpace& space, const RunConfig& config, const ProductFn& product) {
    const VerifyMode mode = verify_mode(config);
    std::vector<Report> out;
    const std::size_t n = space.dim();

    AxiomMode axioms;
    axioms.limit = config.exhaustive_limit;
    axioms.exhaustive = fits(static_cast<unsigned>(3 * n), config.exhaustive_limit);
    axioms.sample = mode.sample;
    out.push_back(validate_axioms(space, axioms));
    if (!axioms.exhaustive) out.back().notes.push_back("2^(3n) triples exceed the exhaustive limit; sampled instead");

    const CodeLoop L(space);
    const TrialityGroup& G = L.group();
    out.push_back(verify_presentation(G, mode, product));
    out.push_back(verify_triality(G, mode));
    out.push_back(parker_check(G, mode));
    out.push_back(index_check(G, mode));
    out.push_back(centralizer_check(G, mode));
    out.push_back(is_moufang(L, mode));
    out.push_back(latin_check(L, mode));
    out.push_back(small_frattini_check(L, mode));
    out.push_back(recovery_report(space));
    out.push_back(structure_check(L, mode));
    out.push_back(verify_mult_identities(L, mode));
    out.push_back(diassociativity_check(L, mode));
    if (n <= 3) {
        out.push_back(mlt_bound_check(L));
        out.push_back(dual_construction_check(L));
    } else {
        out.push_back(skipped("mlt-bound", "needs n <= 3"));
        out.push_back(skipped("dual-construction", "needs n <= 3"));
    }
    return out;
}

namespace {

struct Options {
    std::string builtin;
    std::string code;
    std::string cubic;
    std::uint64_t seed = 0;
    std::uint64_t samples = 1000;
    std::uint64_t exhaustive_limit = std::uint64_t{1} << 24;
    std::string format = "text";
    std::string out;
    bool force = false;

    [[nodiscard]] RunConfig config() const {
        return {seed, samples, exhaustive_limit, format == "jsonl" ? ReportFormat::JsonLines : ReportFormat::Text};
    }
};

void add_common(CLI::App* sub, Options& o) {
    auto* b = sub->add_option("--builtin", o.builtin, "built-in code: hamming8, hamming8_sub3, golay24, zero_<k>");
    auto* c = sub->add_option("--code", o.code, "generator matrix file");
    auto* q = sub->add_option("--cubic", o.cubic, "cubic space file");
    b->excludes(c)->excludes(q);
    c->excludes(q);
    sub->add_option("--seed", o.seed, "seed for sampled suites");
    sub->add_option("--samples", o.samples, "samples per sampled suite");
    sub->add_option("--exhaustive-limit", o.exhaustive_limit, "largest exhaustive enumeration");
    sub->add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "jsonl"}));
    sub->add_option("--out", o.out, "output path");
    sub->add_flag("--force", o.force, "allow tables above the size limit");
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return in;
}

CubicSpace load_space(const Options& o) {
    if (!o.cubic.empty()) {
        auto in = open_input(o.cubic);
        return parse_cubic(in);
    }
    if (!o.code.empty()) {
        auto in = open_input(o.code);
        return from_code(parse_code(in));
    }
    if (!o.builtin.empty()) return from_code(builtin_code(o.builtin));
    throw std::invalid_argument("one of --builtin, --code, --cubic is required");
}

// Writes to --out when given, else to `out`.
template <class F>
void emit(const Options& o, std::ostream& out, F&& body) {
    if (o.out.empty()) {
        body(out);
        return;
    }
    std::ofstream file(o.out);
    if (!file) throw std::runtime_error("cannot write '" + o.out + "'");
    body(file);
    file.close();
    if (!file) throw std::runtime_error("failed writing '" + o.out + "'");
}

int cmd_check_code(const Options& o, std::ostream& out) {
    BitMatrix basis;
    if (!o.code.empty()) {
        auto in = open_input(o.code);
        basis = read_code_matrix(in);
    } else if (!o.builtin.empty()) {
        basis = builtin_code(o.builtin).basis();
    } else {
        throw std::invalid_argument("check-code needs --builtin or --code");
    }
    const DoublyEvenReport verdict = validate_doubly_even(basis);
    std::optional<std::map<std::size_t, std::uint64_t>> dist;
    if (fits(static_cast<unsigned>(basis.rows()), o.exhaustive_limit)) {
        dist.emplace();
        for (const auto& w : span_iter(basis)) ++(*dist)[w.weight()];
    }
    emit(o, out, [&](std::ostream& s) {
        if (o.format == "jsonl") {
            nlohmann::ordered_json j;
            j["length"] = basis.cols();
            j["dimension"] = basis.rows();
            j["doubly_even"] = verdict.valid;
            if (!verdict.valid) j["witness"] = verdict.message;
            if (dist) {
                nlohmann::ordered_json d = nlohmann::ordered_json::object();
                for (const auto& [w, c] : *dist) d[std::to_string(w)] = c;
                j["weight_distribution"] = d;
            }
            s << j.dump() << '\n';
            return;
        }
        s << "length " << basis.cols() << "\ndimension " << basis.rows() << "\ndoubly-even "
          << (verdict.valid ? "yes" : "no") << '\n';
        if (!verdict.valid) s << "witness " << verdict.message << '\n';
        if (dist) {
            s << "weight-distribution";
            for (const auto& [w, c] : *dist) s << ' ' << w << ':' << c;
            s << '\n';
        } else {
            s << "weight-distribution skipped (2^" << basis.rows() << " codewords exceed the exhaustive limit)\n";
        }
    });
    return verdict.valid ? 0 : 2;
}

int cmd_constants(const Options& o, std::ostream& out) {
    const CubicSpace space = load_space(o);
    emit(o, out, [&](std::ostream& s) { s << serialize_cubic(space); });
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const CubicSpace space = load_space(o);
    const RunConfig config = o.config();
    const auto reports = verify_all(space, config);
    std::vector<std::string> failed;
    for (const auto& r : reports)
        if (!r.passed()) failed.push_back(r.suite);
    emit(o, out, [&](std::ostream& s) {
        for (const auto& r : reports) write_report(s, r, config.format);
        if (config.format == ReportFormat::JsonLines) {
            nlohmann::ordered_json j;
            j["summary"] = failed.empty() ? "pass" : "fail";
            j["suites"] = reports.size();
            j["failed"] = failed;
            s << j.dump() << '\n';
        } else if (failed.empty()) {
            s << "verify: all " << reports.size() << " suites passed\n";
        } else {
            s << "verify: " << failed.size() << " of " << reports.size() << " suites failed:";
            for (const auto& f : failed) s << ' ' << f;
            s << '\n';
        }
    });
    return failed.empty() ? 0 : 1;
}

constexpr int kRefused = 3;

int cmd_export_table(const Options& o, std::ostream& out, std::ostream& err) {
    const CodeLoop L(load_space(o));
    const std::uint64_t limit = o.force ? kForcedTableLimit : kTableLimit;
    if (!fits(L.log2_order(), limit)) {
        err << "error: loop order 2^" << L.log2_order() << " exceeds the table limit of " << limit
            << (o.force ? "" : "; pass --force to override") << '\n';
        return kRefused;
    }
    const CayleyTable table = cayley_table(L, limit);
    if (o.out.empty()) {
        write_cayley(out, table);
        return 0;
    }
    emit(o, out, [&](std::ostream& s) { write_cayley(s, table); });
    out << "order " << table.order << "\nwritten " << o.out << '\n';
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Code loops from groups with triality", "codeloop"};
    app.require_subcommand(1);
    Options o;
    auto* check = app.add_subcommand("check-code", "validate a doubly even code");
    auto* constants = app.add_subcommand("constants", "print the cubic space of a code");
    auto* verify = app.add_subcommand("verify", "run every verification suite");
    auto* exp = app.add_subcommand("export-table", "write the Cayley table of the loop");
    for (auto* sub : {check, constants, verify, exp}) add_common(sub, o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (check->parsed()) return cmd_check_code(o, out);
        if (constants->parsed()) return cmd_constants(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        return cmd_export_table(o, out, err);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace codeloop
