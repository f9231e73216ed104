#include "codeloop/codes.hpp"

#include "codeloop/errors.hpp"

#include <charconv>
#include <sstream>
#include <utility>
#include <vector>

namespace codeloop {

DoublyEvenReport validate_doubly_even(const BitMatrix& basis) {
    DoublyEvenReport report;
    const auto& rows = basis.row_vectors();
    // weight(a+b) = weight(a) + weight(b) - 2 weight(a&b), so rows of weight 0 mod 4
    // with pairwise even meets generate a doubly even span.
    for (std::size_t i = 0; i < rows.size() && report.valid; ++i) {
        if (rows[i].weight() % 4 != 0) {
            report.valid = false;
            report.witness = rows[i];
            report.message = "codeword " + rows[i].to_string() + " has weight " + std::to_string(rows[i].weight());
        }
        for (std::size_t j = i + 1; j < rows.size() && report.valid; ++j) {
            const auto w = meet(rows[i], rows[j]).weight();
            if (w % 2 != 0) {
                report.valid = false;
                report.witness = add(rows[i], rows[j]);
                report.witness_partner = rows[j];
                report.message = "codeword " + report.witness->to_string() + " has weight " +
                                 std::to_string(report.witness->weight());
            }
        }
    }
    if (rows.size() <= kExhaustiveCodeDim) {
        report.mode = DoublyEvenReport::Mode::BasisCriterionAndExhaustive;
        bool exhaustive_ok = true;
        std::optional<BitVec> bad;
        for (const BitVec& c : span_iter(basis)) {
            if (c.weight() % 4 != 0) {
                exhaustive_ok = false;
                bad = c;
                break;
            }
        }
        if (exhaustive_ok != report.valid) {
            throw StructuralError("basis criterion and exhaustive enumeration disagree");
        }
        if (!exhaustive_ok && !report.witness) report.witness = bad;
    }
    return report;
}

DoublyEvenCode::DoublyEvenCode(BitMatrix basis) : basis_(std::move(basis)) {
    if (rref(basis_).rank != basis_.rows()) throw ValidationError("basis rows are linearly dependent");
    auto report = validate_doubly_even(basis_);
    if (!report.valid) throw ValidationError("not doubly even: " + report.message);
}

std::map<std::size_t, std::uint64_t> DoublyEvenCode::weight_distribution() const {
    std::map<std::size_t, std::uint64_t> dist;
    for (const BitVec& c : span_iter(basis_)) ++dist[c.weight()];
    return dist;
}

std::string DoublyEvenCode::serialize() const {
    std::string out;
    for (const auto& r : basis_.row_vectors()) out += r.to_string() + "\n";
    return out;
}

namespace {

std::string_view trim_right(std::string_view s) {
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

BitMatrix read_code_matrix(std::istream& in) {
    std::optional<BitMatrix> m;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto line = trim_right(raw);
        if (line.empty() || line.front() == '#') continue;
        BitVec row;
        try {
            row = BitVec::from_string(line);
        } catch (const ParseError& e) {
            throw ParseError(lineno, e.what());
        }
        if (!m) m.emplace(row.size());
        if (row.size() != m->cols())
            throw DimensionError("line " + std::to_string(lineno) + ": row has length " + std::to_string(row.size()) +
                                 ", expected " + std::to_string(m->cols()));
        m->push_back(std::move(row));
    }
    if (!m) m.emplace(0);
    return rref(*m).basis;
}

DoublyEvenCode parse_code(std::istream& in) {
    auto basis = read_code_matrix(in);
    auto report = validate_doubly_even(basis);
    if (!report.valid) throw ValidationError("not doubly even: " + report.message);
    return DoublyEvenCode(std::move(basis));
}

DoublyEvenCode parse_code(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_code(in);
}

namespace {

BitMatrix golay24_generator() {
    // Cyclic [23,12] Golay code from g(x) = 1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11,
    // extended by an overall parity coordinate.
    constexpr std::uint32_t g = (1u << 0) | (1u << 2) | (1u << 4) | (1u << 5) | (1u << 6) | (1u << 10) | (1u << 11);
    BitMatrix m(24);
    for (std::size_t shift = 0; shift < 12; ++shift) {
        BitVec row(24);
        const std::uint32_t word = g << shift;
        for (std::size_t i = 0; i < 23; ++i)
            if ((word >> i) & 1u) row.set(i);
        if (row.weight() % 2) row.set(23);
        m.push_back(std::move(row));
    }
    return m;
}

BitMatrix zero_blocks(std::size_t k) {
    BitMatrix m(4 * k);
    for (std::size_t b = 0; b < k; ++b) {
        BitVec row(4 * k);
        for (std::size_t i = 0; i < 4; ++i) row.set(4 * b + i);
        m.push_back(std::move(row));
    }
    return m;
}

}  // namespace

DoublyEvenCode builtin_code(std::string_view name) {
    if (name == "hamming8")
        return DoublyEvenCode(BitMatrix::from_strings({"11110000", "11001100", "10101010", "11111111"}));
    if (name == "hamming8_sub3") return DoublyEvenCode(BitMatrix::from_strings({"11110000", "11001100", "10101010"}));
    if (name == "golay24") return DoublyEvenCode(golay24_generator());
    if (name.starts_with("zero_")) {
        const auto digits = name.substr(5);
        std::size_t k = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
        if (ec == std::errc{} && ptr == digits.data() + digits.size() && !digits.empty())
            return DoublyEvenCode(zero_blocks(k));
    }
    throw LookupError("unknown built-in code '" + std::string(name) + "'");
}

}  // namespace codeloop
