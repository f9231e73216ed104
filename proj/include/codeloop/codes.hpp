#pragma once

// Doubly even binary codes: parsing, validation, and the built-in reference codes.

#include "codeloop/f2.hpp"

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace codeloop {

struct DoublyEvenReport {
    enum class Mode { BasisCriterion, BasisCriterionAndExhaustive };

    bool valid = true;
    Mode mode = Mode::BasisCriterion;
    /// A codeword whose weight is not divisible by 4, or one of a pair of rows
    /// whose meet has odd weight (then `witness_partner` holds the other row).
    std::optional<BitVec> witness;
    std::optional<BitVec> witness_partner;
    std::string message;
};

/// Largest dimension for which validation also enumerates the whole span.
inline constexpr std::size_t kExhaustiveCodeDim = 12;

[[nodiscard]] DoublyEvenReport validate_doubly_even(const BitMatrix& basis);

class DoublyEvenCode {
public:
    /// Validates; throws ValidationError naming a witness codeword. Rows must be independent.
    explicit DoublyEvenCode(BitMatrix basis);

    [[nodiscard]] std::size_t length() const noexcept { return basis_.cols(); }
    [[nodiscard]] std::size_t dim() const noexcept { return basis_.rows(); }
    [[nodiscard]] const BitMatrix& basis() const noexcept { return basis_; }

    /// Codeword for coordinate vector `coords` (bit i selects basis row i).
    [[nodiscard]] BitVec codeword(std::uint64_t coords) const { return basis_.combination(coords); }

    /// Weight -> count over all 2^dim codewords.
    [[nodiscard]] std::map<std::size_t, std::uint64_t> weight_distribution() const;

    /// One generator row per line.
    [[nodiscard]] std::string serialize() const;

private:
    BitMatrix basis_;
};

/// Parses and row-reduces a generator matrix without checking the doubly even property.
[[nodiscard]] BitMatrix read_code_matrix(std::istream& in);
/// Reads the code file format; the basis is the rref of the parsed rows.
[[nodiscard]] DoublyEvenCode parse_code(std::istream& in);
[[nodiscard]] DoublyEvenCode parse_code(std::string_view text);

/// hamming8, hamming8_sub3, golay24, zero_<k>.
[[nodiscard]] DoublyEvenCode builtin_code(std::string_view name);

}  // namespace codeloop
