#pragma once

// Bit-packed linear algebra over F2.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

namespace codeloop {

/// Fixed-length vector over F2. Coordinate 0 is the least significant bit of
/// the first word; bits past `size()` in the last word are always zero.
class BitVec {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitVec() = default;
    explicit BitVec(std::size_t length) : length_(length), words_((length + kWordBits - 1) / kWordBits, 0) {}

    /// Parses a string over {0,1}; character i becomes coordinate i.
    static BitVec from_string(std::string_view bits);
    /// Low `length` bits of `mask`; requires length <= 64.
    static BitVec from_mask(std::size_t length, Word mask);
    static BitVec unit(std::size_t length, std::size_t index);

    [[nodiscard]] std::size_t size() const noexcept { return length_; }
    [[nodiscard]] bool empty() const noexcept { return length_ == 0; }

    [[nodiscard]] bool get(std::size_t i) const;
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i);

    [[nodiscard]] std::size_t weight() const noexcept;
    [[nodiscard]] bool is_zero() const noexcept;
    /// Index of the lowest set coordinate, or size() when zero.
    [[nodiscard]] std::size_t lowest_set() const noexcept;

    BitVec& operator^=(const BitVec& other);
    BitVec& operator&=(const BitVec& other);

    /// Coordinates packed into one word; requires size() <= 64.
    [[nodiscard]] Word to_mask() const;
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] const std::vector<Word>& words() const noexcept { return words_; }

    friend bool operator==(const BitVec&, const BitVec&) = default;
    friend auto operator<=>(const BitVec& a, const BitVec& b) = default;

private:
    void require_same_length(const BitVec& other, const char* op) const;

    std::size_t length_ = 0;
    std::vector<Word> words_;
};

[[nodiscard]] std::size_t weight(const BitVec& v) noexcept;
/// Coordinatewise AND (set intersection).
[[nodiscard]] BitVec meet(const BitVec& v, const BitVec& w);
/// Coordinatewise XOR.
[[nodiscard]] BitVec add(const BitVec& v, const BitVec& w);

/// Rectangular matrix over F2 stored as rows.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t cols) : cols_(cols) {}
    BitMatrix(std::size_t cols, std::vector<BitVec> rows);

    static BitMatrix from_strings(const std::vector<std::string>& rows);

    void push_back(BitVec row);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_.size(); }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] const BitVec& row(std::size_t i) const { return rows_.at(i); }
    [[nodiscard]] const std::vector<BitVec>& row_vectors() const noexcept { return rows_; }

    /// Sum of the rows selected by the low bits of `subset` (row i <-> bit i).
    [[nodiscard]] BitVec combination(std::uint64_t subset) const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

struct RrefResult {
    BitMatrix basis;
    std::size_t rank = 0;
};

/// Reduced row-echelon form with pivots chosen left to right. Zero rows are dropped.
[[nodiscard]] RrefResult rref(const BitMatrix& m);

/// All 2^rank combinations of the rows, in ascending subset-indicator order.
class SpanRange {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = BitVec;
        using difference_type = std::ptrdiff_t;
        using pointer = const BitVec*;
        using reference = const BitVec&;

        iterator() = default;
        iterator(const BitMatrix* basis, std::uint64_t index);

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        iterator operator++(int) {
            auto copy = *this;
            ++*this;
            return copy;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

    private:
        const BitMatrix* basis_ = nullptr;
        std::uint64_t index_ = 0;
        BitVec current_;
    };

    explicit SpanRange(const BitMatrix& basis);

    [[nodiscard]] iterator begin() const { return {&basis_, 0}; }
    [[nodiscard]] iterator end() const { return {&basis_, count_}; }
    [[nodiscard]] std::uint64_t size() const noexcept { return count_; }

private:
    BitMatrix basis_;
    std::uint64_t count_;
};

/// Requires basis.rows() < 64.
[[nodiscard]] SpanRange span_iter(const BitMatrix& basis);

/// Parity of popcount.
[[nodiscard]] constexpr bool parity(std::uint64_t w) noexcept { return (std::popcount(w) & 1) != 0; }

}  // namespace codeloop
