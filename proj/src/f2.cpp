#include "codeloop/f2.hpp"

#include "codeloop/errors.hpp"

#include <algorithm>
#include <utility>

namespace codeloop {

BitVec BitVec::from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        switch (bits[i]) {
        case '0':
            break;
        case '1':
            v.set(i);
            break;
        default:
            throw ParseError(0, "bit string contains '" + std::string(1, bits[i]) + "'");
        }
    }
    return v;
}

BitVec BitVec::from_mask(std::size_t length, Word mask) {
    if (length > kWordBits) throw DimensionError("from_mask: length exceeds 64");
    BitVec v(length);
    if (length > 0) {
        if (length < kWordBits) mask &= (Word{1} << length) - 1;
        v.words_[0] = mask;
    }
    return v;
}

BitVec BitVec::unit(std::size_t length, std::size_t index) {
    BitVec v(length);
    v.set(index);
    return v;
}

bool BitVec::get(std::size_t i) const {
    if (i >= length_) throw DimensionError("coordinate " + std::to_string(i) + " out of range");
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BitVec::set(std::size_t i, bool value) {
    if (i >= length_) throw DimensionError("coordinate " + std::to_string(i) + " out of range");
    const Word bit = Word{1} << (i % kWordBits);
    if (value)
        words_[i / kWordBits] |= bit;
    else
        words_[i / kWordBits] &= ~bit;
}

void BitVec::flip(std::size_t i) {
    if (i >= length_) throw DimensionError("coordinate " + std::to_string(i) + " out of range");
    words_[i / kWordBits] ^= Word{1} << (i % kWordBits);
}

std::size_t BitVec::weight() const noexcept {
    std::size_t w = 0;
    for (Word word : words_) w += static_cast<std::size_t>(std::popcount(word));
    return w;
}

bool BitVec::is_zero() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t BitVec::lowest_set() const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
        if (words_[k]) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return length_;
}

void BitVec::require_same_length(const BitVec& other, const char* op) const {
    if (length_ != other.length_)
        throw DimensionError(std::string(op) + ": length " + std::to_string(length_) + " vs " +
                             std::to_string(other.length_));
}

BitVec& BitVec::operator^=(const BitVec& other) {
    require_same_length(other, "add");
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
    return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
    require_same_length(other, "meet");
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
}

BitVec::Word BitVec::to_mask() const {
    if (length_ > kWordBits) throw DimensionError("to_mask: length exceeds 64");
    return words_.empty() ? 0 : words_[0];
}

std::string BitVec::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::size_t weight(const BitVec& v) noexcept { return v.weight(); }

BitVec meet(const BitVec& v, const BitVec& w) {
    BitVec r = v;
    r &= w;
    return r;
}

BitVec add(const BitVec& v, const BitVec& w) {
    BitVec r = v;
    r ^= w;
    return r;
}

BitMatrix::BitMatrix(std::size_t cols, std::vector<BitVec> rows) : cols_(cols) {
    rows_.reserve(rows.size());
    for (auto& r : rows) push_back(std::move(r));
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
    if (rows.empty()) return BitMatrix(0);
    BitMatrix m(rows.front().size());
    for (const auto& r : rows) m.push_back(BitVec::from_string(r));
    return m;
}

void BitMatrix::push_back(BitVec row) {
    if (row.size() != cols_)
        throw DimensionError("row of length " + std::to_string(row.size()) + " in matrix with " +
                             std::to_string(cols_) + " columns");
    rows_.push_back(std::move(row));
}

BitVec BitMatrix::combination(std::uint64_t subset) const {
    BitVec acc(cols_);
    for (std::size_t i = 0; i < rows_.size() && i < 64; ++i)
        if ((subset >> i) & 1u) acc ^= rows_[i];
    return acc;
}

RrefResult rref(const BitMatrix& m) {
    std::vector<BitVec> rows = m.row_vectors();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < rows.size(); ++col) {
        auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                                  [col](const BitVec& r) { return r.get(col); });
        if (pivot == rows.end()) continue;
        std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), pivot);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r].get(col)) rows[r] ^= rows[rank];
        ++rank;
    }
    rows.resize(rank);
    return {BitMatrix(m.cols(), std::move(rows)), rank};
}

SpanRange::iterator::iterator(const BitMatrix* basis, std::uint64_t index)
    : basis_(basis), index_(index), current_(basis->combination(index)) {}

SpanRange::iterator& SpanRange::iterator::operator++() {
    // Subset index i -> i+1 flips bits 0..countr_one(i); update incrementally.
    const auto flips = static_cast<std::size_t>(std::countr_one(index_)) + 1;
    for (std::size_t k = 0; k < flips && k < basis_->rows(); ++k) current_ ^= basis_->row(k);
    ++index_;
    return *this;
}

SpanRange::SpanRange(const BitMatrix& basis) : basis_(basis), count_(std::uint64_t{1} << basis.rows()) {}

SpanRange span_iter(const BitMatrix& basis) {
    if (basis.rows() >= 64) throw CapacityError("span_iter: rank too large to enumerate");
    return SpanRange(basis);
}

}  // namespace codeloop
