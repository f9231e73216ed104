#pragma once

// Symplectic cubic spaces given by structure constants sigma_i, kappa_ij, alpha_ijk
// on a fixed basis b_1..b_n.

#include "codeloop/codes.hpp"
#include "codeloop/f2.hpp"
#include "codeloop/report.hpp"
#include "codeloop/rng.hpp"

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace codeloop {

/// Structure constants of a symplectic cubic space. Indices are 0-based here
/// (the text format is 1-based). Only strictly increasing index tuples are stored;
/// the symmetric extension of kappa and the alternating extension of alpha are
/// computed on read.
class CubicSpace {
public:
    using Mask = std::uint64_t;
    static constexpr std::size_t kMaxDim = 64;

    CubicSpace() = default;
    explicit CubicSpace(std::size_t n);

    [[nodiscard]] std::size_t dim() const noexcept { return n_; }

    [[nodiscard]] bool sigma(std::size_t i) const;
    /// Symmetric, zero on the diagonal.
    [[nodiscard]] bool kappa(std::size_t i, std::size_t j) const;
    /// Alternating, zero on repeated indices.
    [[nodiscard]] bool alpha(std::size_t i, std::size_t j, std::size_t k) const;

    void set_sigma(std::size_t i, bool v);
    /// Requires i < j.
    void set_kappa(std::size_t i, std::size_t j, bool v);
    /// Requires i < j < k.
    void set_alpha(std::size_t i, std::size_t j, std::size_t k, bool v);

    /// Bit k set iff alpha(i, j, k) = 1, all k (alternating extension).
    [[nodiscard]] Mask alpha_row(std::size_t i, std::size_t j) const;
    /// Bit j set iff kappa(i, j) = 1, all j.
    [[nodiscard]] Mask kappa_row(std::size_t i) const;
    [[nodiscard]] Mask sigma_mask() const noexcept { return sigma_; }

    // Evaluation on coordinate vectors, bit i <-> b_{i+1}.
    [[nodiscard]] bool sigma_of(Mask x) const noexcept;
    [[nodiscard]] bool kappa_of(Mask x, Mask y) const noexcept;
    [[nodiscard]] bool alpha_of(Mask x, Mask y, Mask z) const noexcept;

    friend bool operator==(const CubicSpace&, const CubicSpace&) = default;

private:
    void require_index(std::size_t i) const;

    std::size_t n_ = 0;
    Mask sigma_ = 0;
    std::vector<Mask> kappa_upper_;  // [i]: bits j > i
    std::vector<Mask> alpha_upper_;  // [i*n + j], i < j: bits k > j
};

/// sigma_i = w(b_i)/4, kappa_ij = w(b_i & b_j)/2, alpha_ijk = w(b_i & b_j & b_k), all mod 2.
[[nodiscard]] CubicSpace from_code(const DoublyEvenCode& code);

/// Uniformly random constants on strictly increasing tuples.
[[nodiscard]] CubicSpace random_space(std::size_t n, SplitMix64& rng);

/// sum x_i sigma_i + sum_{i<j} x_i x_j kappa_ij + sum_{i<j<k} x_i x_j x_k alpha_ijk.
[[nodiscard]] bool eval_sigma(const CubicSpace& space, const BitVec& x);
/// kappa*(x,y) + sum_{i<j} x_i x_j alpha(b_i,b_j,y) + sum_{i<j} y_i y_j alpha(b_i,b_j,x).
[[nodiscard]] bool eval_kappa(const CubicSpace& space, const BitVec& x, const BitVec& y);
/// Full trilinear expansion.
[[nodiscard]] bool eval_alpha(const CubicSpace& space, const BitVec& x, const BitVec& y, const BitVec& z);

struct AxiomMode {
    bool exhaustive = true;
    SampleSpec sample{};
    /// Exhaustive mode enumerates all 2^(3n) triples; must not exceed this.
    std::uint64_t limit = std::uint64_t{1} << 24;
};

/// Polarization identities, symmetry/alternation, trilinearity and the
/// seven-term expression of alpha through sigma.
[[nodiscard]] Report validate_axioms(const CubicSpace& space, const AxiomMode& mode);

/// Text format: "dim n", optional "sigma <n bits>", "kappa i j v", "alpha i j k v"; 1-based; '#' comments.
[[nodiscard]] CubicSpace parse_cubic(std::istream& in);
[[nodiscard]] CubicSpace parse_cubic(std::string_view text);
/// Canonical form: dim, sigma (when n > 0), nonzero kappa then alpha lines in lexicographic order.
[[nodiscard]] std::string serialize_cubic(const CubicSpace& space);

}  // namespace codeloop
