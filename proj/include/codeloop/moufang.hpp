#pragma once

// The code loop on sigma^G, realized on the right cosets H3 g^x u^t of
// H3 = C_G(sigma). The product a o b is the coset of r_a * [r_b, sigma]^rho,
// which is the right multiplication R_b acting on the coset of a.

#include "codeloop/report.hpp"
#include "codeloop/triality.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace codeloop {

/// Coset data of the representative g^x u^t.
struct LoopElement {
    std::uint64_t x = 0;  // bit i is the exponent of g_(i+1)
    bool t = false;
    std::uint32_t loop = 0;

    friend bool operator==(const LoopElement&, const LoopElement&) = default;
    friend auto operator<=>(const LoopElement&, const LoopElement&) = default;
};

/// Largest loop for which a full Cayley table is built without an override.
inline constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 12;
/// Hard ceiling with the override (the Golay loop, 64M cells).
inline constexpr std::uint64_t kForcedTableLimit = std::uint64_t{1} << 13;

class CodeLoop {
public:
    explicit CodeLoop(CubicSpace space);
    explicit CodeLoop(TrialityGroup group);

    [[nodiscard]] const TrialityGroup& group() const noexcept { return group_; }
    [[nodiscard]] std::size_t dim() const noexcept { return n_; }
    /// log2 of the order, n + 1.
    [[nodiscard]] unsigned log2_order() const noexcept { return static_cast<unsigned>(n_ + 1); }
    /// 2^(n+1); throws CapacityError when it does not fit 64 bits.
    [[nodiscard]] std::uint64_t order() const;

    [[nodiscard]] LoopElement one() const noexcept { return {0, false, id_}; }
    /// s = sigma^u
    [[nodiscard]] LoopElement s_elem() const noexcept { return {0, true, id_}; }
    /// x_i = sigma^(g_i), 0-based i.
    [[nodiscard]] LoopElement basis(std::size_t i) const;
    [[nodiscard]] LoopElement element(std::uint64_t x, bool t) const;

    /// Position in the ascending order (xbits read big-endian with x_1 first, then t).
    /// The unit has position 0.
    [[nodiscard]] std::uint64_t ordinal(const LoopElement& a) const;
    [[nodiscard]] LoopElement from_ordinal(std::uint64_t k) const;
    [[nodiscard]] LoopElement random(SplitMix64& rng) const;

    /// The coset representative g^x u^t in G.
    [[nodiscard]] GroupElement lift(const LoopElement& a) const;
    [[nodiscard]] LoopElement from_coset(const GroupElement& g) const;
    /// [r_a, sigma]^rho, acting on cosets as R_a.
    [[nodiscard]] GroupElement right_multiplier(const LoopElement& a) const;

    [[nodiscard]] LoopElement mul(const LoopElement& a, const LoopElement& b) const;
    /// Same product with the literal left-multiplication coset reduction.
    [[nodiscard]] LoopElement mul_reference(const LoopElement& a, const LoopElement& b) const;
    /// The unique b with a o b = c.
    [[nodiscard]] LoopElement left_div(const LoopElement& a, const LoopElement& c) const;
    /// The unique a with a o b = c.
    [[nodiscard]] LoopElement right_div(const LoopElement& c, const LoopElement& b) const;
    [[nodiscard]] LoopElement inv(const LoopElement& a) const;
    [[nodiscard]] LoopElement power(const LoopElement& a, std::int64_t k) const;
    /// The unique d with (b o a) o d = a o b.
    [[nodiscard]] LoopElement commutator(const LoopElement& a, const LoopElement& b) const;
    /// (ab.c)^-1 (a.bc)
    [[nodiscard]] LoopElement associator(const LoopElement& a, const LoopElement& b, const LoopElement& c) const;

    [[nodiscard]] std::string xbits_string(const LoopElement& a) const;
    [[nodiscard]] std::string to_string(const LoopElement& a) const;

private:
    void require_same(const LoopElement& a) const;
    [[nodiscard]] LoopElement make(std::uint64_t x, bool t) const noexcept { return {x, t, id_}; }

    TrialityGroup group_;
    std::size_t n_;
    std::uint32_t id_;
    std::uint64_t full_;
    std::vector<GroupElement> multipliers_;  // cached right multipliers, indexed by x << 1 | t
};

/// Row-major table over ordinals: cell(i, j) = ordinal(e_i o e_j).
struct CayleyTable {
    std::uint64_t order = 0;
    std::vector<std::string> xbits;  // legend, per ordinal
    std::vector<bool> t;
    std::vector<std::uint32_t> cells;

    [[nodiscard]] std::uint32_t at(std::uint64_t i, std::uint64_t j) const { return cells[i * order + j]; }
    friend bool operator==(const CayleyTable&, const CayleyTable&) = default;
};

/// Throws CapacityError when the order exceeds `limit`.
[[nodiscard]] CayleyTable cayley_table(const CodeLoop& L, std::uint64_t limit = kTableLimit);

/// Exchange format: "order m", "legend", m lines "index xbits t" (xbits "-" when n = 0),
/// then m rows of 1-based indices.
void write_cayley(std::ostream& out, const CayleyTable& table);
[[nodiscard]] CayleyTable read_cayley(std::istream& in);
void export_cayley(const CodeLoop& L, std::ostream& out, std::uint64_t limit = kTableLimit);

/// Table-only checks, independent of how the table was produced.
[[nodiscard]] Report table_latin_check(const CayleyTable& table);
[[nodiscard]] Report table_moufang_check(const CayleyTable& table);
/// First failing triple (as ordinals) or nothing.
[[nodiscard]] std::optional<std::array<std::uint64_t, 3>> table_associativity_witness(const CayleyTable& table);

/// Permutations in right-action notation: p maps i to p[i], and (p q)[i] = q[p[i]].
using Permutation = std::vector<std::uint32_t>;

[[nodiscard]] Permutation compose(const Permutation& p, const Permutation& q);
[[nodiscard]] Permutation inverse(const Permutation& p);
/// p^-1 q^-1 p q
[[nodiscard]] Permutation commutator(const Permutation& p, const Permutation& q);

/// b -> b o a and b -> a o b. Throws CapacityError when the order exceeds `limit`.
[[nodiscard]] Permutation right_mult_perm(const CodeLoop& L, const LoopElement& a, std::uint64_t limit = kTableLimit);
[[nodiscard]] Permutation left_mult_perm(const CodeLoop& L, const LoopElement& a, std::uint64_t limit = kTableLimit);

/// Moufang identity x(y(xz)) = ((xy)x)z; exhaustive when order^3 <= triple_limit.
[[nodiscard]] Report is_moufang(const CodeLoop& L, const VerifyMode& mode);
/// Unique solvability of a o x = c and x o b = c.
[[nodiscard]] Report latin_check(const CodeLoop& L, const VerifyMode& mode);
/// True iff every associator is trivial; order <= 256 is decided on the full table.
[[nodiscard]] bool is_associative(const CodeLoop& L, const VerifyMode& mode = {});

/// Elements z with [x,z] = (x,y,z) = (x,z,y) = (z,x,y) = 1 for all (or sampled) x, y.
[[nodiscard]] std::vector<LoopElement> center(const CodeLoop& L, const VerifyMode& mode);

/// s central, squares in {1, s}, and the quotient by <s> multiplies by XOR on xbits.
/// Exhaustive when (order/2)^2 <= triple_limit: centrality then follows from s acting as
/// the t-flip on both sides and t-linearity of the product, checked on all pairs.
[[nodiscard]] Report small_frattini_check(const CodeLoop& L, const VerifyMode& mode);

/// Reads sigma, kappa, alpha off squares, commutators and associators of the x_i.
/// Throws StructuralError when one of them is outside {1, s}.
[[nodiscard]] CubicSpace recovered_constants(const CodeLoop& L);

/// Squares, commutators and associators of arbitrary elements against the cubic maps.
[[nodiscard]] Report structure_check(const CodeLoop& L, const VerifyMode& mode);

/// All bracketings of words of length <= 4 in {a, b} agree.
[[nodiscard]] Report diassociativity_check(const CodeLoop& L, const VerifyMode& mode);

/// [R_x,R_y] = R_[x,y], [R_y,L_z] = R_(y^-1,z), [[R_x,L_y],R_z] = R_(x,y,z), with
/// R_(y,z) = R_y R_z R_yz^-1. Whole permutations are compared; exhaustive while the
/// work order^4 stays within triple_limit, otherwise on sampled triples (pointwise at
/// sampled points once the loop is too large for materialized permutations).
[[nodiscard]] Report verify_mult_identities(const CodeLoop& L, const VerifyMode& mode);

/// |Mlt(L)| divides |G|/|N|, and R_s = L_s is a central involution of Mlt(L). n <= 3.
[[nodiscard]] Report mlt_bound_check(const CodeLoop& L);

/// Table of alpha o beta = beta^(rho alpha rho sigma) = alpha^(rho^-1 beta rho^-1 sigma)
/// computed by conjugating involutions in G x| S, compared with the coset product. n <= 3.
[[nodiscard]] Report dual_construction_check(const CodeLoop& L);

}  // namespace codeloop
