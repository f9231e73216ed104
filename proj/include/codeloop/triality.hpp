#pragma once

// The group G of order 2^(3n+2) generated by g_i, f_i, h_i (i = 1..n), u, v with
//
//   g_i^2 = u^sigma_i,  f_i^2 = v^sigma_i,  h_i^2 = u^2 = v^2 = 1,
//   [g_i,g_j] = u^kappa_ij,  [f_i,f_j] = v^kappa_ij,
//   [g_i,f_j] = (uv)^kappa_ij * prod_k h_k^alpha_ijk,
//   [g_i,h_j] = u^delta_ij,  [f_i,h_j] = v^delta_ij,
//   h_i, u, v otherwise commuting, u and v central,
//
// together with its automorphisms sigma, rho generating S3. Commutators are
// [a,b] = a^-1 b^-1 a b throughout.

#include "codeloop/cubic.hpp"
#include "codeloop/report.hpp"
#include "codeloop/rng.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace codeloop {

/// Normal form g^x f^y h^z u^t1 v^t2 with g^x = g_1^x_1 ... g_n^x_n etc.
/// Bit i of each mask is the exponent of the generator with index i+1.
struct GroupElement {
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    std::uint64_t z = 0;
    bool t1 = false;
    bool t2 = false;
    /// Identity of the owning TrialityGroup; operands of different groups are rejected.
    std::uint32_t group = 0;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Generators in collection order: g_1 < ... < g_n < f_1 < ... < f_n < h_1 < ... < h_n < u < v.
struct Generator {
    enum class Kind : std::uint8_t { G, F, H, U, V };
    Kind kind;
    std::uint8_t index = 0;  // 0-based; unused for U and V

    friend bool operator==(const Generator&, const Generator&) = default;
};

/// A word letter: a generator or its inverse.
struct Letter {
    Generator gen;
    bool inverse = false;
};
using Word = std::vector<Letter>;

/// An element of S3 = <sigma, rho> as the function sigma^s o rho^r (rho applied first).
struct TrialityMap {
    std::uint8_t s = 0;  // 0..1
    std::uint8_t r = 0;  // 0..2

    static constexpr TrialityMap identity() { return {0, 0}; }
    static constexpr TrialityMap sigma() { return {1, 0}; }
    static constexpr TrialityMap rho() { return {0, 1}; }
    /// The three involutions: sigma_1 = sigma, sigma_2 = rho^-1 sigma rho, sigma_3 = rho sigma rho^-1.
    static TrialityMap involution(int which);

    [[nodiscard]] TrialityMap inverse() const;
    /// Function composition: (a * b)(x) = a(b(x)).
    friend TrialityMap operator*(TrialityMap a, TrialityMap b);
    friend bool operator==(TrialityMap, TrialityMap) = default;
};

[[nodiscard]] std::string to_string(TrialityMap m);

enum class Subgroup { H1, H2, H3 };

class TrialityGroup {
public:
    /// n <= 64 (bit-packed exponent vectors).
    explicit TrialityGroup(CubicSpace space);

    [[nodiscard]] std::size_t dim() const noexcept { return n_; }
    [[nodiscard]] const CubicSpace& space() const noexcept { return space_; }
    [[nodiscard]] std::uint32_t id() const noexcept { return id_; }
    /// log2 |G| = 3n + 2.
    [[nodiscard]] unsigned log2_order() const noexcept { return static_cast<unsigned>(3 * n_ + 2); }

    [[nodiscard]] GroupElement identity() const noexcept { return make(0, 0, 0, false, false); }
    [[nodiscard]] GroupElement g(std::size_t i) const;
    [[nodiscard]] GroupElement f(std::size_t i) const;
    [[nodiscard]] GroupElement h(std::size_t i) const;
    [[nodiscard]] GroupElement u() const noexcept { return make(0, 0, 0, true, false); }
    [[nodiscard]] GroupElement v() const noexcept { return make(0, 0, 0, false, true); }
    [[nodiscard]] GroupElement generator(Generator gen) const;
    /// All 3n+2 generators in collection order.
    [[nodiscard]] std::vector<Generator> generators() const;

    /// Validates the masks against n.
    [[nodiscard]] GroupElement element(std::uint64_t x, std::uint64_t y, std::uint64_t z, bool t1, bool t2) const;
    /// Element number k in 0..2^(3n+2)-1 (bits: x | y | z | t1 | t2 from the low end).
    [[nodiscard]] GroupElement element_at(std::uint64_t k) const;
    [[nodiscard]] GroupElement random(SplitMix64& rng) const;

    /// Normal form of a*b (closed-form collection).
    [[nodiscard]] GroupElement mul(const GroupElement& a, const GroupElement& b) const;
    /// Normal form of a*b by adjacent-swap collection of the concatenated words.
    [[nodiscard]] GroupElement mul_by_collection(const GroupElement& a, const GroupElement& b) const;
    [[nodiscard]] GroupElement inv(const GroupElement& a) const;
    /// a^-1 b^-1 a b
    [[nodiscard]] GroupElement commutator(const GroupElement& a, const GroupElement& b) const;
    /// b^-1 a b
    [[nodiscard]] GroupElement conj(const GroupElement& a, const GroupElement& b) const;

    /// Normal-form generator word of a.
    [[nodiscard]] Word word_of(const GroupElement& a) const;
    /// Collects an arbitrary word by adjacent swaps.
    [[nodiscard]] GroupElement collect(const Word& w) const;
    /// Product of the images of the letters of w under `images` (indexed like generators()).
    [[nodiscard]] GroupElement evaluate(const Word& w, const std::vector<GroupElement>& images) const;

    [[nodiscard]] GroupElement apply(TrialityMap map, const GroupElement& a) const;
    /// Images of generators() under map.
    [[nodiscard]] const std::vector<GroupElement>& generator_images(TrialityMap map) const;

    /// [a, sigma] = a^-1 a^sigma
    [[nodiscard]] GroupElement bracket_sigma(const GroupElement& a) const;
    /// [a,sigma] [a,sigma]^rho [a,sigma]^(rho^2) == 1
    [[nodiscard]] bool check_triality(const GroupElement& a) const;

    [[nodiscard]] bool in_subgroup(const GroupElement& a, Subgroup which) const;

    /// (x', t) with H3 a = H3 g^x' u^t, by left-multiplying with H3 generators.
    [[nodiscard]] std::pair<std::uint64_t, bool> canonical_coset_rep(const GroupElement& a) const;
    /// Same result via the closed-form membership test for H3.
    [[nodiscard]] std::pair<std::uint64_t, bool> coset_rep_fast(const GroupElement& a) const;

    /// sum_{i<j<k} x_i x_j x_k alpha_ijk
    [[nodiscard]] bool cubic_term(std::uint64_t x) const noexcept;

    [[nodiscard]] std::string to_string(const GroupElement& a) const;

private:
    [[nodiscard]] GroupElement make(std::uint64_t x, std::uint64_t y, std::uint64_t z, bool t1, bool t2) const noexcept {
        return GroupElement{x, y, z, t1, t2, id_};
    }
    void require_same(const GroupElement& a) const;
    [[nodiscard]] std::size_t ordinal(Generator gen) const noexcept;
    void append_commutator(Word& out, Generator later, Generator earlier) const;
    void append_square(Word& out, Generator gen) const;

    CubicSpace space_;
    std::size_t n_;
    std::uint32_t id_;
    std::uint64_t full_ = 0;
    std::uint64_t sigma_ = 0;
    std::vector<std::uint64_t> kappa_;  // [i]: bits j with kappa_ij = 1
    std::vector<std::uint64_t> alpha_;  // [i*n+j]: bits k with alpha_ijk = 1
    std::vector<std::vector<GroupElement>> images_;  // per TrialityMap (s*3 + r)
};

/// Product override used to run the presentation checks against an alternative
/// multiplication (e.g. a deliberately corrupted one).
using ProductFn = std::function<GroupElement(const GroupElement&, const GroupElement&)>;

struct VerifyMode {
    /// Elementwise suites enumerate all of G when |G| <= element_limit.
    std::uint64_t element_limit = std::uint64_t{1} << 14;
    /// Associativity is exhaustive when |G|^3 <= triple_limit.
    std::uint64_t triple_limit = std::uint64_t{1} << 24;
    SampleSpec sample{1000, 0};
};

/// Defining relations (identity, sigma and rho images), associativity,
/// sigma^2 = rho^3 = (sigma rho)^2 = id.
[[nodiscard]] Report verify_presentation(const TrialityGroup& G, const VerifyMode& mode, const ProductFn& product = {});

/// Triality identity on every element when 2^(3n+2) <= limit, else on samples.
[[nodiscard]] Report verify_triality(const TrialityGroup& G, const VerifyMode& mode);

/// (tau_i tau_j)^3 = id for sampled conjugates tau_i = sigma_i^a, tau_j = sigma_j^b, i != j.
/// Each map identity is checked on every generator. When |G|^2 <= limit all pairs (a, b)
/// are used for every i != j.
[[nodiscard]] Report parker_check(const TrialityGroup& G, const VerifyMode& mode);

/// Subgroup orders and |G:H3| = |H2 : H2 n H3| = 2^(n+1); enumeration cross-check when |G| <= limit.
[[nodiscard]] Report index_check(const TrialityGroup& G, const VerifyMode& mode);

/// Fixed points of sigma are exactly H3 (exhaustive or sampled).
[[nodiscard]] Report centralizer_check(const TrialityGroup& G, const VerifyMode& mode);

/// Largest normal subgroup of G inside H3, by enumeration. Throws CapacityError when
/// |H3| * |G| exceeds `limit`.
[[nodiscard]] std::vector<GroupElement> core_N(const TrialityGroup& G, std::uint64_t limit = std::uint64_t{1} << 22);

/// Defining relations as (lhs, rhs) word pairs.
[[nodiscard]] std::vector<std::pair<Word, Word>> defining_relations(const TrialityGroup& G);

/// An element g*s of the holomorph G x| S, with s given by its action.
struct HolElement {
    GroupElement g;
    TrialityMap s;
    friend bool operator==(const HolElement&, const HolElement&) = default;
};

/// G x| S with the right-action conventions (x^s = s^-1 x s is the image of x under s).
class Holomorph {
public:
    explicit Holomorph(const TrialityGroup& G) : G_(G) {}

    [[nodiscard]] HolElement mul(const HolElement& a, const HolElement& b) const;
    [[nodiscard]] HolElement inv(const HolElement& a) const;
    /// b^-1 a b
    [[nodiscard]] HolElement conj(const HolElement& a, const HolElement& b) const;
    [[nodiscard]] HolElement lift(const GroupElement& g) const { return {g, TrialityMap::identity()}; }
    [[nodiscard]] HolElement lift(TrialityMap s) const { return {G_.identity(), s}; }
    /// sigma^g = ([g, sigma], sigma)
    [[nodiscard]] HolElement sigma_conjugate(const GroupElement& g) const;

private:
    const TrialityGroup& G_;
};

}  // namespace codeloop
