#include "codeloop/codes.hpp"
#include "codeloop/errors.hpp"
#include "codeloop/triality.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>
#include <vector>

using namespace codeloop;

namespace {

TrialityGroup group_of(const char* name) { return TrialityGroup(from_code(builtin_code(name))); }

std::vector<int> tokens(const TrialityGroup& G, const GroupElement& a) {
    const auto n = static_cast<int>(G.dim());
    std::vector<int> w;
    for (int i = 0; i < n; ++i)
        if ((a.x >> i) & 1u) w.push_back(i);
    for (int i = 0; i < n; ++i)
        if ((a.y >> i) & 1u) w.push_back(n + i);
    for (int i = 0; i < n; ++i)
        if ((a.z >> i) & 1u) w.push_back(2 * n + i);
    if (a.t1) w.push_back(3 * n);
    if (a.t2) w.push_back(3 * n + 1);
    return w;
}

GroupElement from_exponents(const TrialityGroup& G, const std::vector<int>& e) {
    const std::size_t n = G.dim();
    std::uint64_t x = 0, y = 0, z = 0;
    for (std::size_t i = 0; i < n; ++i) {
        x |= std::uint64_t(e[i]) << i;
        y |= std::uint64_t(e[n + i]) << i;
        z |= std::uint64_t(e[2 * n + i]) << i;
    }
    return G.element(x, y, z, e[3 * n], e[3 * n + 1]);
}

GroupElement oracle_mul(const TrialityGroup& G, const oracle::Collector& C, const GroupElement& a,
                        const GroupElement& b) {
    auto w = tokens(G, a);
    const auto wb = tokens(G, b);
    w.insert(w.end(), wb.begin(), wb.end());
    return from_exponents(G, C.collect(w));
}

std::uint64_t order_of(const TrialityGroup& G) { return std::uint64_t{1} << G.log2_order(); }

// A multiplication with the [f_1, g_1] correction dropped whenever f_1 meets g_1.
ProductFn corrupted(const TrialityGroup& G) {
    return [&G](const GroupElement& a, const GroupElement& b) {
        GroupElement p = G.mul(a, b);
        if ((a.y & 1u) && (b.x & 1u)) p.z ^= 1u;
        return p;
    };
}

}  // namespace

TEST_CASE("product examples") {
    const auto G = group_of("hamming8");
    CHECK(G.mul(G.g(0), G.g(0)) == G.u());
    CHECK(G.mul(G.identity(), G.f(2)) == G.f(2));
    CHECK(G.mul(G.h(0), G.g(0)) == G.element(1, 0, 1, true, false));
    CHECK(G.mul(G.f(0), G.g(1)) == G.element(0b10, 0b01, 0b100, true, true));

    CHECK(G.inv(G.identity()) == G.identity());
    CHECK(G.inv(G.g(0)) == G.mul(G.g(0), G.u()));
    CHECK(G.commutator(G.g(0), G.f(1)) == G.element(0, 0, 0b100, true, true));

    // recomputed from the stored constants
    const auto& V = G.space();
    std::uint64_t z = 0;
    for (std::size_t k = 0; k < 4; ++k) z |= std::uint64_t(V.alpha(1, 0, k)) << k;
    CHECK(G.commutator(G.g(1), G.f(0)) == G.element(0, 0, z, V.kappa(0, 1), V.kappa(0, 1)));
}

TEST_CASE("mixing groups is a context error") {
    const auto A = group_of("zero_1");
    const auto B = group_of("zero_1");
    CHECK_THROWS_AS((void)A.mul(A.g(0), B.g(0)), ContextError);
    CHECK_THROWS_AS((void)A.apply(TrialityMap::rho(), B.g(0)), ContextError);
    CHECK_THROWS_AS((void)A.in_subgroup(B.g(0), Subgroup::H3), ContextError);
}

TEST_CASE("closed form agrees with an independent collector") {
    SplitMix64 rng(31);
    for (int rep = 0; rep < 40; ++rep) {
        const std::size_t n = rng.below(7);
        const TrialityGroup G(random_space(n, rng));
        const oracle::Collector C(G.space());
        for (int s = 0; s < 250; ++s) {
            const auto a = G.random(rng), b = G.random(rng);
            REQUIRE(G.mul(a, b) == oracle_mul(G, C, a, b));
        }
    }
    // the golay group on a few pairs, words there are long
    const auto G = group_of("golay24");
    const oracle::Collector C(G.space());
    for (int s = 0; s < 50; ++s) {
        const auto a = G.random(rng), b = G.random(rng);
        REQUIRE(G.mul(a, b) == oracle_mul(G, C, a, b));
    }
}

TEST_CASE("closed form agrees with the swap collector on 10^6 pairs") {
    SplitMix64 rng(77);
    std::uint64_t done = 0;
    const std::size_t dims[] = {1, 2, 3, 4, 5, 6, 8, 12};
    for (std::size_t n : dims) {
        const TrialityGroup G(random_space(n, rng));
        for (int s = 0; s < 125000; ++s) {
            const auto a = G.random(rng), b = G.random(rng);
            if (G.mul(a, b) != G.mul_by_collection(a, b)) {
                FAIL(G.to_string(a) << " * " << G.to_string(b));
            }
            ++done;
        }
    }
    CHECK(done == 1000000);
}

TEST_CASE("group order and cancellation") {
    SplitMix64 rng(8);
    for (std::size_t n = 0; n <= 2; ++n) {
        const TrialityGroup G(random_space(n, rng));
        const std::uint64_t order = order_of(G);
        CHECK(order == (std::uint64_t{1} << (3 * n + 2)));
        std::set<GroupElement> all;
        for (std::uint64_t k = 0; k < order; ++k) all.insert(G.element_at(k));
        CHECK(all.size() == order);
        for (const auto& a : all) {
            std::set<GroupElement> row, col;
            for (const auto& b : all) {
                row.insert(G.mul(a, b));
                col.insert(G.mul(b, a));
            }
            CHECK(row.size() == order);
            CHECK(col.size() == order);
            CHECK(G.mul(a, G.inv(a)) == G.identity());
        }
    }
}

TEST_CASE("degenerate n = 0") {
    const auto G = group_of("zero_0");
    CHECK(G.log2_order() == 2);
    CHECK(G.mul(G.u(), G.v()) == G.element(0, 0, 0, true, true));
    CHECK(G.apply(TrialityMap::rho(), G.v()) == G.element(0, 0, 0, true, true));
    CHECK(verify_presentation(G, {}).passed());
    CHECK(verify_triality(G, {}).passed());
}

TEST_CASE("automorphism examples") {
    const auto G = group_of("hamming8");
    const auto rho = TrialityMap::rho(), sigma = TrialityMap::sigma();
    CHECK(G.apply(rho, G.g(0)) == G.f(0));
    CHECK(G.apply(rho, G.v()) == G.mul(G.u(), G.v()));
    CHECK(G.apply(rho, G.f(0)) == G.element(1, 1, 0, true, true));
    CHECK(G.apply(rho, G.f(0)) == G.inv(G.mul(G.g(0), G.f(0))));
    CHECK(G.apply(sigma, G.g(2)) == G.f(2));
    CHECK(G.apply(sigma, G.h(1)) == G.h(1));

    CHECK(G.bracket_sigma(G.identity()) == G.identity());
    CHECK(G.bracket_sigma(G.u()) == G.element(0, 0, 0, true, true));
    CHECK(G.bracket_sigma(G.h(0)) == G.identity());

    CHECK(G.check_triality(G.identity()));
    CHECK(G.check_triality(G.g(0)));
}

TEST_CASE("S3 composition matches the action") {
    SplitMix64 rng(12);
    const TrialityGroup G(random_space(5, rng));
    std::vector<TrialityMap> maps;
    for (std::uint8_t s = 0; s < 2; ++s)
        for (std::uint8_t r = 0; r < 3; ++r) maps.push_back({s, r});
    for (const auto a : maps) {
        CHECK(a * a.inverse() == TrialityMap::identity());
        for (const auto b : maps)
            for (int k = 0; k < 20; ++k) {
                const auto x = G.random(rng);
                REQUIRE(G.apply(a * b, x) == G.apply(a, G.apply(b, x)));
            }
    }
    for (int i = 1; i <= 3; ++i) {
        const auto t = TrialityMap::involution(i);
        CHECK(t.s == 1);
        CHECK(t * t == TrialityMap::identity());
    }
    CHECK(TrialityMap::involution(2) != TrialityMap::involution(3));
}

TEST_CASE("automorphisms are homomorphisms") {
    SplitMix64 rng(13);
    for (int rep = 0; rep < 10; ++rep) {
        const TrialityGroup G(random_space(rng.below(10), rng));
        for (int s = 0; s < 200; ++s) {
            const auto a = G.random(rng), b = G.random(rng);
            for (const auto m : {TrialityMap::sigma(), TrialityMap::rho()})
                REQUIRE(G.apply(m, G.mul(a, b)) == G.mul(G.apply(m, a), G.apply(m, b)));
        }
    }
}

TEST_CASE("verify_presentation") {
    const auto Z = group_of("zero_1");
    const auto r = verify_presentation(Z, {});
    CHECK(r.passed());
    CHECK(r.mode == CheckMode::Exhaustive);
    CHECK(r.find("associativity")->checks == 32768);

    VerifyMode sampled;
    sampled.sample = {20000, 1};
    CHECK(verify_presentation(group_of("hamming8"), sampled).passed());
}

TEST_CASE("a corrupted product is caught") {
    const auto Z = group_of("zero_1");
    const auto r = verify_presentation(Z, {}, corrupted(Z));
    CHECK_FALSE(r.passed());
    CHECK_FALSE(r.find("relations")->passed());
    const Check* assoc = r.find("associativity");
    CHECK_FALSE(assoc->passed());
    CHECK_FALSE(assoc->witness.empty());

    const auto H = group_of("hamming8");
    VerifyMode sampled;
    sampled.sample = {20000, 1};
    const auto rh = verify_presentation(H, sampled, corrupted(H));
    CHECK_FALSE(rh.find("associativity")->passed());
    CHECK_FALSE(rh.find("relations")->witness.empty());
}

TEST_CASE("triality, Parker and index") {
    for (const char* name : {"zero_1", "hamming8_sub3", "hamming8"})
        CHECK(verify_triality(group_of(name), {}).passed());

    VerifyMode m;
    m.sample = {1000, 3};
    CHECK(parker_check(group_of("hamming8"), m).passed());
    const auto p = parker_check(group_of("zero_1"), m);
    CHECK(p.passed());
    CHECK(p.mode == CheckMode::Exhaustive);

    const auto one = index_check(group_of("zero_1"), m);
    CHECK(one.passed());
    CHECK(index_check(group_of("hamming8"), m).passed());
    VerifyMode coords_only;
    coords_only.element_limit = 1;
    CHECK(index_check(group_of("golay24"), coords_only).passed());
}

TEST_CASE("subgroup membership") {
    const auto G = group_of("hamming8");
    CHECK(G.in_subgroup(G.g(0), Subgroup::H1));
    CHECK_FALSE(G.in_subgroup(G.g(0), Subgroup::H2));
    CHECK_FALSE(G.in_subgroup(G.g(0), Subgroup::H3));
    CHECK(G.in_subgroup(G.mul(G.g(0), G.f(0)), Subgroup::H3));
    for (const auto which : {Subgroup::H1, Subgroup::H2, Subgroup::H3}) CHECK(G.in_subgroup(G.h(0), which));
}

TEST_CASE("H3 is the centralizer of sigma") {
    // n = 1: 8 fixed points
    const auto Z = group_of("zero_1");
    std::uint64_t fixed = 0;
    for (std::uint64_t k = 0; k < 32; ++k) {
        const auto a = Z.element_at(k);
        const bool f = Z.apply(TrialityMap::sigma(), a) == a;
        fixed += f;
        CHECK(f == Z.in_subgroup(a, Subgroup::H3));
    }
    CHECK(fixed == 8);
    CHECK(Z.apply(TrialityMap::sigma(), Z.g(0)) == Z.f(0));
    CHECK(Z.in_subgroup(Z.element(0, 0, 1, true, true), Subgroup::H3));

    // with a cubic term the fixed points have t1 + t2 = alpha(x) rather than t1 = t2
    const auto S = group_of("hamming8_sub3");
    std::uint64_t count = 0;
    for (std::uint64_t k = 0; k < order_of(S); ++k) {
        const auto a = S.element_at(k);
        const bool f = S.apply(TrialityMap::sigma(), a) == a;
        count += f;
        REQUIRE(f == S.in_subgroup(a, Subgroup::H3));
    }
    CHECK(count == 128);
    const auto gf = S.element(0b111, 0b111, 0, false, false);
    CHECK(S.apply(TrialityMap::sigma(), gf) != gf);
    CHECK(S.apply(TrialityMap::sigma(), S.element(0b111, 0b111, 0, true, false)) ==
          S.element(0b111, 0b111, 0, true, false));

    CHECK(centralizer_check(S, {}).passed());
}

TEST_CASE("coset representatives") {
    const auto G = group_of("hamming8");
    CHECK(G.canonical_coset_rep(G.mul(G.g(0), G.f(0))) == std::pair<std::uint64_t, bool>{0, false});
    CHECK(G.canonical_coset_rep(G.g(0)) == std::pair<std::uint64_t, bool>{1, false});
    CHECK(G.canonical_coset_rep(G.f(0)) == std::pair<std::uint64_t, bool>{1, true});

    SplitMix64 rng(5);
    for (std::size_t n = 0; n <= 3; ++n) {
        const TrialityGroup S(random_space(n, rng));
        const std::uint64_t reps = std::uint64_t{1} << (n + 1);
        std::vector<GroupElement> rep;
        for (std::uint64_t k = 0; k < reps; ++k) rep.push_back(S.element(k >> 1, 0, 0, k & 1u, false));
        // every element lies in the coset of exactly one representative
        for (std::uint64_t k = 0; k < order_of(S); ++k) {
            const auto a = S.element_at(k);
            int hits = 0;
            std::uint64_t which = 0;
            for (std::uint64_t r = 0; r < reps; ++r)
                if (S.in_subgroup(S.mul(a, S.inv(rep[r])), Subgroup::H3)) {
                    ++hits;
                    which = r;
                }
            REQUIRE(hits == 1);
            const auto c = S.canonical_coset_rep(a);
            REQUIRE(c == std::pair<std::uint64_t, bool>{which >> 1, (which & 1u) != 0});
            REQUIRE(S.coset_rep_fast(a) == c);
        }
    }
}

TEST_CASE("core_N") {
    SplitMix64 rng(6);
    for (std::size_t n = 1; n <= 3; ++n) {
        const TrialityGroup G(random_space(n, rng));
        const auto N = core_N(G);
        const std::set<GroupElement> set(N.begin(), N.end());
        CHECK(set.count(G.element(0, 0, 0, true, true)) == 1);
        for (const auto& a : N) {
            CHECK(G.in_subgroup(a, Subgroup::H3));
            for (const auto gen : G.generators()) CHECK(set.count(G.conj(a, G.generator(gen))) == 1);
        }
    }
    CHECK_THROWS_AS((void)core_N(group_of("golay24")), CapacityError);
}

TEST_CASE("commutators lie in <h, u, v>") {
    SplitMix64 rng(17);
    const auto G = group_of("golay24");
    for (int s = 0; s < 5000; ++s) {
        const auto a = G.random(rng), b = G.random(rng), c = G.random(rng);
        const auto ab = G.commutator(a, b);
        REQUIRE(ab.x == 0);
        REQUIRE(ab.y == 0);
        const auto abc = G.commutator(ab, c);
        REQUIRE(abc.x == 0);
        REQUIRE(abc.y == 0);
        REQUIRE(abc.z == 0);
    }
}

TEST_CASE("generator words and relations") {
    const auto G = group_of("hamming8_sub3");
    SplitMix64 rng(2);
    for (int s = 0; s < 200; ++s) {
        const auto a = G.random(rng);
        CHECK(G.collect(G.word_of(a)) == a);
    }
    std::vector<GroupElement> images;
    for (const auto gen : G.generators()) images.push_back(G.generator(gen));
    for (const auto& [lhs, rhs] : defining_relations(G)) CHECK(G.evaluate(lhs, images) == G.evaluate(rhs, images));
}
