#include "codeloop/codes.hpp"
#include "codeloop/errors.hpp"
#include "codeloop/moufang.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace codeloop;

namespace {

CodeLoop loop_of(const char* name) { return CodeLoop(from_code(builtin_code(name))); }

std::vector<LoopElement> elements(const CodeLoop& L) {
    std::vector<LoopElement> out;
    for (std::uint64_t k = 0; k < L.order(); ++k) out.push_back(L.from_ordinal(k));
    return out;
}

// Table-only oracles; cells hold 0-based ordinals.
struct TableOracle {
    const CayleyTable& T;
    std::uint32_t m(std::uint32_t a, std::uint32_t b) const { return T.at(a, b); }

    std::vector<std::uint32_t> center() const {
        std::vector<std::uint32_t> out;
        const auto n = static_cast<std::uint32_t>(T.order);
        for (std::uint32_t z = 0; z < n; ++z) {
            bool ok = true;
            for (std::uint32_t x = 0; x < n && ok; ++x) {
                ok = m(x, z) == m(z, x);
                for (std::uint32_t y = 0; y < n && ok; ++y)
                    ok = m(m(x, y), z) == m(x, m(y, z)) && m(m(x, z), y) == m(x, m(z, y)) &&
                         m(m(z, x), y) == m(z, m(x, y));
            }
            if (ok) out.push_back(z);
        }
        return out;
    }

    /// Order of the group generated by all left and right translations.
    std::size_t mlt_order() const {
        const auto n = static_cast<std::uint32_t>(T.order);
        std::vector<std::vector<std::uint32_t>> gens;
        for (std::uint32_t a = 0; a < n; ++a) {
            std::vector<std::uint32_t> r(n), l(n);
            for (std::uint32_t b = 0; b < n; ++b) {
                r[b] = m(b, a);
                l[b] = m(a, b);
            }
            gens.push_back(r);
            gens.push_back(l);
        }
        std::vector<std::uint32_t> id(n);
        for (std::uint32_t i = 0; i < n; ++i) id[i] = i;
        std::set<std::vector<std::uint32_t>> seen{id};
        std::vector<std::vector<std::uint32_t>> todo{id};
        while (!todo.empty()) {
            const auto p = todo.back();
            todo.pop_back();
            for (const auto& g : gens) {
                std::vector<std::uint32_t> q(n);
                for (std::uint32_t i = 0; i < n; ++i) q[i] = g[p[i]];
                if (seen.insert(q).second) todo.push_back(q);
            }
        }
        return seen.size();
    }
};

}  // namespace

TEST_CASE("unit and s") {
    const auto L = loop_of("hamming8");
    const auto one = L.one(), s = L.s_elem();
    CHECK(L.order() == 32);
    CHECK(L.mul(s, s) == one);
    for (const auto& a : elements(L)) {
        CHECK(L.mul(one, a) == a);
        CHECK(L.mul(a, one) == a);
        CHECK(L.mul(s, a) == L.mul(a, s));
    }
    CHECK(L.inv(one) == one);
    CHECK(L.inv(s) == s);
}

TEST_CASE("s is central up to order 256") {
    SplitMix64 rng(40);
    for (int rep = 0; rep < 3; ++rep) {
        const CodeLoop L(random_space(7, rng));
        for (const auto& a : elements(L)) REQUIRE(L.mul(L.s_elem(), a) == L.mul(a, L.s_elem()));
    }
}

TEST_CASE("basis elements of the hamming8 loop") {
    const auto L = loop_of("hamming8");
    const auto x1 = L.basis(0), x2 = L.basis(1), x3 = L.basis(2), s = L.s_elem();
    CHECK(L.mul(x1, x1) == s);
    CHECK(L.inv(x1) == L.mul(x1, s));
    CHECK(L.mul(x1, L.inv(x1)) == L.one());
    CHECK(L.commutator(x1, x2) == s);
    CHECK(L.commutator(x1, x1) == L.one());
    CHECK(L.associator(x1, x2, x3) == s);
    CHECK(L.mul(L.basis(3), L.basis(3)) == L.one());
    CHECK(L.to_string(x1) == "(1000,0)");
    CHECK(L.to_string(s) == "(0000,1)");
}

TEST_CASE("ordinals are big-endian with the unit first") {
    const auto L = loop_of("zero_2");
    CHECK(L.ordinal(L.one()) == 0);
    CHECK(L.ordinal(L.s_elem()) == 1);
    CHECK(L.ordinal(L.basis(0)) == 4);
    CHECK(L.ordinal(L.basis(1)) == 2);
    for (std::uint64_t k = 0; k < L.order(); ++k) CHECK(L.ordinal(L.from_ordinal(k)) == k);
    CHECK(L.xbits_string(L.basis(0)) == "10");
}

TEST_CASE("mul agrees with the literal coset reduction") {
    SplitMix64 rng(41);
    for (std::size_t n = 0; n <= 4; ++n) {
        const CodeLoop L(random_space(n, rng));
        const auto el = elements(L);
        for (const auto& a : el)
            for (const auto& b : el) REQUIRE(L.mul(a, b) == L.mul_reference(a, b));
    }
    const auto G = loop_of("golay24");
    for (int k = 0; k < 2000; ++k) {
        const auto a = G.random(rng), b = G.random(rng);
        REQUIRE(G.mul(a, b) == G.mul_reference(a, b));
    }
}

TEST_CASE("division, inverses and powers") {
    SplitMix64 rng(42);
    const auto L = loop_of("golay24");
    for (int k = 0; k < 2000; ++k) {
        const auto a = L.random(rng), b = L.random(rng);
        const auto c = L.mul(a, b);
        REQUIRE(L.left_div(a, c) == b);
        REQUIRE(L.right_div(c, b) == a);
        REQUIRE(L.mul(a, L.inv(a)) == L.one());
        REQUIRE(L.mul(L.inv(a), a) == L.one());
        REQUIRE(L.power(a, 0) == L.one());
        REQUIRE(L.power(a, 1) == a);
        REQUIRE(L.power(a, 2) == L.mul(a, a));
        REQUIRE(L.power(a, 3) == L.mul(L.mul(a, a), a));
        REQUIRE(L.power(a, -1) == L.inv(a));
        REQUIRE(L.power(a, 4) == L.one());
    }
}

TEST_CASE("commutator by division agrees with the bracketed forms") {
    SplitMix64 rng(43);
    for (const char* name : {"hamming8", "hamming8_sub3", "golay24"}) {
        const auto L = loop_of(name);
        for (int k = 0; k < 3000; ++k) {
            const auto a = L.random(rng), b = L.random(rng);
            const auto ai = L.inv(a), bi = L.inv(b);
            const auto d = L.commutator(a, b);
            REQUIRE(L.mul(L.mul(b, a), d) == L.mul(a, b));
            REQUIRE(d == L.mul(L.mul(L.mul(ai, bi), a), b));
            REQUIRE(d == L.mul(ai, L.mul(bi, L.mul(a, b))));
            REQUIRE(d == L.mul(L.mul(ai, bi), L.mul(a, b)));
        }
    }
}

TEST_CASE("mixing loops is a context error") {
    const auto A = loop_of("zero_1");
    const auto B = loop_of("zero_1");
    CHECK_THROWS_AS((void)A.mul(A.one(), B.one()), ContextError);
}

TEST_CASE("loop suites pass on the reference loops") {
    VerifyMode mode;
    mode.sample = {3000, 9};
    for (const char* name : {"zero_0", "zero_1", "zero_3", "hamming8_sub3", "hamming8"}) {
        CAPTURE(name);
        const auto L = loop_of(name);
        CHECK(is_moufang(L, mode).passed());
        CHECK(latin_check(L, mode).passed());
        CHECK(small_frattini_check(L, mode).passed());
        CHECK(structure_check(L, mode).passed());
        CHECK(diassociativity_check(L, mode).passed());
        CHECK(verify_mult_identities(L, mode).passed());
        if (L.dim() <= 3) {
            CHECK(mlt_bound_check(L).passed());
            CHECK(dual_construction_check(L).passed());
        }
    }
    const auto h = is_moufang(loop_of("hamming8"), mode);
    CHECK(h.mode == CheckMode::Exhaustive);
    CHECK(h.find("moufang-identity")->checks == 32768);
}

TEST_CASE("center") {
    VerifyMode mode;
    for (const char* name : {"zero_2", "hamming8_sub3", "hamming8"}) {
        CAPTURE(name);
        const auto L = loop_of(name);
        const auto T = cayley_table(L);
        auto expected = TableOracle{T}.center();
        std::vector<std::uint32_t> got;
        for (const auto& z : center(L, mode)) got.push_back(static_cast<std::uint32_t>(L.ordinal(z)));
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
        CHECK(std::find(got.begin(), got.end(), 1u) != got.end());
    }
    CHECK(center(loop_of("zero_2"), mode).size() == 8);
    const auto S = loop_of("hamming8_sub3");
    CHECK(center(S, mode) == std::vector<LoopElement>{S.one(), S.s_elem()});
}

TEST_CASE("zero_1 is cyclic of order 4") {
    const auto L = loop_of("zero_1");
    const auto T = cayley_table(L);
    CHECK_FALSE(table_associativity_witness(T));
    int order4 = 0;
    for (std::uint64_t a = 0; a < 4; ++a) {
        for (std::uint64_t b = 0; b < 4; ++b) CHECK(T.at(a, b) == T.at(b, a));
        const auto sq = T.at(a, a);
        order4 += sq != 0;
    }
    // Z2 x Z2 has no element of order 4
    CHECK(order4 == 2);
}

TEST_CASE("recovered constants") {
    for (const char* name : {"hamming8", "hamming8_sub3", "golay24", "zero_3"}) {
        const auto V = from_code(builtin_code(name));
        CHECK(recovered_constants(CodeLoop(V)) == V);
    }
    const auto Z = recovered_constants(loop_of("zero_3"));
    for (std::size_t i = 0; i < 3; ++i) CHECK(Z.sigma(i));
    CHECK(Z.kappa_row(0) == 0);
}

TEST_CASE("associativity") {
    for (const char* name : {"zero_0", "zero_1", "zero_2", "zero_3"}) CHECK(is_associative(loop_of(name)));
    const auto H = loop_of("hamming8");
    CHECK_FALSE(is_associative(H));
    const auto w = table_associativity_witness(cayley_table(H));
    REQUIRE(w);
    const auto a = H.from_ordinal((*w)[0]), b = H.from_ordinal((*w)[1]), c = H.from_ordinal((*w)[2]);
    CHECK(H.associator(a, b, c) == H.s_elem());
    const auto S = loop_of("hamming8_sub3");
    CHECK_FALSE(is_associative(S));
    CHECK(S.associator(S.basis(0), S.basis(1), S.basis(2)) == S.s_elem());
}

TEST_CASE("multiplication permutations") {
    const auto L = loop_of("hamming8");
    const auto id = right_mult_perm(L, L.one());
    for (std::uint32_t i = 0; i < id.size(); ++i) CHECK(id[i] == i);
    CHECK(right_mult_perm(L, L.s_elem()) == left_mult_perm(L, L.s_elem()));
    for (const auto& a : elements(L)) {
        auto r = right_mult_perm(L, a);
        CHECK(compose(r, inverse(r)) == id);
        std::sort(r.begin(), r.end());
        CHECK(r == id);
    }
    CHECK_THROWS_AS((void)right_mult_perm(loop_of("golay24"), L.one()), CapacityError);
}

TEST_CASE("Mlt order against a table closure") {
    for (const char* name : {"zero_1", "hamming8_sub3"}) {
        const auto L = loop_of(name);
        const auto T = cayley_table(L);
        const auto r = mlt_bound_check(L);
        CHECK(r.passed());
        const std::string note = "|Mlt(L)| = " + std::to_string(TableOracle{T}.mlt_order()) + ",";
        REQUIRE_FALSE(r.notes.empty());
        CHECK(r.notes.front().rfind(note, 0) == 0);
    }
    CHECK(TableOracle{cayley_table(loop_of("zero_1"))}.mlt_order() == 4);
}

TEST_CASE("mult identities with x = y") {
    const auto L = loop_of("hamming8");
    for (const auto& x : elements(L)) {
        const auto rx = right_mult_perm(L, x);
        const auto id = right_mult_perm(L, L.one());
        CHECK(commutator(rx, rx) == id);
    }
}

TEST_CASE("cayley tables") {
    const auto L = loop_of("hamming8_sub3");
    const auto T = cayley_table(L);
    CHECK(T.order == 16);
    for (std::uint64_t j = 0; j < 16; ++j) CHECK(T.at(0, j) == j);
    CHECK(table_latin_check(T).passed());
    CHECK(table_moufang_check(T).passed());

    std::stringstream buf;
    write_cayley(buf, T);
    CHECK(buf.str().rfind("order 16\nlegend\n1 000 0\n2 000 1\n", 0) == 0);
    const auto back = read_cayley(buf);
    CHECK(back == T);

    // n = 0 writes "-" for the empty legend entry
    std::stringstream z;
    export_cayley(loop_of("zero_0"), z);
    CHECK(z.str() == "order 2\nlegend\n1 - 0\n2 - 1\n1 2\n2 1\n");
    std::stringstream zin(z.str());
    CHECK(read_cayley(zin).order == 2);

    CHECK_THROWS_AS((void)cayley_table(loop_of("golay24")), CapacityError);
}

TEST_CASE("table checks catch a damaged table") {
    auto T = cayley_table(loop_of("hamming8"));
    // swapping two rows keeps the table Latin
    std::swap_ranges(T.cells.begin() + 5 * 32, T.cells.begin() + 6 * 32, T.cells.begin() + 7 * 32);
    CHECK(table_latin_check(T).passed());
    CHECK_FALSE(table_moufang_check(T).passed());
    T.cells[3] = T.cells[4];
    CHECK_FALSE(table_latin_check(T).passed());
}

TEST_CASE("malformed tables") {
    auto line_of = [](const std::string& text) -> std::size_t {
        std::istringstream in(text);
        try {
            (void)read_cayley(in);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 999;
    };
    CHECK(line_of("order x\n") == 1);
    CHECK(line_of("order 2\nlegend\n1 - 0\n2 - 1\n1 2\n2 3\n") == 6);
    CHECK(line_of("order 2\nlegend\n1 - 0\n2 - 1\n1 2\n") == 6);
    CHECK(line_of("order 2\nlegend\n1 - 0\n3 - 1\n1 2\n2 1\n") == 4);
    CHECK(line_of("order 2\nlegend\n1 - 0\n2 - 1\n1 2 1\n2 1\n") == 5);
}
