#include "codeloop/moufang.hpp"

#include "codeloop/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace codeloop {

namespace {

using Mask = std::uint64_t;

bool fits(unsigned log2_count, std::uint64_t limit) { return log2_count < 64 && (std::uint64_t{1} << log2_count) <= limit; }

constexpr unsigned kMultiplierCacheLog2 = 14;
constexpr unsigned kEnumerationLog2 = 20;
// Largest loop whose multiplication maps are materialized as permutations.
constexpr std::uint64_t kPermutationOrder = 1024;

}  // namespace

// ---------------------------------------------------------------------------
// Loop

CodeLoop::CodeLoop(CubicSpace space) : CodeLoop(TrialityGroup(std::move(space))) {}

CodeLoop::CodeLoop(TrialityGroup group) : group_(std::move(group)), n_(group_.dim()), id_(group_.id()) {
    full_ = n_ >= 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
    if (log2_order() <= kMultiplierCacheLog2) {
        const std::uint64_t m = std::uint64_t{1} << log2_order();
        multipliers_.reserve(m);
        for (std::uint64_t k = 0; k < m; ++k) {
            const GroupElement r = group_.element(k >> 1, 0, 0, k & 1u, false);
            multipliers_.push_back(group_.apply(TrialityMap::rho(), group_.bracket_sigma(r)));
        }
    }
}

std::uint64_t CodeLoop::order() const {
    if (log2_order() >= 64) throw CapacityError("loop order does not fit 64 bits");
    return std::uint64_t{1} << log2_order();
}

void CodeLoop::require_same(const LoopElement& a) const {
    if (a.loop != id_) throw ContextError("loop element belongs to a different loop");
    if (a.x & ~full_) throw DimensionError("loop element has bits beyond n");
}

LoopElement CodeLoop::basis(std::size_t i) const {
    if (i >= n_) throw DimensionError("basis index out of range");
    return make(Mask{1} << i, false);
}

LoopElement CodeLoop::element(std::uint64_t x, bool t) const {
    if (x & ~full_) throw DimensionError("xbits beyond n");
    return make(x, t);
}

std::uint64_t CodeLoop::ordinal(const LoopElement& a) const {
    require_same(a);
    if (log2_order() >= 64) throw CapacityError("loop too large to index");
    std::uint64_t be = 0;
    for (std::size_t i = 0; i < n_; ++i)
        if ((a.x >> i) & 1u) be |= std::uint64_t{1} << (n_ - 1 - i);
    return (be << 1) | static_cast<std::uint64_t>(a.t);
}

LoopElement CodeLoop::from_ordinal(std::uint64_t k) const {
    if (k >= order()) throw DimensionError("ordinal out of range");
    const std::uint64_t be = k >> 1;
    Mask x = 0;
    for (std::size_t i = 0; i < n_; ++i)
        if ((be >> (n_ - 1 - i)) & 1u) x |= Mask{1} << i;
    return make(x, k & 1u);
}

LoopElement CodeLoop::random(SplitMix64& rng) const {
    const Mask x = rng.bits(static_cast<unsigned>(n_));
    return make(x, rng() & 1u);
}

GroupElement CodeLoop::lift(const LoopElement& a) const {
    require_same(a);
    return group_.element(a.x, 0, 0, a.t, false);
}

LoopElement CodeLoop::from_coset(const GroupElement& g) const {
    const auto [x, t] = group_.coset_rep_fast(g);
    return make(x, t);
}

GroupElement CodeLoop::right_multiplier(const LoopElement& a) const {
    require_same(a);
    if (!multipliers_.empty()) return multipliers_[(a.x << 1) | static_cast<Mask>(a.t)];
    return group_.apply(TrialityMap::rho(), group_.bracket_sigma(lift(a)));
}

LoopElement CodeLoop::mul(const LoopElement& a, const LoopElement& b) const {
    return from_coset(group_.mul(lift(a), right_multiplier(b)));
}

LoopElement CodeLoop::mul_reference(const LoopElement& a, const LoopElement& b) const {
    const GroupElement gamma = group_.apply(TrialityMap::rho(), group_.bracket_sigma(lift(b)));
    const auto [x, t] = group_.canonical_coset_rep(group_.mul(lift(a), gamma));
    return make(x, t);
}

LoopElement CodeLoop::left_div(const LoopElement& a, const LoopElement& c) const {
    require_same(c);
    // The quotient by <s> multiplies by XOR, so only the t coordinate is open.
    const LoopElement b0 = make(a.x ^ c.x, false), b1 = make(a.x ^ c.x, true);
    const bool ok0 = mul(a, b0) == c, ok1 = mul(a, b1) == c;
    if (ok0 == ok1) throw StructuralError("left division is not uniquely solvable at " + to_string(a));
    return ok0 ? b0 : b1;
}

LoopElement CodeLoop::right_div(const LoopElement& c, const LoopElement& b) const {
    require_same(c);
    const LoopElement a0 = make(b.x ^ c.x, false), a1 = make(b.x ^ c.x, true);
    const bool ok0 = mul(a0, b) == c, ok1 = mul(a1, b) == c;
    if (ok0 == ok1) throw StructuralError("right division is not uniquely solvable at " + to_string(b));
    return ok0 ? a0 : a1;
}

LoopElement CodeLoop::inv(const LoopElement& a) const { return mul(a, a) == one() ? a : mul(a, s_elem()); }

LoopElement CodeLoop::power(const LoopElement& a, std::int64_t k) const {
    require_same(a);
    // a^2 lies in {1, s}, so a has order dividing 4.
    const auto r = static_cast<int>(((k % 4) + 4) % 4);
    if (r == 0) return one();
    const LoopElement sq = mul(a, a);
    if (r == 1) return a;
    if (r == 2) return sq;
    return mul(sq, a);
}

LoopElement CodeLoop::commutator(const LoopElement& a, const LoopElement& b) const {
    return left_div(mul(b, a), mul(a, b));
}

LoopElement CodeLoop::associator(const LoopElement& a, const LoopElement& b, const LoopElement& c) const {
    return mul(inv(mul(mul(a, b), c)), mul(a, mul(b, c)));
}

std::string CodeLoop::xbits_string(const LoopElement& a) const {
    std::string out(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if ((a.x >> i) & 1u) out[i] = '1';
    return out;
}

std::string CodeLoop::to_string(const LoopElement& a) const {
    return "(" + xbits_string(a) + "," + (a.t ? "1" : "0") + ")";
}

// ---------------------------------------------------------------------------
// Tables

CayleyTable cayley_table(const CodeLoop& L, std::uint64_t limit) {
    if (!fits(L.log2_order(), limit) || L.log2_order() > 31)
        throw CapacityError("loop of order 2^" + std::to_string(L.log2_order()) + " exceeds the table limit");
    const std::uint64_t m = L.order();
    CayleyTable T;
    T.order = m;
    T.cells.resize(m * m);
    std::vector<LoopElement> el;
    el.reserve(m);
    for (std::uint64_t k = 0; k < m; ++k) {
        el.push_back(L.from_ordinal(k));
        T.xbits.push_back(L.xbits_string(el.back()));
        T.t.push_back(el.back().t);
    }
    for (std::uint64_t i = 0; i < m; ++i)
        for (std::uint64_t j = 0; j < m; ++j)
            T.cells[i * m + j] = static_cast<std::uint32_t>(L.ordinal(L.mul(el[i], el[j])));
    return T;
}

void write_cayley(std::ostream& out, const CayleyTable& T) {
    out << "order " << T.order << "\nlegend\n";
    for (std::uint64_t k = 0; k < T.order; ++k)
        out << k + 1 << ' ' << (T.xbits[k].empty() ? "-" : T.xbits[k]) << ' ' << (T.t[k] ? 1 : 0) << '\n';
    for (std::uint64_t i = 0; i < T.order; ++i) {
        for (std::uint64_t j = 0; j < T.order; ++j) {
            if (j) out << ' ';
            out << T.at(i, j) + 1;
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("failed to write Cayley table");
}

CayleyTable read_cayley(std::istream& in) {
    CayleyTable T;
    std::string line;
    std::size_t lineno = 0;
    auto next = [&](const char* what) {
        if (!std::getline(in, line)) throw ParseError(lineno + 1, std::string("missing ") + what);
        ++lineno;
        return std::istringstream(line);
    };
    {
        auto ls = next("order line");
        std::string key;
        if (!(ls >> key >> T.order) || key != "order" || T.order == 0 || T.order > kForcedTableLimit)
            throw ParseError(lineno, "expected 'order m'");
    }
    {
        auto ls = next("legend line");
        std::string key, rest;
        if (!(ls >> key) || key != "legend" || (ls >> rest)) throw ParseError(lineno, "expected 'legend'");
    }
    for (std::uint64_t k = 0; k < T.order; ++k) {
        auto ls = next("legend entry");
        std::uint64_t index = 0;
        std::string bits, extra;
        int t = -1;
        if (!(ls >> index >> bits >> t) || (ls >> extra) || index != k + 1 || (t != 0 && t != 1))
            throw ParseError(lineno, "expected '" + std::to_string(k + 1) + " xbits t'");
        if (bits == "-") bits.clear();
        if (bits.find_first_not_of("01") != std::string::npos) throw ParseError(lineno, "xbits must be 0/1");
        T.xbits.push_back(bits);
        T.t.push_back(t == 1);
    }
    T.cells.reserve(T.order * T.order);
    for (std::uint64_t i = 0; i < T.order; ++i) {
        auto ls = next("table row");
        for (std::uint64_t j = 0; j < T.order; ++j) {
            std::uint64_t v = 0;
            if (!(ls >> v) || v == 0 || v > T.order) throw ParseError(lineno, "row entries must be indices 1.." + std::to_string(T.order));
            T.cells.push_back(static_cast<std::uint32_t>(v - 1));
        }
        std::string extra;
        if (ls >> extra) throw ParseError(lineno, "row has more than " + std::to_string(T.order) + " entries");
    }
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") != std::string::npos) throw ParseError(lineno, "trailing content");
    }
    return T;
}

void export_cayley(const CodeLoop& L, std::ostream& out, std::uint64_t limit) { write_cayley(out, cayley_table(L, limit)); }

Report table_latin_check(const CayleyTable& T) {
    Report report;
    report.suite = "latin";
    const std::uint64_t m = T.order;
    auto& rows = report.check("rows-are-permutations");
    auto& cols = report.check("columns-are-permutations");
    std::vector<std::uint8_t> seen(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        bool ok = true;
        for (std::uint64_t j = 0; j < m; ++j) ok = !seen[T.at(i, j)]++ && ok;
        rows.record(ok, [&] { return "row " + std::to_string(i + 1); });
        std::fill(seen.begin(), seen.end(), 0);
        ok = true;
        for (std::uint64_t j = 0; j < m; ++j) ok = !seen[T.at(j, i)]++ && ok;
        cols.record(ok, [&] { return "column " + std::to_string(i + 1); });
    }
    return report;
}

Report table_moufang_check(const CayleyTable& T) {
    Report report;
    report.suite = "moufang";
    auto& c = report.check("moufang-identity");
    const std::uint64_t m = T.order;
    for (std::uint64_t x = 0; x < m; ++x)
        for (std::uint64_t y = 0; y < m; ++y) {
            const std::uint64_t xyx = T.at(T.at(x, y), x);
            for (std::uint64_t z = 0; z < m; ++z)
                c.record(T.at(x, T.at(y, T.at(x, z))) == T.at(xyx, z), [&] {
                    return "(" + std::to_string(x + 1) + ", " + std::to_string(y + 1) + ", " + std::to_string(z + 1) + ")";
                });
        }
    return report;
}

std::optional<std::array<std::uint64_t, 3>> table_associativity_witness(const CayleyTable& T) {
    const std::uint64_t m = T.order;
    for (std::uint64_t x = 0; x < m; ++x)
        for (std::uint64_t y = 0; y < m; ++y)
            for (std::uint64_t z = 0; z < m; ++z)
                if (T.at(T.at(x, y), z) != T.at(x, T.at(y, z))) return std::array<std::uint64_t, 3>{x, y, z};
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Permutations

Permutation compose(const Permutation& p, const Permutation& q) {
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
    return r;
}

Permutation inverse(const Permutation& p) {
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint32_t>(i);
    return r;
}

Permutation commutator(const Permutation& p, const Permutation& q) {
    return compose(compose(inverse(p), inverse(q)), compose(p, q));
}

namespace {

template <class F>
Permutation mult_perm(const CodeLoop& L, std::uint64_t limit, F&& image) {
    if (!fits(L.log2_order(), limit) || L.log2_order() > 31)
        throw CapacityError("loop of order 2^" + std::to_string(L.log2_order()) + " exceeds the permutation limit");
    Permutation p(L.order());
    for (std::uint64_t k = 0; k < p.size(); ++k) p[k] = static_cast<std::uint32_t>(L.ordinal(image(L.from_ordinal(k))));
    return p;
}

}  // namespace

Permutation right_mult_perm(const CodeLoop& L, const LoopElement& a, std::uint64_t limit) {
    return mult_perm(L, limit, [&](const LoopElement& b) { return L.mul(b, a); });
}

Permutation left_mult_perm(const CodeLoop& L, const LoopElement& a, std::uint64_t limit) {
    return mult_perm(L, limit, [&](const LoopElement& b) { return L.mul(a, b); });
}

// ---------------------------------------------------------------------------
// Loop checks

namespace {

std::vector<LoopElement> all_elements(const CodeLoop& L) {
    if (L.log2_order() > kEnumerationLog2) throw CapacityError("loop too large to enumerate");
    std::vector<LoopElement> el;
    el.reserve(L.order());
    for (std::uint64_t k = 0; k < L.order(); ++k) el.push_back(L.from_ordinal(k));
    return el;
}

void mark_sampled(Report& report, const VerifyMode& mode, const std::string& what) {
    report.mode = CheckMode::Sampled;
    report.seed = mode.sample.seed;
    report.notes.push_back(what + " sampled (" + std::to_string(mode.sample.count) + ")");
}

}  // namespace

Report is_moufang(const CodeLoop& L, const VerifyMode& mode) {
    const unsigned lg = L.log2_order();
    if (fits(3 * lg, mode.triple_limit) && fits(lg, kTableLimit)) return table_moufang_check(cayley_table(L));
    Report report;
    report.suite = "moufang";
    mark_sampled(report, mode, "triples");
    auto& c = report.check("moufang-identity");
    SplitMix64 rng(derive_seed(mode.sample.seed, "moufang"));
    for (std::uint64_t k = 0; k < mode.sample.count; ++k) {
        const auto x = L.random(rng), y = L.random(rng), z = L.random(rng);
        c.record(L.mul(x, L.mul(y, L.mul(x, z))) == L.mul(L.mul(L.mul(x, y), x), z),
                 [&] { return L.to_string(x) + " " + L.to_string(y) + " " + L.to_string(z); });
    }
    return report;
}

Report latin_check(const CodeLoop& L, const VerifyMode& mode) {
    const unsigned lg = L.log2_order();
    if (fits(2 * lg, mode.triple_limit) && fits(lg, kTableLimit)) return table_latin_check(cayley_table(L));
    Report report;
    report.suite = "latin";
    mark_sampled(report, mode, "pairs");
    auto& c = report.check("unique-division");
    SplitMix64 rng(derive_seed(mode.sample.seed, "latin"));
    for (std::uint64_t k = 0; k < mode.sample.count; ++k) {
        const auto a = L.random(rng), c_ = L.random(rng);
        bool ok = true;
        try {
            ok = L.mul(a, L.left_div(a, c_)) == c_ && L.mul(L.right_div(c_, a), a) == c_;
        } catch (const StructuralError&) {
            ok = false;
        }
        c.record(ok, [&] { return L.to_string(a) + " " + L.to_string(c_); });
    }
    return report;
}

bool is_associative(const CodeLoop& L, const VerifyMode& mode) {
    if (L.log2_order() <= 8) return !table_associativity_witness(cayley_table(L)).has_value();
    SplitMix64 rng(derive_seed(mode.sample.seed, "associative"));
    for (std::uint64_t k = 0; k < mode.sample.count; ++k) {
        const auto a = L.random(rng), b = L.random(rng), c = L.random(rng);
        if (L.associator(a, b, c) != L.one()) return false;
    }
    return true;
}

std::vector<LoopElement> center(const CodeLoop& L, const VerifyMode& mode) {
    const auto el = all_elements(L);
    const LoopElement e = L.one();
    std::vector<std::pair<LoopElement, LoopElement>> pairs;
    const bool exhaustive = fits(3 * L.log2_order(), mode.triple_limit);
    if (exhaustive) {
        for (const auto& x : el)
            for (const auto& y : el) pairs.emplace_back(x, y);
    } else {
        for (std::size_t i = 0; i < L.dim(); ++i)
            for (std::size_t j = 0; j < L.dim(); ++j) pairs.emplace_back(L.basis(i), L.basis(j));
        SplitMix64 rng(derive_seed(mode.sample.seed, "center"));
        for (std::uint64_t k = 0; k < mode.sample.count; ++k) pairs.emplace_back(L.random(rng), L.random(rng));
    }
    std::vector<LoopElement> out;
    for (const auto& z : el) {
        bool central = true;
        for (std::size_t k = 0; k < pairs.size() && central; ++k) {
            const auto& [x, y] = pairs[k];
            central = L.mul(x, z) == L.mul(z, x) && L.associator(x, y, z) == e && L.associator(x, z, y) == e &&
                      L.associator(z, x, y) == e;
        }
        if (central) out.push_back(z);
    }
    return out;
}

Report small_frattini_check(const CodeLoop& L, const VerifyMode& mode) {
    Report report;
    report.suite = "small-frattini";
    const unsigned lg = L.log2_order();
    const LoopElement e = L.one(), s = L.s_elem();
    auto& central = report.check("s-central");
    auto& squares = report.check("squares-in-<s>");
    auto& quotient = report.check("quotient-is-xor");
    auto flip = [](LoopElement a) {
        a.t = !a.t;
        return a;
    };
    auto pair_name = [&](const LoopElement& a, const LoopElement& b) { return L.to_string(a) + " " + L.to_string(b); };

    auto associates_with_s = [&](const LoopElement& a, const LoopElement& b) {
        central.record(L.mul(a, s) == L.mul(s, a) && L.associator(a, b, s) == e && L.associator(a, s, b) == e &&
                           L.associator(s, a, b) == e,
                       [&] { return pair_name(a, b); });
    };
    auto square_check = [&](const LoopElement& a) {
        const auto sq = L.mul(a, a);
        squares.record(sq == e || sq == s, [&] { return L.to_string(a); });
    };

    SplitMix64 rng(derive_seed(mode.sample.seed, "small-frattini"));
    if (lg <= kEnumerationLog2) {
        for (const auto& a : all_elements(L)) square_check(a);
    } else {
        for (std::uint64_t k = 0; k < mode.sample.count; ++k) square_check(L.random(rng));
    }

    // Exhaustively: s o a = a o s = flip(a) for all a, and flipping t in either factor
    // flips t in the product. Every associator involving s is then trivial, so the
    // pair enumeration only needs the t = 0 half of each factor.
    if (fits(2 * lg - 2, mode.triple_limit)) {
        const auto el = all_elements(L);
        for (const auto& a : el)
            central.record(L.mul(a, s) == flip(a) && L.mul(s, a) == flip(a), [&] { return L.to_string(a); });
        auto& linear = report.check("t-linear");
        for (const auto& a : el) {
            if (a.t) continue;
            for (const auto& b : el) {
                if (b.t) continue;
                const auto ab = L.mul(a, b);
                quotient.record(ab.x == (a.x ^ b.x), [&] { return pair_name(a, b); });
                linear.record(L.mul(flip(a), b) == flip(ab) && L.mul(a, flip(b)) == flip(ab),
                              [&] { return pair_name(a, b); });
            }
        }
        // the definition itself on small loops
        if (fits(2 * lg, std::uint64_t{1} << 16))
            for (const auto& a : el)
                for (const auto& b : el) associates_with_s(a, b);
    } else {
        mark_sampled(report, mode, "pairs");
        for (std::uint64_t k = 0; k < mode.sample.count; ++k) {
            const auto a = L.random(rng), b = L.random(rng);
            associates_with_s(a, b);
            quotient.record(L.mul(a, b).x == (a.x ^ b.x), [&] { return pair_name(a, b); });
        }
    }
    if (lg > kEnumerationLog2) mark_sampled(report, mode, "squares");
    return report;
}

CubicSpace recovered_constants(const CodeLoop& L) {
    const std::size_t n = L.dim();
    const LoopElement e = L.one(), s = L.s_elem();
    auto bit_of = [&](const LoopElement& v, const char* what) {
        if (v != e && v != s) throw StructuralError(std::string(what) + " of basis elements lies outside {1, s}: " + L.to_string(v));
        return v == s;
    };
    CubicSpace V(n);
    std::vector<LoopElement> x;
    for (std::size_t i = 0; i < n; ++i) x.push_back(L.basis(i));
    for (std::size_t i = 0; i < n; ++i) {
        V.set_sigma(i, bit_of(L.mul(x[i], x[i]), "square"));
        for (std::size_t j = i + 1; j < n; ++j) {
            V.set_kappa(i, j, bit_of(L.commutator(x[i], x[j]), "commutator"));
            for (std::size_t k = j + 1; k < n; ++k)
                V.set_alpha(i, j, k, bit_of(L.associator(x[i], x[j], x[k]), "associator"));
        }
    }
    return V;
}

Report structure_check(const CodeLoop& L, const VerifyMode& mode) {
    Report report;
    report.suite = "structure";
    const CubicSpace& V = L.group().space();
    const unsigned lg = L.log2_order();
    const LoopElement e = L.one(), s = L.s_elem();
    auto s_pow = [&](bool b) { return b ? s : e; };
    auto& sq = report.check("square-is-sigma");
    auto& cm = report.check("commutator-is-kappa");
    auto& as = report.check("associator-is-alpha");
    auto one = [&](const LoopElement& a) {
        sq.record(L.mul(a, a) == s_pow(V.sigma_of(a.x)), [&] { return L.to_string(a); });
    };
    auto two = [&](const LoopElement& a, const LoopElement& b) {
        cm.record(L.commutator(a, b) == s_pow(V.kappa_of(a.x, b.x)), [&] { return L.to_string(a) + " " + L.to_string(b); });
    };
    auto three = [&](const LoopElement& a, const LoopElement& b, const LoopElement& c) {
        as.record(L.associator(a, b, c) == s_pow(V.alpha_of(a.x, b.x, c.x)),
                  [&] { return L.to_string(a) + " " + L.to_string(b) + " " + L.to_string(c); });
    };
    SplitMix64 rng(derive_seed(mode.sample.seed, "structure"));
    if (fits(3 * lg, mode.triple_limit)) {
        const auto el = all_elements(L);
        for (const auto& a : el) {
            one(a);
            for (const auto& b : el) {
                two(a, b);
                for (const auto& c : el) three(a, b, c);
            }
        }
    } else {
        mark_sampled(report, mode, "triples");
        for (std::uint64_t k = 0; k < mode.sample.count; ++k) {
            const auto a = L.random(rng), b = L.random(rng), c = L.random(rng);
            one(a);
            two(a, b);
            three(a, b, c);
        }
    }
    return report;
}

namespace {

// Every value of the word w[i..j) under all bracketings.
std::vector<LoopElement> bracketings(const CodeLoop& L, const std::vector<LoopElement>& w, std::size_t i, std::size_t j) {
    if (j - i == 1) return {w[i]};
    std::vector<LoopElement> out;
    for (std::size_t k = i + 1; k < j; ++k)
        for (const auto& l : bracketings(L, w, i, k))
            for (const auto& r : bracketings(L, w, k, j)) out.push_back(L.mul(l, r));
    return out;
}

}  // namespace

Report diassociativity_check(const CodeLoop& L, const VerifyMode& mode) {
    Report report;
    report.suite = "diassociativity";
    auto& c = report.check("bracketings-agree");
    auto test = [&](const LoopElement& a, const LoopElement& b) {
        bool ok = true;
        for (std::size_t len = 3; len <= 4; ++len)
            for (unsigned pattern = 0; pattern < (1u << len); ++pattern) {
                std::vector<LoopElement> w;
                for (std::size_t p = 0; p < len; ++p) w.push_back((pattern >> p) & 1u ? b : a);
                const auto values = bracketings(L, w, 0, len);
                ok = ok && std::all_of(values.begin(), values.end(), [&](const LoopElement& v) { return v == values.front(); });
            }
        c.record(ok, [&] { return L.to_string(a) + " " + L.to_string(b); });
    };
    const unsigned lg = L.log2_order();
    if (fits(2 * lg, mode.element_limit)) {
        const auto el = all_elements(L);
        for (const auto& a : el)
            for (const auto& b : el) test(a, b);
    } else {
        mark_sampled(report, mode, "pairs");
        SplitMix64 rng(derive_seed(mode.sample.seed, "diassociativity"));
        for (std::uint64_t k = 0; k < mode.sample.count; ++k) {
            const auto a = L.random(rng), b = L.random(rng);
            test(a, b);
        }
    }
    return report;
}

namespace {

// A word in the multiplication maps R_a, L_a and their inverses, acting on the right.
struct MapLetter {
    bool left;
    LoopElement a;
    bool inverse;
};
using MapWord = std::vector<MapLetter>;

MapWord R(const LoopElement& a) { return {{false, a, false}}; }
MapWord Lm(const LoopElement& a) { return {{true, a, false}}; }

MapWord inverse_word(const MapWord& w) {
    MapWord out(w.rbegin(), w.rend());
    for (auto& l : out) l.inverse = !l.inverse;
    return out;
}

MapWord cat(std::initializer_list<MapWord> parts) {
    MapWord out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

MapWord comm(const MapWord& p, const MapWord& q) { return cat({inverse_word(p), inverse_word(q), p, q}); }

// Applies map letters either through materialized tables or through loop operations.
class MapEvaluator {
public:
    MapEvaluator(const CodeLoop& L, bool tables) : L_(L) {
        if (!tables) return;
        T_ = cayley_table(L_, kPermutationOrder);
        const std::uint64_t m = T_.order;
        right_inv_.assign(m * m, 0);
        left_inv_.assign(m * m, 0);
        for (std::uint64_t b = 0; b < m; ++b)
            for (std::uint64_t a = 0; a < m; ++a) {
                // b R_a = T(b, a); b L_a = T(a, b)
                right_inv_[a * m + T_.at(b, a)] = static_cast<std::uint32_t>(b);
                left_inv_[a * m + T_.at(a, b)] = static_cast<std::uint32_t>(b);
            }
    }

    [[nodiscard]] bool tabulated() const { return T_.order != 0; }

    [[nodiscard]] std::uint64_t apply(const MapWord& w, std::uint64_t p) const {
        const std::uint64_t m = T_.order;
        for (const auto& l : w) {
            const std::uint64_t a = L_.ordinal(l.a);
            if (!l.left) p = l.inverse ? right_inv_[a * m + p] : T_.at(p, a);
            else p = l.inverse ? left_inv_[a * m + p] : T_.at(a, p);
        }
        return p;
    }

    [[nodiscard]] LoopElement apply(const MapWord& w, LoopElement p) const {
        for (const auto& l : w) {
            if (!l.left) p = l.inverse ? L_.right_div(p, l.a) : L_.mul(p, l.a);
            else p = l.inverse ? L_.left_div(l.a, p) : L_.mul(l.a, p);
        }
        return p;
    }

private:
    const CodeLoop& L_;
    CayleyTable T_;
    std::vector<std::uint32_t> right_inv_, left_inv_;
};

}  // namespace

Report verify_mult_identities(const CodeLoop& L, const VerifyMode& mode) {
    Report report;
    report.suite = "mult-identities";
    auto& c1 = report.check("[Rx,Ry]=R[x,y]");
    auto& c2 = report.check("[Ry,Lz]=R(y^-1,z)");
    auto& c3 = report.check("[[Rx,Ly],Rz]=R(x,y,z)");
    const unsigned lg = L.log2_order();
    const bool tables = lg < 64 && L.order() <= kPermutationOrder;
    const MapEvaluator ev(L, tables);
    SplitMix64 rng(derive_seed(mode.sample.seed, "mult-identities"));

    // Compares two map words on every point when tabulated, else on a few sampled points.
    auto same = [&](const MapWord& lhs, const MapWord& rhs) {
        if (ev.tabulated()) {
            for (std::uint64_t p = 0; p < L.order(); ++p)
                if (ev.apply(lhs, p) != ev.apply(rhs, p)) return false;
            return true;
        }
        for (int k = 0; k < 4; ++k) {
            const auto p = L.random(rng);
            if (ev.apply(lhs, p) != ev.apply(rhs, p)) return false;
        }
        return true;
    };
    auto r_inner = [&](const LoopElement& y, const LoopElement& z) {
        return cat({R(y), R(z), inverse_word(R(L.mul(y, z)))});
    };
    auto pair_ids = [&](const LoopElement& x, const LoopElement& y) {
        const auto w = [&] { return L.to_string(x) + " " + L.to_string(y); };
        c1.record(same(comm(R(x), R(y)), R(L.commutator(x, y))), w);
        c2.record(same(comm(R(x), Lm(y)), r_inner(L.inv(x), y)), w);
    };
    auto triple_id = [&](const LoopElement& x, const LoopElement& y, const LoopElement& z) {
        c3.record(same(comm(comm(R(x), Lm(y)), R(z)), R(L.associator(x, y, z))),
                  [&] { return L.to_string(x) + " " + L.to_string(y) + " " + L.to_string(z); });
    };

    if (tables && fits(4 * lg, mode.triple_limit)) {
        const auto el = all_elements(L);
        for (const auto& x : el)
            for (const auto& y : el) {
                pair_ids(x, y);
                for (const auto& z : el) triple_id(x, y, z);
            }
    } else {
        mark_sampled(report, mode, "triples");
        if (!tables) report.notes.push_back("identities compared at 4 sampled points per triple");
        for (std::uint64_t k = 0; k < mode.sample.count; ++k) {
            const auto x = L.random(rng), y = L.random(rng), z = L.random(rng);
            pair_ids(x, y);
            triple_id(x, y, z);
        }
    }
    return report;
}

Report mlt_bound_check(const CodeLoop& L) {
    if (L.dim() > 3) throw CapacityError("multiplication group closure needs n <= 3");
    Report report;
    report.suite = "mlt-bound";
    const auto el = all_elements(L);
    std::vector<Permutation> gens;
    for (const auto& a : el) {
        gens.push_back(right_mult_perm(L, a));
        gens.push_back(left_mult_perm(L, a));
    }
    std::set<Permutation> group;
    std::vector<Permutation> frontier;
    Permutation id(L.order());
    for (std::uint32_t i = 0; i < id.size(); ++i) id[i] = i;
    group.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& p : frontier)
            for (const auto& g : gens) {
                auto q = compose(p, g);
                if (group.insert(q).second) next.push_back(std::move(q));
            }
        frontier = std::move(next);
    }
    const std::uint64_t mlt = group.size();
    const std::uint64_t core = core_N(L.group()).size();
    const std::uint64_t quotient = (std::uint64_t{1} << L.group().log2_order()) / core;
    report.check("order-divides-|G/N|").record(quotient % mlt == 0, [&] {
        return "|Mlt| = " + std::to_string(mlt) + ", |G/N| = " + std::to_string(quotient);
    });
    report.notes.push_back("|Mlt(L)| = " + std::to_string(mlt) + ", |G| = 2^" + std::to_string(L.group().log2_order()) +
                           ", |N| = " + std::to_string(core));

    const Permutation rs = right_mult_perm(L, L.s_elem()), ls = left_mult_perm(L, L.s_elem());
    report.check("R_s=L_s").record(rs == ls);
    bool involution = compose(rs, rs) == id;
    for (std::uint32_t i = 0; i < rs.size(); ++i) involution = involution && rs[i] != i;
    report.check("R_s-fixed-point-free-involution").record(involution);
    auto& central = report.check("R_s-central");
    for (const auto& g : gens) central.record(compose(rs, g) == compose(g, rs));
    return report;
}

Report dual_construction_check(const CodeLoop& L) {
    if (L.dim() > 3) throw CapacityError("dual construction check needs n <= 3");
    Report report;
    report.suite = "dual-construction";
    const TrialityGroup& G = L.group();
    const Holomorph H(G);
    const auto el = all_elements(L);

    // sigma^r = ([r, sigma], sigma) determines the coset of r.
    std::map<GroupElement, LoopElement> back;
    std::vector<HolElement> inv;
    for (const auto& a : el) {
        inv.push_back(H.sigma_conjugate(L.lift(a)));
        if (!back.emplace(inv.back().g, a).second) throw StructuralError("two cosets give the same involution");
    }
    const HolElement rho = H.lift(TrialityMap::rho()), rho_inv = H.lift(TrialityMap::rho().inverse()),
                     sigma = H.lift(TrialityMap::sigma());
    auto decode = [&](const HolElement& h) -> std::optional<LoopElement> {
        if (h.s != TrialityMap::sigma()) return std::nullopt;
        const auto it = back.find(h.g);
        if (it == back.end()) return std::nullopt;
        return it->second;
    };
    auto& c1 = report.check("beta^(rho alpha rho sigma)");
    auto& c2 = report.check("alpha^(rho^-1 beta rho^-1 sigma)");
    for (std::size_t i = 0; i < el.size(); ++i)
        for (std::size_t j = 0; j < el.size(); ++j) {
            const HolElement& alpha = inv[i];
            const HolElement& beta = inv[j];
            const LoopElement expected = L.mul(el[i], el[j]);
            const auto w = [&] { return L.to_string(el[i]) + " " + L.to_string(el[j]); };
            const auto first = decode(H.conj(beta, H.mul(H.mul(H.mul(rho, alpha), rho), sigma)));
            const auto second = decode(H.conj(alpha, H.mul(H.mul(H.mul(rho_inv, beta), rho_inv), sigma)));
            c1.record(first && *first == expected, w);
            c2.record(second && *second == expected, w);
        }
    return report;
}

}  // namespace codeloop
