// Verification suites for the triality group.

#include "codeloop/errors.hpp"
#include "codeloop/triality.hpp"

#include <algorithm>

namespace codeloop {

namespace {

using Mask = std::uint64_t;
using K = Generator::Kind;

Letter letter(K kind, std::size_t i = 0) { return {{kind, static_cast<std::uint8_t>(i)}}; }

bool fits(unsigned log2_count, std::uint64_t limit) { return log2_count < 64 && (std::uint64_t{1} << log2_count) <= limit; }

/// Product of the images of an inverse-free word under P.
GroupElement eval_with(const TrialityGroup& G, const ProductFn& P, const Word& w, const std::vector<GroupElement>& images,
                       const std::vector<Generator>& gens) {
    GroupElement acc = G.identity();
    for (const Letter& l : w) {
        const auto it = std::find(gens.begin(), gens.end(), l.gen);
        acc = P(acc, images[static_cast<std::size_t>(it - gens.begin())]);
    }
    return acc;
}

std::string word_string(const Word& w) {
    std::string s;
    for (const Letter& l : w) {
        if (!s.empty()) s += ' ';
        switch (l.gen.kind) {
        case K::G:
            s += "g" + std::to_string(l.gen.index + 1);
            break;
        case K::F:
            s += "f" + std::to_string(l.gen.index + 1);
            break;
        case K::H:
            s += "h" + std::to_string(l.gen.index + 1);
            break;
        case K::U:
            s += "u";
            break;
        case K::V:
            s += "v";
            break;
        }
        if (l.inverse) s += "^-1";
    }
    return s.empty() ? "1" : s;
}

}  // namespace

std::vector<std::pair<Word, Word>> defining_relations(const TrialityGroup& G) {
    // [a, b] = c is written a b = b a c so that no inverses are needed.
    const CubicSpace& V = G.space();
    const std::size_t n = G.dim();
    std::vector<std::pair<Word, Word>> rel;
    auto power = [](Word w, bool e, Letter l) {
        if (e) w.push_back(l);
        return w;
    };
    const Letter u = letter(K::U), v = letter(K::V);
    for (std::size_t i = 0; i < n; ++i) {
        const Letter gi = letter(K::G, i), fi = letter(K::F, i), hi = letter(K::H, i);
        rel.push_back({{gi, gi}, power({}, V.sigma(i), u)});
        rel.push_back({{fi, fi}, power({}, V.sigma(i), v)});
        rel.push_back({{hi, hi}, {}});
        for (std::size_t j = 0; j < n; ++j) {
            const Letter gj = letter(K::G, j), fj = letter(K::F, j), hj = letter(K::H, j);
            if (i < j) {
                rel.push_back({{gi, gj}, power({gj, gi}, V.kappa(i, j), u)});
                rel.push_back({{fi, fj}, power({fj, fi}, V.kappa(i, j), v)});
                rel.push_back({{hi, hj}, {hj, hi}});
            }
            Word rhs{fj, gi};
            if (V.kappa(i, j)) {
                rhs.push_back(u);
                rhs.push_back(v);
            }
            for (std::size_t k = 0; k < n; ++k)
                if (V.alpha(i, j, k)) rhs.push_back(letter(K::H, k));
            rel.push_back({{gi, fj}, rhs});
            rel.push_back({{gi, hj}, power({hj, gi}, i == j, u)});
            rel.push_back({{fi, hj}, power({hj, fi}, i == j, v)});
        }
        for (const Letter x : {gi, fi, hi}) {
            rel.push_back({{x, u}, {u, x}});
            rel.push_back({{x, v}, {v, x}});
        }
    }
    rel.push_back({{u, u}, {}});
    rel.push_back({{v, v}, {}});
    rel.push_back({{u, v}, {v, u}});
    return rel;
}

Report verify_presentation(const TrialityGroup& G, const VerifyMode& mode, const ProductFn& product) {
    const ProductFn P = product ? product : [&G](const GroupElement& a, const GroupElement& b) { return G.mul(a, b); };
    Report report;
    report.suite = "presentation";
    const auto gens = G.generators();
    const auto relations = defining_relations(G);

    struct Assignment {
        const char* name;
        TrialityMap map;
    };
    for (const Assignment as : {Assignment{"relations", TrialityMap::identity()},
                                Assignment{"relations-under-sigma", TrialityMap::sigma()},
                                Assignment{"relations-under-rho", TrialityMap::rho()}}) {
        auto& c = report.check(as.name);
        const auto& images = G.generator_images(as.map);
        for (const auto& [lhs, rhs] : relations) {
            const GroupElement l = eval_with(G, P, lhs, images, gens), r = eval_with(G, P, rhs, images, gens);
            c.record(l == r, [&] { return word_string(lhs) + " = " + word_string(rhs); });
        }
    }

    auto& assoc = report.check("associativity");
    auto triple_witness = [&](const GroupElement& a, const GroupElement& b, const GroupElement& c) {
        return "(" + G.to_string(a) + ", " + G.to_string(b) + ", " + G.to_string(c) + ")";
    };
    const unsigned lg = G.log2_order();
    const bool exhaustive_triples = lg <= 20 && fits(3 * lg, mode.triple_limit);
    if (exhaustive_triples) {
        const std::uint64_t order = std::uint64_t{1} << lg;
        std::vector<GroupElement> all;
        all.reserve(order);
        for (std::uint64_t k = 0; k < order; ++k) all.push_back(G.element_at(k));
        for (const auto& a : all)
            for (const auto& b : all) {
                const GroupElement ab = P(a, b);
                for (const auto& c : all)
                    assoc.record(P(ab, c) == P(a, P(b, c)), [&] { return triple_witness(a, b, c); });
            }
    } else {
        SplitMix64 rng(derive_seed(mode.sample.seed, "presentation/associativity"));
        for (std::uint64_t s = 0; s < mode.sample.count; ++s) {
            const auto a = G.random(rng), b = G.random(rng), c = G.random(rng);
            assoc.record(P(P(a, b), c) == P(a, P(b, c)), [&] { return triple_witness(a, b, c); });
        }
        report.notes.push_back("associativity sampled on " + std::to_string(mode.sample.count) + " triples");
    }

    auto& s3 = report.check("s3-relations");
    const TrialityMap sg = TrialityMap::sigma(), rh = TrialityMap::rho();
    auto laws = [&](const GroupElement& a) {
        const bool sigma2 = G.apply(sg, G.apply(sg, a)) == a;
        const bool rho3 = G.apply(rh, G.apply(rh, G.apply(rh, a))) == a;
        const GroupElement sr = G.apply(sg, G.apply(rh, a));
        const bool sigmarho2 = G.apply(sg, G.apply(rh, sr)) == a;
        s3.record(sigma2 && rho3 && sigmarho2, [&] { return G.to_string(a); });
    };
    if (fits(lg, mode.element_limit)) {
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << lg); ++k) laws(G.element_at(k));
    } else {
        for (const auto& gen : gens) laws(G.generator(gen));
        report.notes.push_back("S3 relations checked on generators");
    }
    report.mode = exhaustive_triples ? CheckMode::Exhaustive : CheckMode::Sampled;
    if (!exhaustive_triples) report.seed = mode.sample.seed;
    return report;
}

Report verify_triality(const TrialityGroup& G, const VerifyMode& mode) {
    Report report;
    report.suite = "triality";
    auto& c = report.check("triality-identity");
    const unsigned lg = G.log2_order();
    if (fits(lg, mode.element_limit)) {
        report.mode = CheckMode::Exhaustive;
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << lg); ++k) {
            const auto a = G.element_at(k);
            c.record(G.check_triality(a), [&] { return G.to_string(a); });
        }
    } else {
        report.mode = CheckMode::Sampled;
        report.seed = mode.sample.seed;
        SplitMix64 rng(derive_seed(mode.sample.seed, "triality"));
        for (std::uint64_t s = 0; s < mode.sample.count; ++s) {
            const auto a = G.random(rng);
            c.record(G.check_triality(a), [&] { return G.to_string(a); });
        }
    }
    return report;
}

Report parker_check(const TrialityGroup& G, const VerifyMode& mode) {
    Report report;
    report.suite = "parker";
    auto& c = report.check("tau-product-order-3");
    const auto gens = G.generators();

    // tau = sigma_i^a acts as x -> a^-1 sigma_i(a x a^-1) a.
    struct Conjugate {
        TrialityMap map;
        GroupElement a, a_inv;
    };
    auto act = [&](const Conjugate& t, const GroupElement& x) {
        return G.mul(G.mul(t.a_inv, G.apply(t.map, G.mul(G.mul(t.a, x), t.a_inv))), t.a);
    };
    auto check_pair = [&](int i, int j, const GroupElement& a, const GroupElement& b) {
        const Conjugate ti{TrialityMap::involution(i), a, G.inv(a)};
        const Conjugate tj{TrialityMap::involution(j), b, G.inv(b)};
        bool ok = true;
        for (const auto& gen : gens) {
            const GroupElement x = G.generator(gen);
            GroupElement y = x;
            for (int k = 0; k < 3; ++k) y = act(tj, act(ti, y));
            ok = ok && y == x;
        }
        c.record(ok, [&] {
            return "i=" + std::to_string(i) + " j=" + std::to_string(j) + " a=" + G.to_string(a) + " b=" + G.to_string(b);
        });
    };

    const unsigned lg = G.log2_order();
    if (fits(2 * lg, mode.element_limit)) {
        report.mode = CheckMode::Exhaustive;
        const std::uint64_t order = std::uint64_t{1} << lg;
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                if (i == j) continue;
                for (std::uint64_t ka = 0; ka < order; ++ka)
                    for (std::uint64_t kb = 0; kb < order; ++kb) check_pair(i, j, G.element_at(ka), G.element_at(kb));
            }
    } else {
        report.mode = CheckMode::Sampled;
        report.seed = mode.sample.seed;
        SplitMix64 rng(derive_seed(mode.sample.seed, "parker"));
        for (std::uint64_t s = 0; s < mode.sample.count; ++s) {
            const int i = 1 + static_cast<int>(rng.below(3));
            const int j = 1 + static_cast<int>((static_cast<std::uint64_t>(i) + rng.below(2)) % 3);
            const auto a = G.random(rng), b = G.random(rng);
            check_pair(i, j, a, b);
        }
    }
    report.notes.push_back("pairs with i = j are outside the criterion and skipped");
    return report;
}

Report index_check(const TrialityGroup& G, const VerifyMode& mode) {
    Report report;
    report.suite = "index";
    report.mode = CheckMode::Closed;
    const std::size_t n = G.dim();
    const unsigned lg = G.log2_order();

    // Coordinate characterization: H1: y = 0, t2 = 0; H2: x = 0, t1 = 0;
    // H3: x = y with t1 + t2 fixed by x. Each pairwise intersection is <h_1..h_n>.
    const unsigned lg_h = static_cast<unsigned>(2 * n + 1);
    const unsigned lg_meet = static_cast<unsigned>(n);
    auto& idx = report.check("index-identity");
    idx.record(lg - lg_h == lg_h - lg_meet && lg - lg_h == n + 1, [&] {
        return "|G:H3| = 2^" + std::to_string(lg - lg_h) + ", |H2:H2nH3| = 2^" + std::to_string(lg_h - lg_meet);
    });

    // Images of subgroup generators: H1^sigma = H2, H1^rho = H2, H2^rho = H3.
    auto& images = report.check("subgroup-images");
    std::vector<GroupElement> h1_gens, h2_gens;
    for (std::size_t i = 0; i < n; ++i) {
        h1_gens.push_back(G.g(i));
        h1_gens.push_back(G.h(i));
        h2_gens.push_back(G.f(i));
        h2_gens.push_back(G.h(i));
    }
    h1_gens.push_back(G.u());
    h2_gens.push_back(G.v());
    for (const auto& a : h1_gens) {
        images.record(G.in_subgroup(G.apply(TrialityMap::sigma(), a), Subgroup::H2), [&] { return G.to_string(a); });
        images.record(G.in_subgroup(G.apply(TrialityMap::rho(), a), Subgroup::H2), [&] { return G.to_string(a); });
    }
    for (const auto& a : h2_gens)
        images.record(G.in_subgroup(G.apply(TrialityMap::rho(), a), Subgroup::H3), [&] { return G.to_string(a); });

    constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 20;
    if (fits(lg, std::max(mode.element_limit, kEnumerationLimit))) {
        report.mode = CheckMode::Exhaustive;
        std::uint64_t count[3] = {0, 0, 0}, meet[3] = {0, 0, 0};
        bool meet_is_h = true;
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << lg); ++k) {
            const auto a = G.element_at(k);
            const bool in[3] = {G.in_subgroup(a, Subgroup::H1), G.in_subgroup(a, Subgroup::H2),
                                G.in_subgroup(a, Subgroup::H3)};
            for (int s = 0; s < 3; ++s) count[s] += in[s];
            const bool m12 = in[0] && in[1], m13 = in[0] && in[2], m23 = in[1] && in[2];
            meet[0] += m12;
            meet[1] += m13;
            meet[2] += m23;
            const bool pure_h = a.x == 0 && a.y == 0 && !a.t1 && !a.t2;
            if ((m12 || m13 || m23) && !(m12 && m13 && m23 && pure_h)) meet_is_h = false;
        }
        auto& orders = report.check("subgroup-orders");
        for (int s = 0; s < 3; ++s) {
            orders.record(count[s] == (std::uint64_t{1} << lg_h),
                          [&] { return "H" + std::to_string(s + 1) + " has " + std::to_string(count[s]); });
            orders.record(meet[s] == (std::uint64_t{1} << lg_meet),
                          [&] { return "intersection " + std::to_string(s) + " has " + std::to_string(meet[s]); });
        }
        report.check("intersection-is-h").record(meet_is_h, [] { return std::string("intersection differs from <h_i>"); });
    } else {
        report.notes.push_back("orders from the coordinate characterization only");
    }
    return report;
}

Report centralizer_check(const TrialityGroup& G, const VerifyMode& mode) {
    Report report;
    report.suite = "centralizer";
    auto& c = report.check("fixed-points-are-H3");
    const unsigned lg = G.log2_order();
    auto test = [&](const GroupElement& a) {
        const bool fixed = G.apply(TrialityMap::sigma(), a) == a;
        c.record(fixed == G.in_subgroup(a, Subgroup::H3), [&] { return G.to_string(a); });
        return fixed;
    };
    if (fits(lg, mode.element_limit)) {
        report.mode = CheckMode::Exhaustive;
        std::uint64_t fixed = 0;
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << lg); ++k) fixed += test(G.element_at(k));
        report.check("fixed-point-count").record(fixed == (std::uint64_t{1} << (2 * G.dim() + 1)),
                                                 [&] { return std::to_string(fixed) + " fixed points"; });
    } else {
        report.mode = CheckMode::Sampled;
        report.seed = mode.sample.seed;
        SplitMix64 rng(derive_seed(mode.sample.seed, "centralizer"));
        for (std::uint64_t s = 0; s < mode.sample.count; ++s) {
            test(G.random(rng));
            // A random element of H3, so the "fixed" direction is exercised too.
            const auto r = G.random(rng);
            test(G.element(r.x, r.x, r.z, r.t1, r.t1 ^ G.cubic_term(r.x)));
        }
    }
    return report;
}

std::vector<GroupElement> core_N(const TrialityGroup& G, std::uint64_t limit) {
    const unsigned lg = G.log2_order();
    const unsigned lg_h3 = static_cast<unsigned>(2 * G.dim() + 1);
    if (!fits(lg + lg_h3, limit)) throw CapacityError("core_N: |H3| * |G| exceeds the enumeration limit");
    std::vector<GroupElement> all, inverses, h3;
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << lg); ++k) {
        const auto a = G.element_at(k);
        all.push_back(a);
        inverses.push_back(G.inv(a));
        if (G.in_subgroup(a, Subgroup::H3)) h3.push_back(a);
    }
    std::vector<GroupElement> core;
    for (const auto& hm : h3) {
        bool inside = true;
        for (std::size_t k = 0; k < all.size() && inside; ++k)
            inside = G.in_subgroup(G.mul(G.mul(inverses[k], hm), all[k]), Subgroup::H3);
        if (inside) core.push_back(hm);
    }
    return core;
}

}  // namespace codeloop
