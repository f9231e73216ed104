#include "codeloop/triality.hpp"

#include "codeloop/errors.hpp"

#include <atomic>
#include <bit>
#include <sstream>

namespace codeloop {

namespace {

using Mask = std::uint64_t;

constexpr Mask above(std::size_t i) noexcept { return i >= 63 ? 0 : ~Mask{0} << (i + 1); }
constexpr bool bit(Mask m, std::size_t i) noexcept { return (m >> i) & 1u; }

template <class F>
void for_each_bit(Mask m, F&& f) {
    for (; m; m &= m - 1) f(static_cast<std::size_t>(std::countr_zero(m)));
}

std::atomic<std::uint32_t> next_group_id{1};

std::size_t map_slot(TrialityMap m) { return m.s * 3u + m.r; }

}  // namespace

// ---------------------------------------------------------------------------
// S3

TrialityMap TrialityMap::involution(int which) {
    switch (which) {
    case 1:
        return sigma();
    case 2:
        return rho().inverse() * sigma() * rho();
    case 3:
        return rho() * sigma() * rho().inverse();
    default:
        throw std::out_of_range("involution index must be 1, 2 or 3");
    }
}

TrialityMap TrialityMap::inverse() const {
    // (sigma rho^r)^-1 = sigma rho^r since it is an involution.
    if (s) return *this;
    return {0, static_cast<std::uint8_t>((3 - r) % 3)};
}

TrialityMap operator*(TrialityMap a, TrialityMap b) {
    // rho^r o sigma = sigma o rho^-r
    const int r = a.r;
    const int moved = b.s ? (3 - r) % 3 : r;
    return {static_cast<std::uint8_t>((a.s + b.s) % 2), static_cast<std::uint8_t>((moved + b.r) % 3)};
}

std::string to_string(TrialityMap m) {
    std::string out;
    if (m.s) out += "sigma";
    for (int k = 0; k < m.r; ++k) out += out.empty() ? "rho" : "*rho";
    return out.empty() ? "id" : out;
}

// ---------------------------------------------------------------------------
// Group

TrialityGroup::TrialityGroup(CubicSpace space)
    : space_(std::move(space)), n_(space_.dim()), id_(next_group_id.fetch_add(1)) {
    if (n_ > 64) throw DimensionError("triality group needs n <= 64");
    full_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
    sigma_ = space_.sigma_mask();
    kappa_.resize(n_);
    alpha_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
        kappa_[i] = space_.kappa_row(i);
        for (std::size_t j = 0; j < n_; ++j) alpha_[i * n_ + j] = space_.alpha_row(i, j);
    }

    const auto gens = generators();
    std::vector<GroupElement> rho_img, sigma_img;
    for (const auto& gen : gens) {
        switch (gen.kind) {
        case Generator::Kind::G:
            rho_img.push_back(f(gen.index));
            sigma_img.push_back(f(gen.index));
            break;
        case Generator::Kind::F:
            rho_img.push_back(inv(mul(g(gen.index), f(gen.index))));
            sigma_img.push_back(g(gen.index));
            break;
        case Generator::Kind::H:
            rho_img.push_back(h(gen.index));
            sigma_img.push_back(h(gen.index));
            break;
        case Generator::Kind::U:
            rho_img.push_back(v());
            sigma_img.push_back(v());
            break;
        case Generator::Kind::V:
            rho_img.push_back(mul(u(), v()));
            sigma_img.push_back(u());
            break;
        }
    }
    images_.assign(6, {});
    images_[map_slot(TrialityMap::identity())] = [&] {
        std::vector<GroupElement> id;
        for (const auto& gen : gens) id.push_back(generator(gen));
        return id;
    }();
    images_[map_slot(TrialityMap::rho())] = rho_img;
    images_[map_slot(TrialityMap::sigma())] = sigma_img;
    // rho^2 = rho o rho, sigma o rho^r
    images_[map_slot({0, 2})].clear();
    for (const auto& im : rho_img) images_[map_slot({0, 2})].push_back(apply(TrialityMap::rho(), im));
    for (std::uint8_t r = 1; r < 3; ++r) {
        auto& out = images_[map_slot({1, r})];
        for (const auto& im : images_[map_slot({0, r})]) out.push_back(apply(TrialityMap::sigma(), im));
    }
}

void TrialityGroup::require_same(const GroupElement& a) const {
    if (a.group != id_) throw ContextError("group element belongs to a different triality group");
}

GroupElement TrialityGroup::g(std::size_t i) const {
    if (i >= n_) throw DimensionError("generator index out of range");
    return make(Mask{1} << i, 0, 0, false, false);
}

GroupElement TrialityGroup::f(std::size_t i) const {
    if (i >= n_) throw DimensionError("generator index out of range");
    return make(0, Mask{1} << i, 0, false, false);
}

GroupElement TrialityGroup::h(std::size_t i) const {
    if (i >= n_) throw DimensionError("generator index out of range");
    return make(0, 0, Mask{1} << i, false, false);
}

GroupElement TrialityGroup::generator(Generator gen) const {
    switch (gen.kind) {
    case Generator::Kind::G:
        return g(gen.index);
    case Generator::Kind::F:
        return f(gen.index);
    case Generator::Kind::H:
        return h(gen.index);
    case Generator::Kind::U:
        return u();
    case Generator::Kind::V:
        return v();
    }
    return identity();
}

std::vector<Generator> TrialityGroup::generators() const {
    std::vector<Generator> out;
    out.reserve(3 * n_ + 2);
    for (auto kind : {Generator::Kind::G, Generator::Kind::F, Generator::Kind::H})
        for (std::size_t i = 0; i < n_; ++i) out.push_back({kind, static_cast<std::uint8_t>(i)});
    out.push_back({Generator::Kind::U});
    out.push_back({Generator::Kind::V});
    return out;
}

std::size_t TrialityGroup::ordinal(Generator gen) const noexcept {
    switch (gen.kind) {
    case Generator::Kind::G:
        return gen.index;
    case Generator::Kind::F:
        return n_ + gen.index;
    case Generator::Kind::H:
        return 2 * n_ + gen.index;
    case Generator::Kind::U:
        return 3 * n_;
    case Generator::Kind::V:
        return 3 * n_ + 1;
    }
    return 0;
}

GroupElement TrialityGroup::element(Mask x, Mask y, Mask z, bool t1, bool t2) const {
    if ((x | y | z) & ~full_) throw DimensionError("exponent vector has bits beyond n");
    return make(x, y, z, t1, t2);
}

GroupElement TrialityGroup::element_at(std::uint64_t k) const {
    if (log2_order() >= 64) throw CapacityError("group too large to index");
    return make(k & full_, (k >> n_) & full_, (k >> (2 * n_)) & full_, bit(k, 3 * n_), bit(k, 3 * n_ + 1));
}

GroupElement TrialityGroup::random(SplitMix64& rng) const {
    const auto nb = static_cast<unsigned>(n_);
    const Mask x = rng.bits(nb), y = rng.bits(nb), z = rng.bits(nb);
    const auto t = rng();
    return make(x, y, z, t & 1u, (t >> 1) & 1u);
}

GroupElement TrialityGroup::mul(const GroupElement& a, const GroupElement& b) const {
    require_same(a);
    require_same(b);
    const Mask x = a.x, y = a.y, z = a.z;
    const Mask xb = b.x, yb = b.y, zb = b.z;

    // g^x f^y h^z . g^xb f^yb h^zb: h^z passes g^xb f^yb (central commutators),
    // f^y passes g^xb leaving h^W with W = alpha(xb, y, .), then h^W passes f^yb.
    Mask W = 0;
    bool cu = false;  // sum_{i<i' in xb} alpha(e_i, y, e_i')
    bool cv = false;  // sum_{j<l in y} alpha(xb, e_j, e_l)
    bool kl = false;  // kappa*(xb, y)
    bool gg = parity(x & xb & sigma_);
    for_each_bit(xb, [&](std::size_t i) {
        Mask Mi = 0;
        for_each_bit(y, [&](std::size_t j) {
            const Mask r = alpha_[i * n_ + j];
            Mi ^= r;
            cv ^= parity(r & y & above(j));
        });
        W ^= Mi;
        cu ^= parity(Mi & xb & above(i));
        kl ^= parity(kappa_[i] & y);
        gg ^= parity(kappa_[i] & x & above(i));
    });
    bool ff = parity(y & yb & sigma_);
    for_each_bit(yb, [&](std::size_t i) { ff ^= parity(kappa_[i] & y & above(i)); });

    const bool t1 = a.t1 ^ b.t1 ^ parity(z & xb) ^ kl ^ cu ^ gg;
    const bool t2 = a.t2 ^ b.t2 ^ parity(z & yb) ^ kl ^ cv ^ parity(W & yb) ^ ff;
    return make(x ^ xb, y ^ yb, z ^ zb ^ W, t1, t2);
}

GroupElement TrialityGroup::inv(const GroupElement& a) const {
    require_same(a);
    // a * (x, y, z + W, 0, 0) is central; W depends only on (a.x, a.y).
    const GroupElement probe = mul(a, make(a.x, a.y, a.z, false, false));
    const GroupElement b = make(a.x, a.y, a.z ^ probe.z, false, false);
    const GroupElement c = mul(a, b);
    return make(b.x, b.y, b.z, c.t1, c.t2);
}

GroupElement TrialityGroup::commutator(const GroupElement& a, const GroupElement& b) const {
    return mul(mul(inv(a), inv(b)), mul(a, b));
}

GroupElement TrialityGroup::conj(const GroupElement& a, const GroupElement& b) const { return mul(mul(inv(b), a), b); }

Word TrialityGroup::word_of(const GroupElement& a) const {
    require_same(a);
    Word w;
    for_each_bit(a.x, [&](std::size_t i) { w.push_back({{Generator::Kind::G, static_cast<std::uint8_t>(i)}}); });
    for_each_bit(a.y, [&](std::size_t i) { w.push_back({{Generator::Kind::F, static_cast<std::uint8_t>(i)}}); });
    for_each_bit(a.z, [&](std::size_t i) { w.push_back({{Generator::Kind::H, static_cast<std::uint8_t>(i)}}); });
    if (a.t1) w.push_back({{Generator::Kind::U}});
    if (a.t2) w.push_back({{Generator::Kind::V}});
    return w;
}

void TrialityGroup::append_square(Word& out, Generator gen) const {
    if (gen.kind == Generator::Kind::G && bit(sigma_, gen.index)) out.push_back({{Generator::Kind::U}});
    if (gen.kind == Generator::Kind::F && bit(sigma_, gen.index)) out.push_back({{Generator::Kind::V}});
}

void TrialityGroup::append_commutator(Word& out, Generator later, Generator earlier) const {
    using K = Generator::Kind;
    const std::size_t i = earlier.index, j = later.index;
    const Generator U{K::U}, V{K::V};
    if (later.kind == K::G && earlier.kind == K::G) {
        // [g_j, g_i] = [g_i, g_j]^-1 = u^kappa_ij
        if (space_.kappa(i, j)) out.push_back({U});
    } else if (later.kind == K::F && earlier.kind == K::G) {
        // [f_j, g_i] = [g_i, f_j]^-1; the factors are commuting involutions.
        for (std::size_t k = 0; k < n_; ++k)
            if (space_.alpha(i, j, k)) out.push_back({{K::H, static_cast<std::uint8_t>(k)}});
        if (space_.kappa(i, j)) {
            out.push_back({U});
            out.push_back({V});
        }
    } else if (later.kind == K::F && earlier.kind == K::F) {
        if (space_.kappa(i, j)) out.push_back({V});
    } else if (later.kind == K::H && earlier.kind == K::G) {
        if (i == j) out.push_back({U});
    } else if (later.kind == K::H && earlier.kind == K::F) {
        if (i == j) out.push_back({V});
    }
}

GroupElement TrialityGroup::collect(const Word& w) const {
    Word letters;
    letters.reserve(w.size() * 2);
    for (const Letter& l : w) {
        letters.push_back({l.gen});
        // g_i^-1 = g_i u^sigma_i, f_i^-1 = f_i v^sigma_i, everything else is an involution.
        if (l.inverse) append_square(letters, l.gen);
    }

    std::size_t p = 0;
    Word tail;
    while (p + 1 < letters.size()) {
        const Generator a = letters[p].gen, b = letters[p + 1].gen;
        const std::size_t oa = ordinal(a), ob = ordinal(b);
        if (oa < ob) {
            ++p;
            continue;
        }
        tail.clear();
        if (oa == ob) {
            append_square(tail, a);
        } else {
            // a b = b a [a, b]
            tail.push_back({b});
            tail.push_back({a});
            append_commutator(tail, a, b);
        }
        const auto at = letters.begin() + static_cast<std::ptrdiff_t>(p);
        letters.erase(at, at + 2);
        letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(p), tail.begin(), tail.end());
        p = p > 0 ? p - 1 : 0;
    }

    GroupElement out = identity();
    for (const Letter& l : letters) {
        switch (l.gen.kind) {
        case Generator::Kind::G:
            out.x |= Mask{1} << l.gen.index;
            break;
        case Generator::Kind::F:
            out.y |= Mask{1} << l.gen.index;
            break;
        case Generator::Kind::H:
            out.z |= Mask{1} << l.gen.index;
            break;
        case Generator::Kind::U:
            out.t1 = true;
            break;
        case Generator::Kind::V:
            out.t2 = true;
            break;
        }
    }
    return out;
}

GroupElement TrialityGroup::mul_by_collection(const GroupElement& a, const GroupElement& b) const {
    Word w = word_of(a);
    const Word wb = word_of(b);
    w.insert(w.end(), wb.begin(), wb.end());
    return collect(w);
}

GroupElement TrialityGroup::evaluate(const Word& w, const std::vector<GroupElement>& images) const {
    GroupElement acc = identity();
    for (const Letter& l : w) {
        const GroupElement& im = images.at(ordinal(l.gen));
        acc = mul(acc, l.inverse ? inv(im) : im);
    }
    return acc;
}

const std::vector<GroupElement>& TrialityGroup::generator_images(TrialityMap map) const {
    return images_[map_slot(map)];
}

GroupElement TrialityGroup::apply(TrialityMap map, const GroupElement& a) const {
    require_same(a);
    const auto& im = images_[map_slot(map)];
    GroupElement acc = identity();
    for_each_bit(a.x, [&](std::size_t i) { acc = mul(acc, im[i]); });
    for_each_bit(a.y, [&](std::size_t i) { acc = mul(acc, im[n_ + i]); });
    for_each_bit(a.z, [&](std::size_t i) { acc = mul(acc, im[2 * n_ + i]); });
    if (a.t1) acc = mul(acc, im[3 * n_]);
    if (a.t2) acc = mul(acc, im[3 * n_ + 1]);
    return acc;
}

GroupElement TrialityGroup::bracket_sigma(const GroupElement& a) const {
    return mul(inv(a), apply(TrialityMap::sigma(), a));
}

bool TrialityGroup::check_triality(const GroupElement& a) const {
    const GroupElement k = bracket_sigma(a);
    const GroupElement k1 = apply(TrialityMap::rho(), k);
    const GroupElement k2 = apply(TrialityMap::rho(), k1);
    return mul(mul(k, k1), k2) == identity();
}

bool TrialityGroup::cubic_term(Mask x) const noexcept {
    bool r = false;
    for_each_bit(x, [&](std::size_t a) {
        for_each_bit(x & above(a), [&](std::size_t b) { r ^= parity(alpha_[a * n_ + b] & x & above(b)); });
    });
    return r;
}

bool TrialityGroup::in_subgroup(const GroupElement& a, Subgroup which) const {
    require_same(a);
    switch (which) {
    case Subgroup::H1:
        return a.y == 0 && !a.t2;
    case Subgroup::H2:
        return a.x == 0 && !a.t1;
    case Subgroup::H3:
        // In the sorted normal form sigma(g^x f^x h^z u^a v^b) = g^x f^x h^z u^(b+c) v^(a+c)
        // with c = cubic_term(x), so the fixed points need a + b = c rather than a = b.
        return a.x == a.y && (a.t1 ^ a.t2) == cubic_term(a.x);
    }
    return false;
}

std::pair<Mask, bool> TrialityGroup::canonical_coset_rep(const GroupElement& a) const {
    require_same(a);
    GroupElement cur = a;
    for_each_bit(a.y, [&](std::size_t i) { cur = mul(mul(g(i), f(i)), cur); });
    for_each_bit(cur.z, [&](std::size_t k) { cur = mul(h(k), cur); });
    if (cur.t2) cur = mul(mul(u(), v()), cur);
    if (cur.y || cur.z || cur.t2) throw StructuralError("coset reduction left a non-canonical residue");
    return {cur.x, cur.t1};
}

std::pair<Mask, bool> TrialityGroup::coset_rep_fast(const GroupElement& a) const {
    require_same(a);
    const Mask xr = a.x ^ a.y;
    // (g^xr)^2 = u^q with q the quadratic part of sigma, so (g^xr)^-1 = g^xr u^q.
    bool q = parity(xr & sigma_);
    for_each_bit(xr, [&](std::size_t i) { q ^= parity(kappa_[i] & xr & above(i)); });
    const GroupElement d = mul(a, make(xr, 0, 0, q, false));
    return {xr, d.t1 ^ d.t2 ^ cubic_term(d.x)};
}

std::string TrialityGroup::to_string(const GroupElement& a) const {
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const std::string& s) {
        if (!first) out << ' ';
        out << s;
        first = false;
    };
    for_each_bit(a.x, [&](std::size_t i) { emit("g" + std::to_string(i + 1)); });
    for_each_bit(a.y, [&](std::size_t i) { emit("f" + std::to_string(i + 1)); });
    for_each_bit(a.z, [&](std::size_t i) { emit("h" + std::to_string(i + 1)); });
    if (a.t1) emit("u");
    if (a.t2) emit("v");
    if (first) out << '1';
    return out.str();
}

// ---------------------------------------------------------------------------
// Holomorph

HolElement Holomorph::mul(const HolElement& a, const HolElement& b) const {
    // s g = g^(s^-1) s, and the S-part composes as functions in reverse order.
    return {G_.mul(a.g, G_.apply(a.s.inverse(), b.g)), b.s * a.s};
}

HolElement Holomorph::inv(const HolElement& a) const { return {G_.apply(a.s, G_.inv(a.g)), a.s.inverse()}; }

HolElement Holomorph::conj(const HolElement& a, const HolElement& b) const { return mul(mul(inv(b), a), b); }

HolElement Holomorph::sigma_conjugate(const GroupElement& g) const { return {G_.bracket_sigma(g), TrialityMap::sigma()}; }

}  // namespace codeloop
