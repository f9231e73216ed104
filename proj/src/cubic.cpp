#include "codeloop/cubic.hpp"

#include "codeloop/errors.hpp"

#include <array>
#include <optional>
#include <sstream>

namespace codeloop {

namespace {

constexpr bool bit(CubicSpace::Mask m, std::size_t i) noexcept { return (m >> i) & 1u; }

CubicSpace::Mask vec_mask(const CubicSpace& space, const BitVec& v, const char* op) {
    if (v.size() != space.dim())
        throw DimensionError(std::string(op) + ": vector of length " + std::to_string(v.size()) +
                             " in a space of dimension " + std::to_string(space.dim()));
    return v.to_mask();
}

std::string mask_string(CubicSpace::Mask m, std::size_t n) { return BitVec::from_mask(n, m).to_string(); }

}  // namespace

CubicSpace::CubicSpace(std::size_t n) : n_(n), kappa_upper_(n, 0), alpha_upper_(n * n, 0) {
    if (n > kMaxDim) throw DimensionError("cubic space dimension " + std::to_string(n) + " exceeds 64");
}

void CubicSpace::require_index(std::size_t i) const {
    if (i >= n_) throw DimensionError("index " + std::to_string(i) + " out of range for dimension " + std::to_string(n_));
}

bool CubicSpace::sigma(std::size_t i) const {
    require_index(i);
    return bit(sigma_, i);
}

bool CubicSpace::kappa(std::size_t i, std::size_t j) const {
    require_index(i);
    require_index(j);
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    return bit(kappa_upper_[i], j);
}

bool CubicSpace::alpha(std::size_t i, std::size_t j, std::size_t k) const {
    require_index(i);
    require_index(j);
    require_index(k);
    if (i == j || j == k || i == k) return false;
    std::array<std::size_t, 3> t{i, j, k};
    if (t[0] > t[1]) std::swap(t[0], t[1]);
    if (t[1] > t[2]) std::swap(t[1], t[2]);
    if (t[0] > t[1]) std::swap(t[0], t[1]);
    return bit(alpha_upper_[t[0] * n_ + t[1]], t[2]);
}

void CubicSpace::set_sigma(std::size_t i, bool v) {
    require_index(i);
    sigma_ = v ? sigma_ | (Mask{1} << i) : sigma_ & ~(Mask{1} << i);
}

void CubicSpace::set_kappa(std::size_t i, std::size_t j, bool v) {
    require_index(j);
    if (!(i < j)) throw DimensionError("kappa indices must be strictly increasing");
    auto& m = kappa_upper_[i];
    m = v ? m | (Mask{1} << j) : m & ~(Mask{1} << j);
}

void CubicSpace::set_alpha(std::size_t i, std::size_t j, std::size_t k, bool v) {
    require_index(k);
    if (!(i < j && j < k)) throw DimensionError("alpha indices must be strictly increasing");
    auto& m = alpha_upper_[i * n_ + j];
    m = v ? m | (Mask{1} << k) : m & ~(Mask{1} << k);
}

CubicSpace::Mask CubicSpace::kappa_row(std::size_t i) const {
    require_index(i);
    Mask row = kappa_upper_[i];
    for (std::size_t a = 0; a < i; ++a)
        if (bit(kappa_upper_[a], i)) row |= Mask{1} << a;
    return row;
}

CubicSpace::Mask CubicSpace::alpha_row(std::size_t i, std::size_t j) const {
    require_index(i);
    require_index(j);
    if (i == j) return 0;
    if (i > j) std::swap(i, j);
    Mask row = alpha_upper_[i * n_ + j];
    for (std::size_t k = 0; k < n_; ++k) {
        if (k < i && bit(alpha_upper_[k * n_ + i], j)) row |= Mask{1} << k;
        if (i < k && k < j && bit(alpha_upper_[i * n_ + k], j)) row |= Mask{1} << k;
    }
    return row;
}

bool CubicSpace::sigma_of(Mask x) const noexcept {
    bool r = parity(x & sigma_);
    for (Mask xa = x; xa; xa &= xa - 1) {
        const auto a = static_cast<std::size_t>(std::countr_zero(xa));
        r ^= parity(kappa_upper_[a] & x);
        for (Mask xb = xa & (xa - 1); xb; xb &= xb - 1) {
            const auto b = static_cast<std::size_t>(std::countr_zero(xb));
            r ^= parity(alpha_upper_[a * n_ + b] & x);
        }
    }
    return r;
}

bool CubicSpace::kappa_of(Mask x, Mask y) const noexcept {
    bool r = false;
    for (std::size_t a = 0; a < n_; ++a) {
        // kappa*(x, y) over a < b, both orientations.
        r ^= bit(x, a) && parity(kappa_upper_[a] & y);
        r ^= bit(y, a) && parity(kappa_upper_[a] & x);
        if (!bit(x | y, a)) continue;
        for (std::size_t b = a + 1; b < n_; ++b) {
            const Mask m = alpha_upper_[a * n_ + b];
            if (!m) continue;
            const bool xa = bit(x, a), xb = bit(x, b), ya = bit(y, a), yb = bit(y, b);
            r ^= parity(m & y) && ((xa && xb) ^ (ya && xb) ^ (xa && yb));
            r ^= parity(m & x) && ((xa && yb) ^ (ya && xb) ^ (ya && yb));
        }
    }
    return r;
}

bool CubicSpace::alpha_of(Mask x, Mask y, Mask z) const noexcept {
    bool r = false;
    for (std::size_t a = 0; a < n_; ++a) {
        if (!bit(x | y | z, a)) continue;
        for (std::size_t b = a + 1; b < n_; ++b) {
            const Mask m = alpha_upper_[a * n_ + b];
            if (!m) continue;
            const bool xa = bit(x, a), xb = bit(x, b), ya = bit(y, a), yb = bit(y, b), za = bit(z, a), zb = bit(z, b);
            const bool px = parity(m & x), py = parity(m & y), pz = parity(m & z);
            r ^= ((xa && yb) ^ (ya && xb)) && pz;
            r ^= ((xa && zb) ^ (za && xb)) && py;
            r ^= ((ya && zb) ^ (za && yb)) && px;
        }
    }
    return r;
}

CubicSpace from_code(const DoublyEvenCode& code) {
    const std::size_t n = code.dim();
    const auto& rows = code.basis().row_vectors();
    CubicSpace space(n);
    for (std::size_t i = 0; i < n; ++i) {
        space.set_sigma(i, (rows[i].weight() / 4) % 2);
        for (std::size_t j = i + 1; j < n; ++j) {
            const BitVec ij = meet(rows[i], rows[j]);
            space.set_kappa(i, j, (ij.weight() / 2) % 2);
            for (std::size_t k = j + 1; k < n; ++k) space.set_alpha(i, j, k, meet(ij, rows[k]).weight() % 2);
        }
    }
    return space;
}

CubicSpace random_space(std::size_t n, SplitMix64& rng) {
    CubicSpace space(n);
    for (std::size_t i = 0; i < n; ++i) {
        space.set_sigma(i, rng() & 1u);
        for (std::size_t j = i + 1; j < n; ++j) {
            space.set_kappa(i, j, rng() & 1u);
            for (std::size_t k = j + 1; k < n; ++k) space.set_alpha(i, j, k, rng() & 1u);
        }
    }
    return space;
}

bool eval_sigma(const CubicSpace& space, const BitVec& x) { return space.sigma_of(vec_mask(space, x, "eval_sigma")); }

bool eval_kappa(const CubicSpace& space, const BitVec& x, const BitVec& y) {
    return space.kappa_of(vec_mask(space, x, "eval_kappa"), vec_mask(space, y, "eval_kappa"));
}

bool eval_alpha(const CubicSpace& space, const BitVec& x, const BitVec& y, const BitVec& z) {
    return space.alpha_of(vec_mask(space, x, "eval_alpha"), vec_mask(space, y, "eval_alpha"),
                          vec_mask(space, z, "eval_alpha"));
}

Report validate_axioms(const CubicSpace& space, const AxiomMode& mode) {
    using Mask = CubicSpace::Mask;
    const std::size_t n = space.dim();
    Report report;
    report.suite = "cubic-axioms";
    report.mode = mode.exhaustive ? CheckMode::Exhaustive : CheckMode::Sampled;
    if (!mode.exhaustive) report.seed = mode.sample.seed;

    auto& sigmapol = report.check("sigma-polarization");
    auto& kappapol = report.check("kappa-polarization");
    auto& alphalin = report.check("alpha-linearity");
    auto& ksym = report.check("kappa-symmetric");
    auto& kalt = report.check("kappa-alternating");
    auto& aalt = report.check("alpha-alternating");
    auto& seven = report.check("alpha-seven-term");

    auto triple = [n](Mask x, Mask y, Mask z) {
        return "(" + mask_string(x, n) + ", " + mask_string(y, n) + ", " + mask_string(z, n) + ")";
    };
    auto run = [&](Mask x, Mask y, Mask z, Mask t) {
        const auto S = [&](Mask a) { return space.sigma_of(a); };
        const auto K = [&](Mask a, Mask b) { return space.kappa_of(a, b); };
        const auto A = [&](Mask a, Mask b, Mask c) { return space.alpha_of(a, b, c); };
        auto w = [&] { return triple(x, y, z); };
        sigmapol.record(S(x ^ y) == (S(x) ^ S(y) ^ K(x, y)), w);
        kappapol.record(K(x ^ y, z) == (K(x, z) ^ K(y, z) ^ A(x, y, z)), w);
        alphalin.record(A(x ^ y, z, t) == (A(x, z, t) ^ A(y, z, t)), w);
        ksym.record(K(x, y) == K(y, x), w);
        kalt.record(!K(x, x), w);
        const bool a = A(x, y, z);
        aalt.record(!A(x, x, z) && !A(x, y, x) && !A(x, y, y) && a == A(y, x, z) && a == A(x, z, y), w);
        seven.record(a == (S(x ^ y ^ z) ^ S(x ^ y) ^ S(y ^ z) ^ S(x ^ z) ^ S(x) ^ S(y) ^ S(z)), w);
    };

    if (mode.exhaustive) {
        if (3 * n >= 64 || (std::uint64_t{1} << (3 * n)) > mode.limit)
            throw CapacityError("validate_axioms: 2^(3n) triples exceed the exhaustive limit");
        const Mask size = Mask{1} << n;
        for (Mask x = 0; x < size; ++x)
            for (Mask y = 0; y < size; ++y)
                for (Mask z = 0; z < size; ++z) run(x, y, z, n ? Mask{1} << ((x + y + z) % n) : 0);
    } else {
        SplitMix64 rng(mode.sample.seed);
        const auto nb = static_cast<unsigned>(n);
        for (std::uint64_t s = 0; s < mode.sample.count; ++s) {
            const Mask x = rng.bits(nb), y = rng.bits(nb), z = rng.bits(nb), t = rng.bits(nb);
            run(x, y, z, t);
        }
    }
    return report;
}

namespace {

std::size_t parse_index(const std::string& tok, std::size_t n, std::size_t lineno) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(lineno, "expected an index, got '" + tok + "'");
    }
    if (pos != tok.size() || tok.front() == '-') throw ParseError(lineno, "expected an index, got '" + tok + "'");
    if (v < 1 || v > n) throw ParseError(lineno, "index " + tok + " out of range 1.." + std::to_string(n));
    return v - 1;
}

bool parse_bit(const std::string& tok, std::size_t lineno) {
    if (tok == "0") return false;
    if (tok == "1") return true;
    throw ParseError(lineno, "expected 0 or 1, got '" + tok + "'");
}

}  // namespace

CubicSpace parse_cubic(std::istream& in) {
    std::optional<CubicSpace> space;
    bool seen_sigma = false;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream line(raw);
        std::vector<std::string> tok;
        for (std::string t; line >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        const std::string& key = tok[0];
        if (key == "dim") {
            if (space) throw ParseError(lineno, "duplicate dim line");
            if (tok.size() != 2) throw ParseError(lineno, "expected 'dim n'");
            std::size_t pos = 0;
            unsigned long n = 0;
            try {
                n = std::stoul(tok[1], &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != tok[1].size() || tok[1].front() == '-') throw ParseError(lineno, "bad dimension '" + tok[1] + "'");
            if (n > CubicSpace::kMaxDim) throw ParseError(lineno, "dimension exceeds 64");
            space.emplace(n);
            continue;
        }
        if (!space) throw ParseError(lineno, "'" + key + "' before dim line");
        const std::size_t n = space->dim();
        if (key == "sigma") {
            if (seen_sigma) throw ParseError(lineno, "duplicate sigma line");
            const std::string bits = tok.size() == 2 ? tok[1] : std::string{};
            if (tok.size() > 2 || bits.size() != n) throw ParseError(lineno, "sigma needs exactly " + std::to_string(n) + " bits");
            for (std::size_t i = 0; i < n; ++i) space->set_sigma(i, parse_bit(std::string(1, bits[i]), lineno));
            seen_sigma = true;
        } else if (key == "kappa") {
            if (tok.size() != 4) throw ParseError(lineno, "expected 'kappa i j v'");
            const auto i = parse_index(tok[1], n, lineno), j = parse_index(tok[2], n, lineno);
            if (!(i < j)) throw ParseError(lineno, "kappa indices must satisfy i < j");
            space->set_kappa(i, j, parse_bit(tok[3], lineno));
        } else if (key == "alpha") {
            if (tok.size() != 5) throw ParseError(lineno, "expected 'alpha i j k v'");
            const auto i = parse_index(tok[1], n, lineno), j = parse_index(tok[2], n, lineno),
                       k = parse_index(tok[3], n, lineno);
            if (i == j || j == k || i == k) throw ParseError(lineno, "repeated index in alpha triple");
            if (!(i < j && j < k)) throw ParseError(lineno, "alpha indices must satisfy i < j < k");
            space->set_alpha(i, j, k, parse_bit(tok[4], lineno));
        } else {
            throw ParseError(lineno, "unknown keyword '" + key + "'");
        }
    }
    if (!space) throw ParseError(0, "missing dim line");
    return *space;
}

CubicSpace parse_cubic(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_cubic(in);
}

std::string serialize_cubic(const CubicSpace& space) {
    const std::size_t n = space.dim();
    std::ostringstream out;
    out << "dim " << n << '\n';
    if (n > 0) {
        out << "sigma ";
        for (std::size_t i = 0; i < n; ++i) out << (space.sigma(i) ? '1' : '0');
        out << '\n';
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (space.kappa(i, j)) out << "kappa " << i + 1 << ' ' << j + 1 << " 1\n";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (space.alpha(i, j, k)) out << "alpha " << i + 1 << ' ' << j + 1 << ' ' << k + 1 << " 1\n";
    return out.str();
}

}  // namespace codeloop
