#pragma once

// Independent reference computations for the tests. Nothing here calls into the
// library's arithmetic: vectors are strings of '0'/'1', group words are token lists.

#include "codeloop/cubic.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline std::size_t weight(const std::string& v) {
    std::size_t w = 0;
    for (char c : v) w += c == '1';
    return w;
}

inline std::string xor_str(const std::string& a, const std::string& b) {
    std::string r(a.size(), '0');
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] != b[i]) ? '1' : '0';
    return r;
}

inline std::string and_str(const std::string& a, const std::string& b) {
    std::string r(a.size(), '0');
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] == '1' && b[i] == '1') ? '1' : '0';
    return r;
}

/// All sums of subsets of rows, as a set.
inline std::set<std::string> span(const std::vector<std::string>& rows, std::size_t length) {
    std::set<std::string> out{std::string(length, '0')};
    for (const auto& r : rows) {
        std::set<std::string> next = out;
        for (const auto& v : out) next.insert(xor_str(v, r));
        out = std::move(next);
    }
    return out;
}

/// Codeword of a coordinate mask over string rows.
inline std::string combine(const std::vector<std::string>& rows, std::uint64_t mask, std::size_t length) {
    std::string v(length, '0');
    for (std::size_t i = 0; i < rows.size(); ++i)
        if ((mask >> i) & 1u) v = xor_str(v, rows[i]);
    return v;
}

// Weight formulas on codewords.
inline bool sigma_w(const std::string& x) { return (weight(x) / 4) % 2; }
inline bool kappa_w(const std::string& x, const std::string& y) { return (weight(and_str(x, y)) / 2) % 2; }
inline bool alpha_w(const std::string& x, const std::string& y, const std::string& z) {
    return weight(and_str(and_str(x, y), z)) % 2;
}

/// sigma on coordinate masks by the cubic polynomial, reading the stored constants only.
inline bool sigma_poly(const codeloop::CubicSpace& V, std::uint64_t x) {
    const std::size_t n = V.dim();
    bool r = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (!((x >> i) & 1u)) continue;
        r ^= V.sigma(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!((x >> j) & 1u)) continue;
            r ^= V.kappa(i, j);
            for (std::size_t k = j + 1; k < n; ++k)
                if ((x >> k) & 1u) r ^= V.alpha(i, j, k);
        }
    }
    return r;
}

// Polarization from sigma.
inline bool kappa_pol(const codeloop::CubicSpace& V, std::uint64_t x, std::uint64_t y) {
    return sigma_poly(V, x ^ y) ^ sigma_poly(V, x) ^ sigma_poly(V, y);
}
inline bool alpha_pol(const codeloop::CubicSpace& V, std::uint64_t x, std::uint64_t y, std::uint64_t z) {
    return kappa_pol(V, x ^ y, z) ^ kappa_pol(V, x, z) ^ kappa_pol(V, y, z);
}

/// A second collector for G, written directly from the relations. Tokens:
/// 0..n-1 = g_i, n..2n-1 = f_i, 2n..3n-1 = h_i, 3n = u, 3n+1 = v. Inverse letters
/// are expanded before collection (g^-1 = g u^sigma, f^-1 = f v^sigma).
struct Collector {
    const codeloop::CubicSpace& V;
    std::size_t n;

    explicit Collector(const codeloop::CubicSpace& space) : V(space), n(space.dim()) {}

    int U() const { return static_cast<int>(3 * n); }
    int Vv() const { return static_cast<int>(3 * n + 1); }

    // Word for [b, a] = b^-1 a^-1 b a with tokens a < b: "b a" becomes "a b [b, a]".
    std::vector<int> swap_tail(int a, int b) const {
        const auto N = static_cast<int>(n);
        std::vector<int> t;
        auto kind = [&](int x) { return x < N ? 0 : x < 2 * N ? 1 : x < 3 * N ? 2 : 3; };
        const int ka = kind(a), kb = kind(b);
        const auto ia = static_cast<std::size_t>(ka < 3 ? a - ka * N : 0);
        const auto ib = static_cast<std::size_t>(kb < 3 ? b - kb * N : 0);
        if (ka == 0 && kb == 0) {
            if (V.kappa(ia, ib)) t.push_back(U());
        } else if (ka == 1 && kb == 1) {
            if (V.kappa(ia, ib)) t.push_back(Vv());
        } else if (ka == 0 && kb == 1) {
            // [f_j, g_i] is the inverse of [g_i, f_j], an involution here
            if (V.kappa(ia, ib)) {
                t.push_back(U());
                t.push_back(Vv());
            }
            for (std::size_t k = 0; k < n; ++k)
                if (V.alpha(ia, ib, k)) t.push_back(static_cast<int>(2 * n + k));
        } else if (ka == 0 && kb == 2) {
            if (ia == ib) t.push_back(U());
        } else if (ka == 1 && kb == 2) {
            if (ia == ib) t.push_back(Vv());
        }
        return t;
    }

    std::vector<int> square(int a) const {
        const auto N = static_cast<int>(n);
        if (a < N && V.sigma(static_cast<std::size_t>(a))) return {U()};
        if (a >= N && a < 2 * N && V.sigma(static_cast<std::size_t>(a - N))) return {Vv()};
        return {};
    }

    /// Collects a word of tokens; returns the exponent vector (3n+2 entries).
    std::vector<int> collect(std::vector<int> w) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t p = 0; p + 1 < w.size(); ++p) {
                const int a = w[p], b = w[p + 1];
                if (a < b) continue;
                std::vector<int> rep;
                if (a == b) {
                    rep = square(a);
                } else {
                    rep = {b, a};
                    const auto t = swap_tail(b, a);
                    rep.insert(rep.end(), t.begin(), t.end());
                }
                w.erase(w.begin() + static_cast<std::ptrdiff_t>(p), w.begin() + static_cast<std::ptrdiff_t>(p) + 2);
                w.insert(w.begin() + static_cast<std::ptrdiff_t>(p), rep.begin(), rep.end());
                changed = true;
                break;
            }
        }
        std::vector<int> e(3 * n + 2, 0);
        for (int x : w) e[static_cast<std::size_t>(x)] ^= 1;
        return e;
    }
};

}  // namespace oracle
