// SPDX-License-Identifier: MIT
// Independent reference computations shared by the unit tests. Nothing here
// calls into the library paths it is used to check.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

namespace leja::testing {

using C = std::complex<double>;

inline constexpr std::uint64_t default_seed = 0x1e7a5eedULL;

/// All multi-indices of dimension s with |k| <= max_degree, sorted by degree
/// then lexicographically.
inline std::vector<std::vector<std::uint32_t>> sorted_multi_indices(std::size_t s, std::uint32_t max_degree) {
    std::vector<std::vector<std::uint32_t>> all;
    std::vector<std::uint32_t> k(s, 0);
    for (;;) {
        std::uint32_t deg = 0;
        for (auto v : k) deg += v;
        if (deg <= max_degree) all.push_back(k);
        // odometer over [0, max_degree]^s
        std::size_t j = 0;
        while (j < s && k[j] == max_degree) k[j++] = 0;
        if (j == s) break;
        ++k[j];
    }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        std::uint32_t da = 0, db = 0;
        for (auto v : a) da += v;
        for (auto v : b) db += v;
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    return all;
}

/// Leibniz expansion; fine up to n = 8.
inline C leibniz_det(const std::vector<std::vector<C>>& a) {
    const std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    C total = 0.0;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        C term = inversions % 2 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < n; ++i) term *= a[i][perm[i]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Monomial z^k for an explicit exponent vector.
inline C monomial(const std::vector<C>& z, const std::vector<std::uint32_t>& k) {
    C v = 1.0;
    for (std::size_t j = 0; j < z.size(); ++j)
        for (std::uint32_t e = 0; e < k[j]; ++e) v *= z[j];
    return v;
}

/// Generalized Vandermonde det[e_i(H_j)] built from the brute-force monomial order.
inline C reference_vdm(const std::vector<std::vector<C>>& pts) {
    const std::size_t n = pts.size();
    const std::size_t s = pts[0].size();
    auto order = sorted_multi_indices(s, static_cast<std::uint32_t>(n));
    std::vector<std::vector<C>> a(n, std::vector<C>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = monomial(pts[j], order[i]);
    return leibniz_det(a);
}

/// Gaussian elimination with partial pivoting, no logs; solves A x = b in place.
inline std::vector<C> solve(std::vector<std::vector<C>> a, std::vector<C> b) {
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
        std::swap(a[c], a[piv]);
        std::swap(b[c], b[piv]);
        for (std::size_t r = c + 1; r < n; ++r) {
            const C f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    std::vector<C> x(n);
    for (std::size_t i = n; i-- > 0;) {
        C acc = b[i];
        for (std::size_t k = i + 1; k < n; ++k) acc -= a[i][k] * x[k];
        x[i] = acc / a[i][i];
    }
    return x;
}

/// log|det| and arg(det) by plain elimination; {-inf, 0} for an exactly singular matrix.
inline std::pair<double, double> log_det(std::vector<std::vector<C>> a) {
    const std::size_t n = a.size();
    double lg = 0.0, ph = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
        if (a[piv][c] == C(0.0)) return {-INFINITY, 0.0};
        if (piv != c) {
            std::swap(a[c], a[piv]);
            ph += std::numbers::pi;
        }
        lg += std::log(std::abs(a[c][c]));
        ph += std::arg(a[c][c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            const C f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return {lg, std::remainder(ph, 2 * std::numbers::pi)};
}

/// Generalized Vandermonde via log_det with the brute-force monomial order.
inline std::pair<double, double> reference_log_vdm(const std::vector<std::vector<C>>& pts) {
    const std::size_t n = pts.size();
    const std::size_t s = pts[0].size();
    std::uint32_t deg = 0;
    while (sorted_multi_indices(s, deg).size() < n) ++deg;
    auto order = sorted_multi_indices(s, deg);
    std::vector<std::vector<C>> a(n, std::vector<C>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = monomial(pts[j], order[i]);
    return log_det(std::move(a));
}

/// Pairwise-distinct unimodular points (minimum angular gap enforced).
inline std::vector<C> random_unimodular(std::mt19937_64& rng, std::size_t n, double min_gap = 1e-3) {
    std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
    std::vector<C> out;
    while (out.size() < n) {
        const C z = std::polar(1.0, ang(rng));
        bool ok = true;
        for (const C& o : out) ok = ok && std::abs(z - o) > min_gap;
        if (ok) out.push_back(z);
    }
    return out;
}

/// Uniform point of the closed unit disk.
inline C random_disk_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
}

/// Bit-reversal angle of the explicit disk sequence, computed with doubles
/// straight from the digit expansion: pi * sum_l j_l 2^-l.
inline double bit_reversal_angle(std::uint64_t k) {
    double a = 0.0;
    for (int l = 0; k != 0; ++l, k >>= 1)
        if (k & 1u) a += std::ldexp(1.0, -l);
    return std::numbers::pi * a;
}

}  // namespace leja::testing
