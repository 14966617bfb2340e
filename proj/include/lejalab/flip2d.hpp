// SPDX-License-Identifier: MIT
#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lejalab/leja1d.hpp"
#include "lejalab/numeration.hpp"
#include "lejalab/vdm.hpp"

/// Explicit fundamental Lagrange interpolation polynomials (FLIPs) on
/// bidimensional intertwining sequences.
///
/// For N with N_{d-1} < N <= N_d and m = N - N_{d-1} - 1, the node set is
///   Omega_N = {(eta_p, theta_q) : p + q < d} u {(eta_p, theta_{d-p}) : p <= m}
/// and the interpolation space is spanned by C_{d-1}[z,w] and w^d, z w^{d-1}, ..., z^m w^{d-m}.
/// Every FLIP is a signed sum of products
///   Z_p(top)(z) * W_q(top')(w),  Z_p(top)(z) = prod_{i=0..top, i != p} (z - eta_i) / (eta_p - eta_i),
/// with the number and shape of terms fixed by one of seven index regions.
namespace leja {

struct IndexDecomposition {
    Index N = 1;
    std::uint64_t d = 0;
    std::uint64_t m = 0;
};

/// The unique (d, m) with N_{d-1} < N <= N_d, m = N - N_{d-1} - 1 (N >= 1).
[[nodiscard]] IndexDecomposition decompose(Index N);

enum class FlipCase {
    TopDiag,             // p+q = d, or p+q = d-1 and p >= m+1
    SubDiagAtM,          // p+q = d-1, p = m
    SubDiagLow,          // p+q = d-1, p <= m-1
    InteriorLowP_LowQ,   // p+q <= d-2, p <= m-1, q <= d-m-1
    InteriorLowP_HighQ,  // p+q <= d-2, p <= m-1, q >= d-m
    InteriorAtM,         // p+q <= d-2, p = m
    InteriorHighP,       // p+q <= d-2, p >= m+1
};

[[nodiscard]] std::string_view to_string(FlipCase c) noexcept;

/// Whether (eta_p, theta_q) belongs to Omega_N for this (d, m).
[[nodiscard]] bool in_omega(std::size_t p, std::size_t q, std::uint64_t d, std::uint64_t m) noexcept;

/// Throws std::invalid_argument when (p, q) is outside Omega_N.
[[nodiscard]] FlipCase classify(std::size_t p, std::size_t q, std::uint64_t d, std::uint64_t m);

/// sign * Z_p(z_top) * W_q(w_top); a top of p-1 (resp. q-1) is the plain product over i < p.
struct FlipTerm {
    int sign = 1;
    int z_top = -1;
    int w_top = -1;

    friend bool operator==(const FlipTerm&, const FlipTerm&) = default;
};

/// Terms of the closed-form FLIP for (p, q), in the order they are written
/// (leading three terms, then the r-sums from r = 1 upward).
[[nodiscard]] std::vector<FlipTerm> flip_terms(std::size_t p, std::size_t q, std::uint64_t d, std::uint64_t m);

struct NodeIndex {
    std::size_t p = 0;
    std::size_t q = 0;

    friend bool operator==(const NodeIndex&, const NodeIndex&) = default;
};

/// Node lists plus N, validated once; immutable afterwards.
class FlipContext {
public:
    /// Uses the first d+1 entries of each list. Throws std::invalid_argument
    /// if a list is too short or has coincident entries.
    FlipContext(std::vector<Complex> etas, std::vector<Complex> thetas, Index N);

    /// Explicit disk Leja sequences on both axes.
    [[nodiscard]] static FlipContext disk_leja(Index N);

    [[nodiscard]] Index N() const noexcept { return decomposition_.N; }
    [[nodiscard]] const IndexDecomposition& decomposition() const noexcept { return decomposition_; }
    [[nodiscard]] std::span<const Complex> etas() const noexcept { return etas_; }
    [[nodiscard]] std::span<const Complex> thetas() const noexcept { return thetas_; }

    /// (p, q) of H_1..H_N in order.
    [[nodiscard]] const std::vector<NodeIndex>& nodes() const noexcept { return nodes_; }
    [[nodiscard]] std::optional<std::size_t> position(std::size_t p, std::size_t q) const noexcept;
    [[nodiscard]] PointS point(std::size_t n) const;  // 0-based
    [[nodiscard]] std::vector<PointS> omega() const;

    [[nodiscard]] FlipCase flip_case(std::size_t n) const { return cases_[n]; }
    [[nodiscard]] const std::vector<FlipTerm>& terms(std::size_t n) const { return terms_[n]; }

    /// 1 / (eta_p - eta_i) and 1 / (theta_q - theta_j); zero on the diagonal.
    [[nodiscard]] const Complex& inv_eta_gap(std::size_t p, std::size_t i) const { return inv_eta_[p * width_ + i]; }
    [[nodiscard]] const Complex& inv_theta_gap(std::size_t q, std::size_t j) const { return inv_theta_[q * width_ + j]; }
    [[nodiscard]] std::size_t width() const noexcept { return width_; }

private:
    IndexDecomposition decomposition_;
    std::vector<Complex> etas_, thetas_;
    std::size_t width_ = 0;  // d + 1
    std::vector<Complex> inv_eta_, inv_theta_;
    std::vector<NodeIndex> nodes_;
    std::vector<FlipCase> cases_;
    std::vector<std::vector<FlipTerm>> terms_;
};

/// Closed-form FLIP l_{(eta_p, theta_q)}^{(N)}(z, w).
[[nodiscard]] Complex flip_eval(const FlipContext& ctx, std::size_t p, std::size_t q, Complex z, Complex w);

/// The same FLIP as a ratio of generalized Vandermonde determinants.
/// Throws std::domain_error if Omega_N is not unisolvent.
[[nodiscard]] Complex flip_eval_oracle(const FlipContext& ctx, std::size_t p, std::size_t q, Complex z, Complex w);

/// Determinant-ratio FLIP for any unisolvent point set of C^s: node `n`
/// (0-based) replaced by z. This is the only FLIP route offered for s >= 3.
[[nodiscard]] Complex flip_by_determinant_ratio(std::span<const PointS> omega, std::size_t n,
                                                std::span<const Complex> z);

/// sum_n f(H_n) l_{H_n}(z, w); samples are ordered as Omega_N.
[[nodiscard]] Complex lagrange_interpolate(const FlipContext& ctx, std::span<const Complex> samples, Complex z,
                                           Complex w);

/// All N FLIPs on a product grid z_grid x w_grid, through per-sample tables
/// of the axis products Z_p(top) and W_q(top). Values agree bit-for-bit with
/// flip_eval at the same points.
class FlipGridEvaluator {
public:
    FlipGridEvaluator(const FlipContext& ctx, std::span<const Complex> z_grid, std::span<const Complex> w_grid);

    [[nodiscard]] std::size_t z_size() const noexcept { return nz_; }
    [[nodiscard]] std::size_t w_size() const noexcept { return nw_; }

    /// out[n] = l_{H_{n+1}}(z_grid[iz], w_grid[iw]); out.size() must be N.
    void eval(std::size_t iz, std::size_t iw, std::span<Complex> out) const;

private:
    const FlipContext* ctx_;
    std::size_t nz_, nw_, stride_;
    std::vector<Complex> ztab_, wtab_;  // [sample][node index][top + 1]
};

}  // namespace leja
