// SPDX-License-Identifier: MIT
#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "lejalab/flip2d.hpp"
#include "lejalab/leja1d.hpp"

namespace leja {

struct NodeSup {
    std::size_t p = 0;
    std::size_t q = 0;
    double sup = 0.0;
};

/// Grid estimate of a Lebesgue constant. All sups are taken over boundary
/// samples (the distinguished boundary for products).
struct LebesgueReport {
    Index N = 0;
    std::uint64_t d = 0;
    std::uint64_t m = 0;
    std::size_t grid_per_axis = 0;
    double lambda = 0.0;
    /// Point where the grid sup is attained, one coordinate per axis.
    std::vector<Complex> argmax;
    /// Torus parameter angle (radians) of each argmax coordinate; for mapped
    /// compacts this is the preimage angle. NaN for sampled boundaries.
    std::vector<double> argmax_angles;
    std::vector<NodeSup> per_node_sup;
};

/// sup over the boundary grid of sum_k prod_{j != k} |(z - eta_j) / (eta_k - eta_j)|.
/// Requires pairwise-distinct nodes and grid_size >= 256.
[[nodiscard]] LebesgueReport lebesgue_1d(const NodeSequence1D& nodes, std::size_t grid_size = std::size_t{1} << 14);

/// sup over the torus^2 grid of sum_n |l_{H_n}(z, w)|. Requires grid_per_axis >= 64.
[[nodiscard]] LebesgueReport lebesgue_2d(const FlipContext& ctx, std::size_t grid_per_axis = 512);

/// Same sweep over an arbitrary product grid. `z_angles` / `w_angles` label
/// the samples for argmax reporting and may be empty.
[[nodiscard]] LebesgueReport lebesgue_2d_on_grid(const FlipContext& ctx, std::span<const Complex> z_grid,
                                                 std::span<const Complex> w_grid, std::span<const double> z_angles = {},
                                                 std::span<const double> w_angles = {});

/// Images Phi(e^{i angle}) of unit-circle points under an ellipse map, with
/// the preimage angles kept as exact metadata.
[[nodiscard]] NodeSequence1D mapped_nodes(const EllipseMap& map, std::span<const DyadicAngle> angles);

/// FlipContext of the intertwining of mapped disk Leja sequences.
[[nodiscard]] FlipContext mapped_context(double R1, double R2, Index N);

/// Lebesgue report for the product of two filled ellipses, with nodes and
/// boundary grid pushed through the two ellipse maps. Throws if R1 or R2 <= 1.
[[nodiscard]] LebesgueReport lebesgue_2d_mapped(double R1, double R2, Index N, std::size_t grid_per_axis = 512);

/// 2 (d - p - q + 1) pi^2 exp(6 pi): uniform bound on the sup of one bidisc FLIP.
[[nodiscard]] double flip_sup_bound(std::uint64_t d, std::size_t p, std::size_t q);

struct ConvergenceRow {
    std::uint64_t d = 0;
    Index N = 0;
    double sup_error = 0.0;
    /// Least-squares slope of log(sup_error) against log(N) over this row and
    /// up to two preceding rows; NaN when undefined.
    double fitted_rate = 0.0;
};

using BidiscFunction = std::function<Complex(Complex, Complex)>;

/// For d = 1..d_max, interpolates f on Omega_{N_d} of the intertwined disk
/// Leja sequence and records the torus^2 grid sup of |f - L[f]|. d_max <= 20.
[[nodiscard]] std::vector<ConvergenceRow> jackson_study(const BidiscFunction& f, std::uint64_t d_max,
                                                        std::size_t grid_per_axis = 128);

/// Least-squares slope of ys against xs; NaN for fewer than two points or
/// non-finite inputs.
[[nodiscard]] double fitted_slope(std::span<const double> xs, std::span<const double> ys);

}  // namespace leja
