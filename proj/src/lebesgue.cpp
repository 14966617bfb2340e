// SPDX-License-Identifier: MIT
#include "lejalab/lebesgue.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "lejalab/parallel.hpp"

namespace leja {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

std::vector<double> torus_angles(std::size_t size) {
    std::vector<double> a(size);
    for (std::size_t k = 0; k < size; ++k) a[k] = torus_angle(k, size);
    return a;
}

}  // namespace

LebesgueReport lebesgue_1d(const NodeSequence1D& nodes, std::size_t grid_size) {
    if (grid_size < 256) throw std::invalid_argument("lebesgue_1d: grid_size must be >= 256");
    const std::size_t N = nodes.size();
    if (N == 0) throw std::invalid_argument("lebesgue_1d: empty node sequence");
    const auto eta = nodes.points();

    // |l_k(z)| = |w_k| prod_{j != k} |z - eta_j|, w_k = 1 / prod_{j != k} (eta_k - eta_j)
    std::vector<double> weight(N);
    for (std::size_t k = 0; k < N; ++k) {
        double prod = 1.0;
        for (std::size_t j = 0; j < N; ++j)
            if (j != k) prod *= std::abs(eta[k] - eta[j]);
        weight[k] = 1.0 / prod;
    }

    const auto grid = nodes.compact().boundary_grid(grid_size);
    const bool parametrized = !std::holds_alternative<SampledBoundary>(nodes.compact().kind());

    struct Partial {
        double lambda = -1.0;
        std::size_t arg = 0;
        std::vector<double> sup;
    };
    std::vector<Partial> partial(chunk_count(grid.size()));
    parallel_chunks(grid.size(), [&](std::size_t c, std::size_t b, std::size_t e) {
        Partial& out = partial[c];
        out.sup.assign(N, 0.0);
        std::vector<double> dist(N), suffix(N + 1);
        for (std::size_t g = b; g < e; ++g) {
            for (std::size_t j = 0; j < N; ++j) dist[j] = std::abs(grid[g] - eta[j]);
            suffix[N] = 1.0;
            for (std::size_t j = N; j-- > 0;) suffix[j] = suffix[j + 1] * dist[j];
            double prefix = 1.0, total = 0.0;
            for (std::size_t k = 0; k < N; ++k) {
                const double lk = weight[k] * prefix * suffix[k + 1];
                total += lk;
                out.sup[k] = std::max(out.sup[k], lk);
                prefix *= dist[k];
            }
            if (total > out.lambda) {
                out.lambda = total;
                out.arg = g;
            }
        }
    });

    LebesgueReport r;
    r.N = N;
    r.d = N - 1;
    r.m = 0;
    r.grid_per_axis = grid.size();
    std::size_t arg = 0;
    r.lambda = -1.0;
    std::vector<double> sup(N, 0.0);
    for (const auto& p : partial) {
        if (p.lambda > r.lambda) {
            r.lambda = p.lambda;
            arg = p.arg;
        }
        for (std::size_t k = 0; k < N; ++k) sup[k] = std::max(sup[k], p.sup[k]);
    }
    r.argmax = {grid[arg]};
    r.argmax_angles = {parametrized ? torus_angle(arg, grid.size()) : nan};
    for (std::size_t k = 0; k < N; ++k) r.per_node_sup.push_back({k, 0, sup[k]});
    return r;
}

LebesgueReport lebesgue_2d_on_grid(const FlipContext& ctx, std::span<const Complex> z_grid,
                                   std::span<const Complex> w_grid, std::span<const double> z_angles,
                                   std::span<const double> w_angles) {
    if (z_grid.empty() || w_grid.empty()) throw std::invalid_argument("lebesgue_2d: empty grid");
    const FlipGridEvaluator eval(ctx, z_grid, w_grid);
    const std::size_t N = ctx.N();
    const std::size_t nz = z_grid.size(), nw = w_grid.size();

    struct Partial {
        double lambda = -1.0;
        std::size_t iz = 0, iw = 0;
        std::vector<double> sup;
    };
    std::vector<Partial> partial(chunk_count(nz));
    parallel_chunks(nz, [&](std::size_t c, std::size_t b, std::size_t e) {
        Partial& out = partial[c];
        out.sup.assign(N, 0.0);
        std::vector<Complex> vals(N);
        for (std::size_t iz = b; iz < e; ++iz) {
            for (std::size_t iw = 0; iw < nw; ++iw) {
                eval.eval(iz, iw, vals);
                double total = 0.0;
                for (std::size_t n = 0; n < N; ++n) {
                    const double a = std::sqrt(std::norm(vals[n]));
                    total += a;
                    if (a > out.sup[n]) out.sup[n] = a;
                }
                if (total > out.lambda) {
                    out.lambda = total;
                    out.iz = iz;
                    out.iw = iw;
                }
            }
        }
    });

    LebesgueReport r;
    const auto& dm = ctx.decomposition();
    r.N = dm.N;
    r.d = dm.d;
    r.m = dm.m;
    r.grid_per_axis = nz;
    r.lambda = -1.0;
    std::size_t iz = 0, iw = 0;
    std::vector<double> sup(N, 0.0);
    for (const auto& p : partial) {
        if (p.lambda > r.lambda) {
            r.lambda = p.lambda;
            iz = p.iz;
            iw = p.iw;
        }
        for (std::size_t n = 0; n < N; ++n) sup[n] = std::max(sup[n], p.sup[n]);
    }
    r.argmax = {z_grid[iz], w_grid[iw]};
    r.argmax_angles = {z_angles.empty() ? nan : z_angles[iz], w_angles.empty() ? nan : w_angles[iw]};
    for (std::size_t n = 0; n < N; ++n) r.per_node_sup.push_back({ctx.nodes()[n].p, ctx.nodes()[n].q, sup[n]});
    return r;
}

LebesgueReport lebesgue_2d(const FlipContext& ctx, std::size_t grid_per_axis) {
    if (grid_per_axis < 64) throw std::invalid_argument("lebesgue_2d: grid_per_axis must be >= 64");
    const auto grid = torus_grid(grid_per_axis);
    const auto angles = torus_angles(grid_per_axis);
    return lebesgue_2d_on_grid(ctx, grid, grid, angles, angles);
}

NodeSequence1D mapped_nodes(const EllipseMap& map, std::span<const DyadicAngle> angles) {
    std::vector<Complex> pts;
    pts.reserve(angles.size());
    for (const auto& a : angles) pts.push_back(map(a.unit()));
    return NodeSequence1D(std::move(pts), std::vector<DyadicAngle>(angles.begin(), angles.end()),
                          CompactDescriptor::ellipse(map.R()));
}

FlipContext mapped_context(double R1, double R2, Index N) {
    const EllipseMap m1(R1), m2(R2);
    const auto d = decompose(N).d;
    const auto disk = disk_leja_section(d + 1);
    const auto& angles = *disk.angles();
    const auto a = mapped_nodes(m1, angles), b = mapped_nodes(m2, angles);
    return FlipContext({a.points().begin(), a.points().end()}, {b.points().begin(), b.points().end()}, N);
}

LebesgueReport lebesgue_2d_mapped(double R1, double R2, Index N, std::size_t grid_per_axis) {
    if (grid_per_axis < 64) throw std::invalid_argument("lebesgue_2d_mapped: grid_per_axis must be >= 64");
    const auto ctx = mapped_context(R1, R2, N);
    const auto zg = CompactDescriptor::ellipse(R1).boundary_grid(grid_per_axis);
    const auto wg = CompactDescriptor::ellipse(R2).boundary_grid(grid_per_axis);
    const auto angles = torus_angles(grid_per_axis);
    return lebesgue_2d_on_grid(ctx, zg, wg, angles, angles);
}

double flip_sup_bound(std::uint64_t d, std::size_t p, std::size_t q) {
    constexpr double pi = std::numbers::pi;
    return 2.0 * (static_cast<double>(d) - static_cast<double>(p + q) + 1.0) * pi * pi * std::exp(6.0 * pi);
}

double fitted_slope(std::span<const double> xs, std::span<const double> ys) {
    const std::size_t n = std::min(xs.size(), ys.size());
    if (n < 2) return nan;
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) return nan;
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return sxx > 0 ? sxy / sxx : nan;
}

std::vector<ConvergenceRow> jackson_study(const BidiscFunction& f, std::uint64_t d_max, std::size_t grid_per_axis) {
    if (d_max > 20) throw std::invalid_argument("jackson_study: d_max must be <= 20");
    if (grid_per_axis < 16) throw std::invalid_argument("jackson_study: grid_per_axis must be >= 16");
    const auto grid = torus_grid(grid_per_axis);
    const std::size_t G = grid_per_axis;

    std::vector<Complex> fgrid(G * G);
    for (std::size_t iz = 0; iz < G; ++iz)
        for (std::size_t iw = 0; iw < G; ++iw) fgrid[iz * G + iw] = f(grid[iz], grid[iw]);

    std::vector<ConvergenceRow> rows;
    for (std::uint64_t d = 1; d <= d_max; ++d) {
        const Index N = block_size(2, d);
        const auto ctx = FlipContext::disk_leja(N);
        std::vector<Complex> samples(N);
        for (std::size_t n = 0; n < N; ++n) {
            const auto h = ctx.point(n);
            samples[n] = f(h[0], h[1]);
        }
        const FlipGridEvaluator eval(ctx, grid, grid);
        std::vector<double> partial(chunk_count(G), 0.0);
        parallel_chunks(G, [&](std::size_t c, std::size_t b, std::size_t e) {
            std::vector<Complex> vals(N);
            double worst = 0.0;
            for (std::size_t iz = b; iz < e; ++iz) {
                for (std::size_t iw = 0; iw < G; ++iw) {
                    eval.eval(iz, iw, vals);
                    Complex interp = 0.0;
                    for (std::size_t n = 0; n < N; ++n) interp += samples[n] * vals[n];
                    worst = std::max(worst, std::abs(fgrid[iz * G + iw] - interp));
                }
            }
            partial[c] = worst;
        });
        ConvergenceRow row;
        row.d = d;
        row.N = N;
        row.sup_error = *std::max_element(partial.begin(), partial.end());
        rows.push_back(row);

        std::vector<double> xs, ys;
        for (std::size_t i = rows.size() >= 3 ? rows.size() - 3 : 0; i < rows.size(); ++i) {
            xs.push_back(std::log(static_cast<double>(rows[i].N)));
            ys.push_back(rows[i].sup_error > 0 ? std::log(rows[i].sup_error) : nan);
        }
        rows.back().fitted_rate = fitted_slope(xs, ys);
    }
    return rows;
}

}  // namespace leja
