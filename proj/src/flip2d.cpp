// SPDX-License-Identifier: MIT
#include "lejalab/flip2d.hpp"

#include <stdexcept>
#include <string>

namespace leja {

IndexDecomposition decompose(Index N) {
    if (N == 0) throw std::invalid_argument("decompose: N must be >= 1");
    const std::uint64_t d = degree_of_index(2, N);
    const Index before = d == 0 ? 0 : block_size(2, d - 1);
    return IndexDecomposition{N, d, N - before - 1};
}

std::string_view to_string(FlipCase c) noexcept {
    switch (c) {
        case FlipCase::TopDiag: return "TopDiag";
        case FlipCase::SubDiagAtM: return "SubDiagAtM";
        case FlipCase::SubDiagLow: return "SubDiagLow";
        case FlipCase::InteriorLowP_LowQ: return "InteriorLowP_LowQ";
        case FlipCase::InteriorLowP_HighQ: return "InteriorLowP_HighQ";
        case FlipCase::InteriorAtM: return "InteriorAtM";
        case FlipCase::InteriorHighP: return "InteriorHighP";
    }
    return "?";
}

bool in_omega(std::size_t p, std::size_t q, std::uint64_t d, std::uint64_t m) noexcept {
    return p + q < d || (p + q == d && p <= m);
}

FlipCase classify(std::size_t p, std::size_t q, std::uint64_t d, std::uint64_t m) {
    if (m > d || !in_omega(p, q, d, m)) {
        throw std::invalid_argument("classify: (p,q) = (" + std::to_string(p) + "," + std::to_string(q) +
                                    ") is not a node of Omega_N for d = " + std::to_string(d) +
                                    ", m = " + std::to_string(m));
    }
    const std::uint64_t t = p + q;
    if (t == d) return FlipCase::TopDiag;
    if (t + 1 == d) {
        if (p >= m + 1) return FlipCase::TopDiag;
        return p == m ? FlipCase::SubDiagAtM : FlipCase::SubDiagLow;
    }
    if (p < m) return q + m + 1 <= d ? FlipCase::InteriorLowP_LowQ : FlipCase::InteriorLowP_HighQ;
    return p == m ? FlipCase::InteriorAtM : FlipCase::InteriorHighP;
}

std::vector<FlipTerm> flip_terms(std::size_t p_, std::size_t q_, std::uint64_t d_, std::uint64_t m_) {
    const FlipCase c = classify(p_, q_, d_, m_);
    const int p = static_cast<int>(p_), q = static_cast<int>(q_);
    const int d = static_cast<int>(d_), m = static_cast<int>(m_);
    std::vector<FlipTerm> t;
    // r-sum: for r in [lo, hi]: + Z(p+r+1) W(wtop(r)) - Z(p+r) W(wtop(r))
    auto r_sum = [&](int lo, int hi, int shift) {
        for (int r = lo; r <= hi; ++r) {
            t.push_back({+1, p + r + 1, d - p - r - shift});
            t.push_back({-1, p + r, d - p - r - shift});
        }
    };
    switch (c) {
        case FlipCase::TopDiag:
            t.push_back({+1, p - 1, q - 1});
            break;
        case FlipCase::SubDiagAtM:
            t.push_back({+1, m - 1, d - m});
            break;
        case FlipCase::SubDiagLow:
            t.push_back({+1, p + 1, q - 1});
            t.push_back({-1, p - 1, q - 1});
            t.push_back({+1, p - 1, q + 1});
            break;
        case FlipCase::InteriorLowP_LowQ:
            t.push_back({+1, p - 1, d - p});
            t.push_back({-1, p - 1, d - p - 1});
            t.push_back({+1, p + 1, d - p - 1});
            r_sum(1, m - p - 1, 1);
            r_sum(m - p, d - p - q - 2, 2);
            break;
        case FlipCase::InteriorLowP_HighQ:
            t.push_back({+1, p - 1, d - p});
            t.push_back({-1, p - 1, d - p - 1});
            t.push_back({+1, p + 1, d - p - 1});
            r_sum(1, d - p - q - 1, 1);
            break;
        case FlipCase::InteriorAtM:
            t.push_back({+1, m - 1, d - m});
            t.push_back({-1, m - 1, d - m - 2});
            t.push_back({+1, m + 1, d - m - 2});
            r_sum(1, d - m - q - 2, 2);
            break;
        case FlipCase::InteriorHighP:
            t.push_back({+1, p - 1, d - p - 1});
            t.push_back({-1, p - 1, d - p - 2});
            t.push_back({+1, p + 1, d - p - 2});
            r_sum(1, d - p - q - 2, 2);
            break;
    }
    return t;
}

// ---------------------------------------------------------------------------
// FlipContext

namespace {

std::vector<Complex> inverse_gaps(const std::vector<Complex>& x) {
    const std::size_t n = x.size();
    std::vector<Complex> inv(n * n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t i = 0; i < n; ++i)
            if (i != p) inv[p * n + i] = 1.0 / (x[p] - x[i]);
    return inv;
}

void check_nodes(std::vector<Complex>& x, std::size_t need, const char* name) {
    if (x.size() < need)
        throw std::invalid_argument(std::string("FlipContext: ") + name + " has " + std::to_string(x.size()) +
                                    " nodes, " + std::to_string(need) + " required");
    x.resize(need);
    for (std::size_t i = 0; i < need; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (std::abs(x[i] - x[j]) <= 1e-12)
                throw std::invalid_argument(std::string("FlipContext: ") + name + " " + std::to_string(j) + " and " +
                                            std::to_string(i) + " coincide");
}

// prod_{i=0..top, i != p} (x - nodes_i) / (nodes_p - nodes_i), as a running product
inline Complex axis_product(Complex x, std::span<const Complex> nodes, const Complex* inv_row, std::size_t p, int top) {
    Complex acc = 1.0;
    for (int i = 0; i <= top; ++i) {
        if (static_cast<std::size_t>(i) == p) continue;
        const Complex f = (x - nodes[i]) * inv_row[i];
        acc *= f;
    }
    return acc;
}

// row[top + 1] for top = -1..n-1, same running product as axis_product
inline void axis_products(Complex x, std::span<const Complex> nodes, const Complex* inv_row, std::size_t p,
                          Complex* row) {
    Complex acc = 1.0;
    row[0] = acc;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (i != p) {
            const Complex f = (x - nodes[i]) * inv_row[i];
            acc *= f;
        }
        row[i + 1] = acc;
    }
}

}  // namespace

FlipContext::FlipContext(std::vector<Complex> etas, std::vector<Complex> thetas, Index N)
    : decomposition_(decompose(N)), etas_(std::move(etas)), thetas_(std::move(thetas)) {
    width_ = decomposition_.d + 1;
    check_nodes(etas_, width_, "etas");
    check_nodes(thetas_, width_, "thetas");
    inv_eta_ = inverse_gaps(etas_);
    inv_theta_ = inverse_gaps(thetas_);

    const auto [_, d, m] = decomposition_;
    nodes_.reserve(N);
    MultiIndex k = MultiIndex::zero(2);
    for (Index n = 1; n <= N; ++n) {
        const NodeIndex node{k[0], k[1]};
        nodes_.push_back(node);
        cases_.push_back(classify(node.p, node.q, d, m));
        terms_.push_back(flip_terms(node.p, node.q, d, m));
        k = successor(k);
    }
}

FlipContext FlipContext::disk_leja(Index N) {
    const auto d = decompose(N).d;
    const auto seq = disk_leja_section(d + 1);
    std::vector<Complex> nodes(seq.points().begin(), seq.points().end());
    return FlipContext(nodes, nodes, N);
}

std::optional<std::size_t> FlipContext::position(std::size_t p, std::size_t q) const noexcept {
    if (!in_omega(p, q, decomposition_.d, decomposition_.m)) return std::nullopt;
    try {
        return static_cast<std::size_t>(multi_to_index(MultiIndex{static_cast<Exponent>(p), static_cast<Exponent>(q)}) - 1);
    } catch (...) {
        return std::nullopt;
    }
}

PointS FlipContext::point(std::size_t n) const { return {etas_[nodes_[n].p], thetas_[nodes_[n].q]}; }

std::vector<PointS> FlipContext::omega() const {
    std::vector<PointS> out;
    out.reserve(nodes_.size());
    for (std::size_t n = 0; n < nodes_.size(); ++n) out.push_back(point(n));
    return out;
}

// ---------------------------------------------------------------------------
// Evaluation

Complex flip_eval(const FlipContext& ctx, std::size_t p, std::size_t q, Complex z, Complex w) {
    const auto pos = ctx.position(p, q);
    if (!pos) {
        const auto& dm = ctx.decomposition();
        (void)classify(p, q, dm.d, dm.m);  // throws with a descriptive message
    }
    const Complex* zinv = &ctx.inv_eta_gap(p, 0);
    const Complex* winv = &ctx.inv_theta_gap(q, 0);
    Complex sum = 0.0;
    for (const auto& t : ctx.terms(*pos)) {
        const Complex zp = axis_product(z, ctx.etas(), zinv, p, t.z_top);
        const Complex wp = axis_product(w, ctx.thetas(), winv, q, t.w_top);
        const Complex term = zp * wp;
        if (t.sign > 0) sum += term;
        else sum -= term;
    }
    return sum;
}

Complex flip_by_determinant_ratio(std::span<const PointS> omega, std::size_t n, std::span<const Complex> z) {
    if (n >= omega.size()) throw std::out_of_range("flip_by_determinant_ratio: node index out of range");
    const LogComplex den = vdm_direct(omega);
    if (den.is_zero()) throw std::domain_error("flip_by_determinant_ratio: node set is not unisolvent");
    std::vector<PointS> replaced(omega.begin(), omega.end());
    replaced[n] = PointS(z.begin(), z.end());
    const LogComplex num = vdm_direct(replaced);
    const auto v = (num / den).value();
    if (!v) throw std::overflow_error("flip_by_determinant_ratio: value out of double range");
    return *v;
}

Complex flip_eval_oracle(const FlipContext& ctx, std::size_t p, std::size_t q, Complex z, Complex w) {
    const auto pos = ctx.position(p, q);
    if (!pos) {
        const auto& dm = ctx.decomposition();
        (void)classify(p, q, dm.d, dm.m);
    }
    const Complex zw[2] = {z, w};
    return flip_by_determinant_ratio(ctx.omega(), *pos, zw);
}

Complex lagrange_interpolate(const FlipContext& ctx, std::span<const Complex> samples, Complex z, Complex w) {
    if (samples.size() != ctx.N())
        throw std::invalid_argument("lagrange_interpolate: expected " + std::to_string(ctx.N()) + " samples, got " +
                                    std::to_string(samples.size()));
    Complex sum = 0.0;
    for (std::size_t n = 0; n < ctx.nodes().size(); ++n) {
        const auto [p, q] = ctx.nodes()[n];
        sum += samples[n] * flip_eval(ctx, p, q, z, w);
    }
    return sum;
}

FlipGridEvaluator::FlipGridEvaluator(const FlipContext& ctx, std::span<const Complex> z_grid,
                                     std::span<const Complex> w_grid)
    : ctx_(&ctx), nz_(z_grid.size()), nw_(w_grid.size()) {
    const std::size_t W = ctx.width();
    stride_ = W * (W + 1);
    ztab_.resize(nz_ * stride_);
    wtab_.resize(nw_ * stride_);
    for (std::size_t g = 0; g < nz_; ++g)
        for (std::size_t p = 0; p < W; ++p)
            axis_products(z_grid[g], ctx.etas(), &ctx.inv_eta_gap(p, 0), p, &ztab_[g * stride_ + p * (W + 1)]);
    for (std::size_t g = 0; g < nw_; ++g)
        for (std::size_t q = 0; q < W; ++q)
            axis_products(w_grid[g], ctx.thetas(), &ctx.inv_theta_gap(q, 0), q, &wtab_[g * stride_ + q * (W + 1)]);
}

void FlipGridEvaluator::eval(std::size_t iz, std::size_t iw, std::span<Complex> out) const {
    const std::size_t W = ctx_->width();
    const Complex* zt = &ztab_[iz * stride_];
    const Complex* wt = &wtab_[iw * stride_];
    const auto& nodes = ctx_->nodes();
    for (std::size_t n = 0; n < nodes.size(); ++n) {
        const Complex* zr = zt + nodes[n].p * (W + 1);
        const Complex* wr = wt + nodes[n].q * (W + 1);
        Complex sum = 0.0;
        for (const auto& t : ctx_->terms(n)) {
            const Complex term = zr[t.z_top + 1] * wr[t.w_top + 1];
            if (t.sign > 0) sum += term;
            else sum -= term;
        }
        out[n] = sum;
    }
}

}  // namespace leja
