// SPDX-License-Identifier: MIT
#include "lejalab/leja1d.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "lejalab/parallel.hpp"

namespace leja {

// ---------------------------------------------------------------------------
// DyadicAngle

DyadicAngle::DyadicAngle(std::uint64_t numerator, std::uint32_t level) {
    if (level > max_level) throw std::invalid_argument("DyadicAngle: level exceeds " + std::to_string(max_level));
    // reduce modulo 2*pi, i.e. numerator modulo 2^(level+1)
    std::uint64_t p = numerator & ((std::uint64_t{1} << (level + 1)) - 1);
    std::uint32_t l = level;
    while (l > 0 && p % 2 == 0) {
        p /= 2;
        --l;
    }
    if (p == 0) l = 0;
    num_ = p;
    level_ = l;
}

double DyadicAngle::pi_multiple() const noexcept { return std::ldexp(static_cast<double>(num_), -static_cast<int>(level_)); }

double DyadicAngle::radians() const noexcept { return std::numbers::pi * pi_multiple(); }

Complex DyadicAngle::unit() const noexcept {
    if (level_ <= 1) {
        // multiples of pi/2
        const std::uint64_t quarter = level_ == 0 ? 2 * num_ : num_;
        switch (quarter) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    const double a = radians();
    return {std::cos(a), std::sin(a)};
}

DyadicAngle DyadicAngle::operator+(const DyadicAngle& other) const {
    const std::uint32_t L = std::max(level_, other.level_);
    const std::uint64_t mod_mask = (std::uint64_t{1} << (L + 1)) - 1;
    const std::uint64_t a = (num_ << (L - level_)) & mod_mask;
    const std::uint64_t b = (other.num_ << (L - other.level_)) & mod_mask;
    return DyadicAngle((a + b) & mod_mask, L);
}

DyadicAngle DyadicAngle::grid_angle(std::uint64_t k, std::uint32_t log2_size) {
    // 2*pi*k / 2^L == pi * k / 2^(L-1)
    if (log2_size == 0) return DyadicAngle{};
    return DyadicAngle(k, log2_size - 1);
}

// ---------------------------------------------------------------------------
// EllipseMap, CompactDescriptor

EllipseMap::EllipseMap(double R) : R_(R) {
    if (!(R > 1.0) || !std::isfinite(R)) {
        throw std::invalid_argument("EllipseMap: R must be finite and > 1 (R = 1 degenerates to a segment)");
    }
}

CompactDescriptor CompactDescriptor::ellipse(double R) { return CompactDescriptor(EllipseCompact{EllipseMap(R)}); }

CompactDescriptor CompactDescriptor::sampled(std::vector<Complex> samples) {
    bool distinct = false;
    for (std::size_t i = 1; i < samples.size() && !distinct; ++i) distinct = samples[i] != samples[0];
    if (!distinct) throw std::invalid_argument("sampled boundary needs at least two distinct samples");
    return CompactDescriptor(SampledBoundary{std::move(samples)});
}

std::string CompactDescriptor::name() const {
    if (std::holds_alternative<UnitDisk>(kind_)) return "disk";
    if (const auto* e = std::get_if<EllipseCompact>(&kind_)) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "ellipse:%.17g", e->map.R());
        return buf;
    }
    return "sampled:" + std::to_string(std::get<SampledBoundary>(kind_).samples.size());
}

std::vector<Complex> torus_grid(std::size_t size) {
    std::vector<Complex> grid(size);
    if (size == 0) return grid;
    if (std::has_single_bit(size)) {
        const auto L = static_cast<std::uint32_t>(std::countr_zero(size));
        for (std::size_t k = 0; k < size; ++k) grid[k] = DyadicAngle::grid_angle(k, L).unit();
    } else {
        for (std::size_t k = 0; k < size; ++k) grid[k] = std::polar(1.0, torus_angle(k, size));
    }
    return grid;
}

double torus_angle(std::size_t k, std::size_t size) {
    return 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(size);
}

std::vector<Complex> CompactDescriptor::boundary_grid(std::size_t grid_size) const {
    if (const auto* s = std::get_if<SampledBoundary>(&kind_)) return s->samples;
    auto grid = torus_grid(grid_size);
    if (const auto* e = std::get_if<EllipseCompact>(&kind_)) {
        for (auto& u : grid) u = e->map(u);
    }
    return grid;
}

namespace {

double segment_distance(Complex z, Complex a, Complex b) {
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(z - a);
    const double t = std::clamp(((z - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
    return std::abs(z - (a + t * ab));
}

double polyline_distance(Complex z, const std::vector<Complex>& s) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < s.size(); ++i) best = std::min(best, segment_distance(z, s[i], s[(i + 1) % s.size()]));
    return best;
}

int winding_number(Complex z, const std::vector<Complex>& s) {
    int wn = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Complex a = s[i], b = s[(i + 1) % s.size()];
        const double cross = (b.real() - a.real()) * (z.imag() - a.imag()) - (z.real() - a.real()) * (b.imag() - a.imag());
        if (a.imag() <= z.imag()) {
            if (b.imag() > z.imag() && cross > 0) ++wn;
        } else if (b.imag() <= z.imag() && cross < 0) {
            --wn;
        }
    }
    return wn;
}

double ellipse_level(const EllipseMap& m, Complex z) {
    const double x = z.real() / m.semi_major(), y = z.imag() / m.semi_minor();
    return x * x + y * y;
}

}  // namespace

bool CompactDescriptor::on_boundary(Complex z, double tol) const {
    if (std::holds_alternative<UnitDisk>(kind_)) return std::abs(std::abs(z) - 1.0) <= tol;
    if (const auto* e = std::get_if<EllipseCompact>(&kind_)) return std::abs(ellipse_level(e->map, z) - 1.0) <= tol;
    return polyline_distance(z, std::get<SampledBoundary>(kind_).samples) <= tol;
}

bool CompactDescriptor::contains(Complex z, double tol) const {
    if (std::holds_alternative<UnitDisk>(kind_)) return std::abs(z) <= 1.0 + tol;
    if (const auto* e = std::get_if<EllipseCompact>(&kind_)) return ellipse_level(e->map, z) <= 1.0 + tol;
    const auto& s = std::get<SampledBoundary>(kind_).samples;
    return polyline_distance(z, s) <= tol || winding_number(z, s) != 0;
}

// ---------------------------------------------------------------------------
// NodeSequence1D

NodeSequence1D::NodeSequence1D(std::vector<Complex> points, CompactDescriptor compact)
    : points_(std::move(points)), compact_(std::move(compact)) {
    validate();
}

NodeSequence1D::NodeSequence1D(std::vector<Complex> points, std::vector<DyadicAngle> angles, CompactDescriptor compact)
    : points_(std::move(points)), angles_(std::move(angles)), compact_(std::move(compact)) {
    if (angles_->size() != points_.size()) throw std::invalid_argument("NodeSequence1D: angle count != point count");
    validate();
}

void NodeSequence1D::validate() const {
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!std::isfinite(points_[i].real()) || !std::isfinite(points_[i].imag()))
            throw std::invalid_argument("NodeSequence1D: non-finite point at index " + std::to_string(i));
        if (!compact_.contains(points_[i]))
            throw std::invalid_argument("NodeSequence1D: point " + std::to_string(i) + " lies outside the " +
                                        compact_.name() + " compact");
        for (std::size_t j = 0; j < i; ++j) {
            const bool same = angles_ ? (*angles_)[i] == (*angles_)[j] : std::abs(points_[i] - points_[j]) <= 1e-12;
            if (same)
                throw std::invalid_argument("NodeSequence1D: points " + std::to_string(j) + " and " + std::to_string(i) +
                                            " coincide");
        }
    }
}

NodeSequence1D NodeSequence1D::prefix(std::size_t n) const {
    n = std::min(n, points_.size());
    std::vector<Complex> pts(points_.begin(), points_.begin() + static_cast<std::ptrdiff_t>(n));
    if (angles_) {
        std::vector<DyadicAngle> ang(angles_->begin(), angles_->begin() + static_cast<std::ptrdiff_t>(n));
        return NodeSequence1D(std::move(pts), std::move(ang), compact_);
    }
    return NodeSequence1D(std::move(pts), compact_);
}

NodeSequence1D NodeSequence1D::with_node(std::size_t k, Complex z) const {
    if (k >= points_.size()) throw std::out_of_range("NodeSequence1D::with_node: index out of range");
    auto pts = points_;
    pts[k] = z;
    return NodeSequence1D(std::move(pts), compact_);
}

NodeSequence1D NodeSequence1D::rotated(Complex unimodular) const {
    auto pts = points_;
    for (auto& p : pts) p *= unimodular;
    return NodeSequence1D(std::move(pts), compact_);
}

// ---------------------------------------------------------------------------
// Explicit disk sequence

DyadicAngle disk_leja_point(std::uint64_t k) {
    if (k == 0) return DyadicAngle{};
    // k = sum_l j_l 2^l  ->  angle/pi = sum_l j_l 2^-l = reverse(k) / 2^top
    const auto top = static_cast<std::uint32_t>(std::bit_width(k) - 1);
    std::uint64_t p = 0;
    for (std::uint32_t l = 0; l <= top; ++l) {
        if ((k >> l) & 1u) p |= std::uint64_t{1} << (top - l);
    }
    return DyadicAngle(p, top);
}

NodeSequence1D disk_leja_section(std::size_t N, DyadicAngle rotation) {
    std::vector<DyadicAngle> angles(N);
    std::vector<Complex> pts(N);
    for (std::size_t k = 0; k < N; ++k) {
        angles[k] = disk_leja_point(k) + rotation;
        pts[k] = angles[k].unit();
    }
    return NodeSequence1D(std::move(pts), std::move(angles), CompactDescriptor::unit_disk());
}

// ---------------------------------------------------------------------------
// Grid maximization

double log_abs_product(Complex z, std::span<const Complex> roots) noexcept {
    // Product of squared moduli with periodic exponent extraction.
    double mant = 1.0;
    long exp2 = 0;
    std::size_t since = 0;
    for (const Complex r : roots) {
        const double n = std::norm(z - r);
        if (n == 0.0) return -std::numeric_limits<double>::infinity();
        mant *= n;
        if (++since == 16) {
            int e = 0;
            mant = std::frexp(mant, &e);
            exp2 += e;
            since = 0;
        }
    }
    return 0.5 * (std::log(mant) + static_cast<double>(exp2) * std::numbers::ln2);
}

GridMax max_log_product(std::span<const Complex> roots, std::span<const Complex> grid) {
    if (grid.empty()) throw std::invalid_argument("max_log_product: empty grid");
    std::vector<GridMax> partial(chunk_count(grid.size()));
    parallel_chunks(grid.size(), [&](std::size_t c, std::size_t b, std::size_t e) {
        GridMax best{b, -std::numeric_limits<double>::infinity()};
        for (std::size_t i = b; i < e; ++i) {
            const double v = log_abs_product(grid[i], roots);
            if (v > best.log_value) best = {i, v};
        }
        partial[c] = best;
    });
    GridMax best = partial.front();
    for (const auto& p : partial)
        if (p.log_value > best.log_value) best = p;
    return best;
}

Complex greedy_extend(const NodeSequence1D& nodes, std::span<const Complex> candidates) {
    if (nodes.empty()) throw std::invalid_argument("greedy_extend: empty node sequence");
    if (candidates.empty()) throw std::invalid_argument("greedy_extend: no candidates");
    const GridMax best = max_log_product(nodes.points(), candidates);
    if (best.log_value == -std::numeric_limits<double>::infinity())
        throw std::domain_error("greedy_extend: every candidate coincides with an existing node");
    return candidates[best.index];
}

NodeSequence1D greedy_leja_section(Complex start, std::size_t N, std::span<const Complex> candidates,
                                   CompactDescriptor compact) {
    if (N == 0) return NodeSequence1D({}, std::move(compact));
    std::vector<Complex> pts{start};
    pts.reserve(N);
    while (pts.size() < N) {
        const GridMax best = max_log_product(pts, candidates);
        if (best.log_value == -std::numeric_limits<double>::infinity())
            throw std::domain_error("greedy_leja_section: candidates exhausted");
        pts.push_back(candidates[best.index]);
    }
    return NodeSequence1D(std::move(pts), std::move(compact));
}

LejaSectionReport verify_leja_section(const NodeSequence1D& nodes, std::size_t grid_size, double tol) {
    if (grid_size < 64) throw std::invalid_argument("verify_leja_section: grid_size must be >= 64");
    if (!(tol > 0.0)) throw std::invalid_argument("verify_leja_section: tol must be > 0");
    LejaSectionReport report;
    if (nodes.empty()) return report;

    report.start_on_boundary = nodes.compact().on_boundary(nodes[0]);
    if (!report.start_on_boundary) report.first_failure = 0;

    const auto grid = nodes.compact().boundary_grid(grid_size);
    const auto pts = nodes.points();
    const double log_slack = std::log1p(-tol);
    for (std::size_t k = 1; k < pts.size(); ++k) {
        const auto prior = pts.first(k);
        LejaStep step;
        step.k = k;
        step.log_value = log_abs_product(pts[k], prior);
        step.log_grid_max = max_log_product(prior, grid).log_value;
        step.ok = step.log_value >= step.log_grid_max + log_slack;
        if (!step.ok && !report.first_failure) report.first_failure = k;
        report.steps.push_back(step);
    }
    report.accepted = !report.first_failure.has_value();
    return report;
}

}  // namespace leja
