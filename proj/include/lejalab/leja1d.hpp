// SPDX-License-Identifier: MIT
#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace leja {

using Complex = std::complex<double>;

/// Exact angle pi * numerator / 2^level, reduced modulo 2*pi.
///
/// Canonical form: numerator odd, or numerator == 0 and level == 0.
class DyadicAngle {
public:
    static constexpr std::uint32_t max_level = 61;

    constexpr DyadicAngle() = default;
    DyadicAngle(std::uint64_t numerator, std::uint32_t level);

    [[nodiscard]] std::uint64_t numerator() const noexcept { return num_; }
    [[nodiscard]] std::uint32_t level() const noexcept { return level_; }

    /// numerator / 2^level, in [0, 2).
    [[nodiscard]] double pi_multiple() const noexcept;
    [[nodiscard]] double radians() const noexcept;
    /// exp(i * angle); quarter turns are returned exactly.
    [[nodiscard]] Complex unit() const noexcept;

    [[nodiscard]] DyadicAngle operator+(const DyadicAngle& other) const;

    /// The angle 2*pi*k / 2^log2_size of a power-of-two torus grid.
    [[nodiscard]] static DyadicAngle grid_angle(std::uint64_t k, std::uint32_t log2_size);

    friend bool operator==(const DyadicAngle&, const DyadicAngle&) = default;

private:
    std::uint64_t num_ = 0;
    std::uint32_t level_ = 0;
};

/// Exterior conformal map of the unit disk onto the exterior of an ellipse:
/// u -> (R u + 1 / (R u)) / 2, semi-axes (R +- 1/R) / 2.
class EllipseMap {
public:
    explicit EllipseMap(double R);

    [[nodiscard]] double R() const noexcept { return R_; }
    [[nodiscard]] double semi_major() const noexcept { return 0.5 * (R_ + 1.0 / R_); }
    [[nodiscard]] double semi_minor() const noexcept { return 0.5 * (R_ - 1.0 / R_); }

    [[nodiscard]] Complex operator()(Complex u) const noexcept { return 0.5 * (R_ * u + 1.0 / (R_ * u)); }

private:
    double R_;
};

struct UnitDisk {};
struct EllipseCompact {
    EllipseMap map;
};
struct SampledBoundary {
    std::vector<Complex> samples;
};

/// A planar compact: the closed unit disk, a filled ellipse, or a region
/// given by boundary samples (closed polygon through the samples).
class CompactDescriptor {
public:
    using Kind = std::variant<UnitDisk, EllipseCompact, SampledBoundary>;

    CompactDescriptor() : kind_(UnitDisk{}) {}

    static CompactDescriptor unit_disk() { return CompactDescriptor(); }
    static CompactDescriptor ellipse(double R);
    /// Requires at least two distinct samples.
    static CompactDescriptor sampled(std::vector<Complex> samples);

    [[nodiscard]] const Kind& kind() const noexcept { return kind_; }
    [[nodiscard]] bool is_unit_disk() const noexcept { return std::holds_alternative<UnitDisk>(kind_); }
    [[nodiscard]] std::string name() const;

    /// Boundary samples. Disk and ellipse: images of `grid_size` equispaced
    /// torus angles. Sampled boundaries return their own samples.
    [[nodiscard]] std::vector<Complex> boundary_grid(std::size_t grid_size) const;

    [[nodiscard]] bool on_boundary(Complex z, double tol = 1e-9) const;
    [[nodiscard]] bool contains(Complex z, double tol = 1e-9) const;

private:
    explicit CompactDescriptor(Kind k) : kind_(std::move(k)) {}
    Kind kind_;
};

/// exp(2 pi i k / size) for k = 0..size-1; exact dyadic angles when size is a power of two.
[[nodiscard]] std::vector<Complex> torus_grid(std::size_t size);
[[nodiscard]] double torus_angle(std::size_t k, std::size_t size);

/// Ordered, pairwise-distinct points of a compact, optionally carrying the
/// exact dyadic angle each point came from (on the unit circle, or the
/// preimage angle for mapped nodes).
class NodeSequence1D {
public:
    NodeSequence1D() = default;
    NodeSequence1D(std::vector<Complex> points, CompactDescriptor compact);
    NodeSequence1D(std::vector<Complex> points, std::vector<DyadicAngle> angles, CompactDescriptor compact);

    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
    [[nodiscard]] bool empty() const noexcept { return points_.empty(); }
    [[nodiscard]] Complex operator[](std::size_t i) const { return points_[i]; }
    [[nodiscard]] std::span<const Complex> points() const noexcept { return points_; }
    [[nodiscard]] const std::optional<std::vector<DyadicAngle>>& angles() const noexcept { return angles_; }
    [[nodiscard]] const CompactDescriptor& compact() const noexcept { return compact_; }

    [[nodiscard]] NodeSequence1D prefix(std::size_t n) const;
    /// Copy with node k replaced; exact angle metadata is dropped.
    [[nodiscard]] NodeSequence1D with_node(std::size_t k, Complex z) const;
    [[nodiscard]] NodeSequence1D rotated(Complex unimodular) const;

private:
    void validate() const;

    std::vector<Complex> points_;
    std::optional<std::vector<DyadicAngle>> angles_;
    CompactDescriptor compact_;
};

/// Angle of the k-th explicit Leja point of the unit disk (eta_0 = 1):
/// the binary digits of k reflected across the binary point, times pi.
[[nodiscard]] DyadicAngle disk_leja_point(std::uint64_t k);

/// First N explicit disk Leja points, each rotated by `rotation`.
[[nodiscard]] NodeSequence1D disk_leja_section(std::size_t N, DyadicAngle rotation = {});

/// Location and value of max_z sum_i log|z - root_i| over a sample set.
/// Ties go to the lowest sample index regardless of thread count.
struct GridMax {
    std::size_t index = 0;
    double log_value = 0.0;
};

/// log prod_i |z - r_i| (natural log), -inf when z hits a root.
[[nodiscard]] double log_abs_product(Complex z, std::span<const Complex> roots) noexcept;

/// Throws std::invalid_argument if `grid` is empty.
[[nodiscard]] GridMax max_log_product(std::span<const Complex> roots, std::span<const Complex> grid);

/// The candidate maximizing prod_i |z - eta_i| (lowest index on ties).
/// Throws std::domain_error if every candidate coincides with a node.
[[nodiscard]] Complex greedy_extend(const NodeSequence1D& nodes, std::span<const Complex> candidates);

/// Greedy Leja section of length N started at `start`, choosing each
/// further point from `candidates`.
[[nodiscard]] NodeSequence1D greedy_leja_section(Complex start, std::size_t N, std::span<const Complex> candidates,
                                                 CompactDescriptor compact = {});

struct LejaStep {
    std::size_t k = 0;
    double log_value = 0.0;     // log prod_{i<k} |eta_k - eta_i|
    double log_grid_max = 0.0;  // log max_grid prod_{i<k} |z - eta_i|
    bool ok = false;
};

struct LejaSectionReport {
    bool accepted = false;
    bool start_on_boundary = false;
    /// 0 when eta_0 is off the boundary, otherwise the first failing k.
    std::optional<std::size_t> first_failure;
    std::vector<LejaStep> steps;
};

inline constexpr std::size_t default_leja_grid = std::size_t{1} << 14;
inline constexpr double default_leja_tol = 1e-6;

/// Checks prod_{i<k}|eta_k - eta_i| >= (1 - tol) * max over the boundary grid
/// of prod_{i<k}|z - eta_i| for every k >= 1, and eta_0 on the boundary.
/// Requires grid_size >= 64 and tol > 0.
[[nodiscard]] LejaSectionReport verify_leja_section(const NodeSequence1D& nodes,
                                                    std::size_t grid_size = default_leja_grid,
                                                    double tol = default_leja_tol);

}  // namespace leja
