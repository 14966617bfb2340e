// SPDX-License-Identifier: MIT
#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lejalab/leja1d.hpp"
#include "lejalab/numeration.hpp"

namespace leja {

/// A point of C^s.
using PointS = std::vector<Complex>;

/// Nonzero complex value stored as exp(log_magnitude + i*phase), or exact zero.
/// Vandermonde determinants of a few dozen points span hundreds of orders of
/// magnitude, so they are carried in this form.
class LogComplex {
public:
    LogComplex() = default;  // one
    LogComplex(double log_magnitude, double phase);

    static LogComplex zero();
    static LogComplex from(Complex z);

    [[nodiscard]] bool is_zero() const noexcept { return zero_; }
    [[nodiscard]] double log_magnitude() const noexcept { return log_mag_; }
    /// In (-pi, pi].
    [[nodiscard]] double phase() const noexcept { return phase_; }

    /// The plain complex value, available only while |log_magnitude| < 300.
    [[nodiscard]] std::optional<Complex> value() const;

    LogComplex& operator*=(const LogComplex& o);
    LogComplex& operator/=(const LogComplex& o);  // throws std::domain_error on zero divisor
    friend LogComplex operator*(LogComplex a, const LogComplex& b) { return a *= b; }
    friend LogComplex operator/(LogComplex a, const LogComplex& b) { return a /= b; }

private:
    double log_mag_ = 0.0;
    double phase_ = 0.0;
    bool zero_ = false;
};

/// Relative agreement of two determinant values: |log|a| - log|b|| / max(1, |log|b||),
/// or +inf when exactly one of them is zero.
[[nodiscard]] double log_magnitude_rel_diff(const LogComplex& a, const LogComplex& b);
/// Wrapped phase difference in [0, pi].
[[nodiscard]] double phase_diff(const LogComplex& a, const LogComplex& b);

/// s one-dimensional sequences combined through the graded-lex numeration:
/// H_n = (eta^(1)_{k_1(n)}, ..., eta^(s)_{k_s(n)}).
class IntertwinedSequence {
public:
    explicit IntertwinedSequence(std::vector<NodeSequence1D> components);

    [[nodiscard]] std::size_t dim() const noexcept { return components_.size(); }
    [[nodiscard]] const std::vector<NodeSequence1D>& components() const noexcept { return components_; }
    [[nodiscard]] const NodeSequence1D& component(std::size_t j) const { return components_[j]; }

    /// Largest N for which H_1..H_N exist with the available component lengths.
    [[nodiscard]] Index max_count() const;
    /// H_n, n >= 1.
    [[nodiscard]] PointS point(Index n) const;
    /// H_1..H_N; throws std::invalid_argument naming a component that is too short.
    [[nodiscard]] std::vector<PointS> points(Index N) const;

private:
    std::vector<NodeSequence1D> components_;
};

/// H_1..H_N of the intertwining sequence of `components`.
[[nodiscard]] std::vector<PointS> intertwine(std::span<const NodeSequence1D> components, Index N);

/// Points per component needed for H_1..H_N: 1 + max_{n<=N} k_j(n), per axis.
[[nodiscard]] std::vector<std::size_t> required_lengths(std::size_t s, Index N);

/// e_i(z) = z^{k(i)} for i = 1..count.
[[nodiscard]] std::vector<Complex> monomials(std::span<const Complex> z, std::size_t count);

/// det[e_i(H_j)], by row-pivoted elimination. Exact zero when a pivot column
/// vanishes to working precision.
[[nodiscard]] LogComplex vdm_direct(std::span<const PointS> points);

/// Classical det[x_j^i] = prod_{a<b} (x_b - x_a).
[[nodiscard]] LogComplex vdm_1d(std::span<const Complex> x);

/// P_N(z) = prod (z_axis - root): vdm(H_1..H_N, z) = P_N(z) * vdm(H_1..H_N).
struct FactorPolynomial {
    struct Factor {
        std::size_t axis;  // 0-based coordinate slot
        Complex root;
    };
    std::size_t s = 1;
    std::vector<Factor> factors;  // empty product == 1

    [[nodiscard]] Complex operator()(std::span<const Complex> z) const;
    [[nodiscard]] LogComplex eval_log(std::span<const Complex> z) const;
    /// Roots acting on one coordinate.
    [[nodiscard]] std::vector<Complex> roots_on(std::size_t axis) const;
};

/// The factor polynomial of the inductive Vandermonde formula for H_1..H_N.
[[nodiscard]] FactorPolynomial factor_polynomial(std::size_t s, Index N, std::span<const NodeSequence1D> components);

/// prod_{n=1}^{N-1} P_n(H_{n+1}), which equals vdm(H_1..H_N).
[[nodiscard]] LogComplex vdm_telescoped(std::span<const NodeSequence1D> components, Index N);

/// prod_{j=1}^{d} vdm(eta_0..eta_j) * vdm(theta_0..theta_j).
[[nodiscard]] LogComplex schiffer_siciak(std::span<const Complex> etas, std::span<const Complex> thetas,
                                         std::uint64_t d);

struct MultidimLejaStep {
    Index n = 0;                // checks H_{n+1} against H_1..H_n
    double log_value = 0.0;     // log |P_n(H_{n+1})|
    double log_grid_max = 0.0;  // log max over the product boundary grid of |P_n|
    bool ok = false;
};

struct MultidimLejaReport {
    bool accepted = false;
    bool start_on_boundary = false;
    /// 1 when H_1 is off the distinguished boundary; otherwise the first n+1 that fails.
    std::optional<Index> first_failure;
    std::vector<MultidimLejaStep> steps;
};

/// Checks that H_1..H_N of the intertwining sequence form an N-Leja section
/// of K_1 x ... x K_s. The sup of |P_n| over the product splits into one grid
/// sweep per axis. Requires grid_size >= 64 and tol > 0.
[[nodiscard]] MultidimLejaReport verify_multidim_leja(std::span<const NodeSequence1D> components, Index N,
                                                      std::size_t grid_size = 4096, double tol = 1e-6);

/// Coefficients c_i with vdm(H_1..H_n, z) = sum_i c_i e_i(z) (cofactors of the last column).
[[nodiscard]] std::vector<Complex> vdm_last_column_cofactors(std::span<const PointS> points);

/// Brute-force Leja check of arbitrary points of C^s on the torus grid of the
/// closed unit polydisc (grid_per_axis^s samples): every H_{n+1} must attain
/// the grid sup of |vdm(H_1..H_n, z)| up to (1 - tol).
[[nodiscard]] MultidimLejaReport verify_polydisc_leja_brute_force(std::span<const PointS> points,
                                                                  std::size_t grid_per_axis, double tol = 1e-6);

/// First conflict found when trying to read `points` as an intertwining
/// sequence: H_a and H_b demand different values for eta^(axis)_index.
struct IntertwiningConflict {
    std::size_t axis = 0;
    std::size_t index = 0;
    Index first_n = 0;
    Index second_n = 0;
    Complex first_value;
    Complex second_value;

    [[nodiscard]] std::string describe() const;
};

[[nodiscard]] std::optional<IntertwiningConflict> find_intertwining_conflict(std::span<const PointS> points,
                                                                            double tol = 1e-12);

/// Recovers the component sequences from points that are an intertwining
/// sequence; empty optional if they are not.
[[nodiscard]] std::optional<std::vector<std::vector<Complex>>> split_intertwined(std::span<const PointS> points,
                                                                                double tol = 1e-12);

struct CounterexampleReport {
    std::vector<PointS> points;
    double step1_grid_max = 0.0;  // max |vdm(H_1, (z,w))| = max |w - 1|
    double step1_value = 0.0;     // |vdm(H_1, H_2)|
    double step2_grid_max = 0.0;  // max |vdm(H_1, H_2, (z,w))| = max |2(w - z)|
    double step2_value = 0.0;     // |vdm(H_1, H_2, H_3)|
    bool start_on_boundary = false;
    bool is_leja_section = false;
    bool non_intertwining = false;
    std::optional<IntertwiningConflict> conflict;
    /// Neither coordinate sequence is a 3-Leja section of the disk.
    bool components_not_leja = false;
};

/// H_1 = (1,1), H_2 = (-1,-1), H_3 = (e^{i pi/4}, -e^{i pi/4}): a 3-Leja section
/// of the closed bidisc that cannot be an intertwining sequence.
[[nodiscard]] CounterexampleReport counterexample_section(std::size_t grid_per_axis = 1024, double tol = 1e-6);

}  // namespace leja
