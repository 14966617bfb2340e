// SPDX-License-Identifier: MIT
#include "lejalab/vdm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "lejalab/parallel.hpp"

namespace leja {

// ---------------------------------------------------------------------------
// LogComplex

namespace {

double wrap_phase(double p) {
    constexpr double pi = std::numbers::pi;
    p = std::remainder(p, 2.0 * pi);  // [-pi, pi]
    if (p <= -pi) p += 2.0 * pi;
    return p;
}

}  // namespace

LogComplex::LogComplex(double log_magnitude, double phase) : log_mag_(log_magnitude), phase_(wrap_phase(phase)) {}

LogComplex LogComplex::zero() {
    LogComplex z;
    z.zero_ = true;
    z.log_mag_ = -std::numeric_limits<double>::infinity();
    return z;
}

LogComplex LogComplex::from(Complex z) {
    if (z == Complex{}) return zero();
    return LogComplex(std::log(std::abs(z)), std::arg(z));
}

std::optional<Complex> LogComplex::value() const {
    if (zero_) return Complex{};
    if (!(std::abs(log_mag_) < 300.0)) return std::nullopt;
    return std::polar(std::exp(log_mag_), phase_);
}

LogComplex& LogComplex::operator*=(const LogComplex& o) {
    if (zero_ || o.zero_) return *this = zero();
    log_mag_ += o.log_mag_;
    phase_ = wrap_phase(phase_ + o.phase_);
    return *this;
}

LogComplex& LogComplex::operator/=(const LogComplex& o) {
    if (o.zero_) throw std::domain_error("LogComplex: division by zero");
    if (zero_) return *this;
    log_mag_ -= o.log_mag_;
    phase_ = wrap_phase(phase_ - o.phase_);
    return *this;
}

double log_magnitude_rel_diff(const LogComplex& a, const LogComplex& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero() ? 0.0 : std::numeric_limits<double>::infinity();
    return std::abs(a.log_magnitude() - b.log_magnitude()) / std::max(1.0, std::abs(b.log_magnitude()));
}

double phase_diff(const LogComplex& a, const LogComplex& b) {
    return std::abs(std::remainder(a.phase() - b.phase(), 2.0 * std::numbers::pi));
}

// ---------------------------------------------------------------------------
// Intertwining

std::vector<std::size_t> required_lengths(std::size_t s, Index N) {
    std::vector<std::size_t> need(s, 0);
    if (N == 0) return need;
    // Within the first N indices, the largest k_j is attained at the
    // block boundaries: degree d-1 is complete, degree d is partial.
    MultiIndex k = MultiIndex::zero(s);
    for (Index n = 1; n <= N; ++n) {
        for (std::size_t j = 0; j < s; ++j) need[j] = std::max<std::size_t>(need[j], k[j] + 1);
        if (n < N) k = successor(k);
    }
    return need;
}

IntertwinedSequence::IntertwinedSequence(std::vector<NodeSequence1D> components) : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("IntertwinedSequence: dimension must be >= 1");
}

Index IntertwinedSequence::max_count() const {
    // H_n exists iff k_j(n) < size_j for all j; the first missing n is the
    // first multi-index with some k_j == size_j.
    const std::size_t s = dim();
    std::size_t shortest = components_[0].size();
    for (const auto& c : components_) shortest = std::min(shortest, c.size());
    if (shortest == 0) return 0;
    Index n = 0;
    MultiIndex k = MultiIndex::zero(s);
    for (;;) {
        for (std::size_t j = 0; j < s; ++j)
            if (k[j] >= components_[j].size()) return n;
        ++n;
        k = successor(k);
    }
}

PointS IntertwinedSequence::point(Index n) const {
    const MultiIndex k = index_to_multi(dim(), n);
    PointS h(dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        if (k[j] >= components_[j].size())
            throw std::invalid_argument("intertwine: component " + std::to_string(j + 1) + " has " +
                                        std::to_string(components_[j].size()) + " points, H_" + std::to_string(n) +
                                        " needs " + std::to_string(k[j] + 1));
        h[j] = components_[j][k[j]];
    }
    return h;
}

std::vector<PointS> IntertwinedSequence::points(Index N) const {
    const auto need = required_lengths(dim(), N);
    for (std::size_t j = 0; j < dim(); ++j) {
        if (components_[j].size() < need[j])
            throw std::invalid_argument("intertwine: component " + std::to_string(j + 1) + " has " +
                                        std::to_string(components_[j].size()) + " points, N = " + std::to_string(N) +
                                        " requires " + std::to_string(need[j]));
    }
    std::vector<PointS> out;
    out.reserve(N);
    if (N == 0) return out;
    MultiIndex k = MultiIndex::zero(dim());
    for (Index n = 1; n <= N; ++n) {
        PointS h(dim());
        for (std::size_t j = 0; j < dim(); ++j) h[j] = components_[j][k[j]];
        out.push_back(std::move(h));
        if (n < N) k = successor(k);
    }
    return out;
}

std::vector<PointS> intertwine(std::span<const NodeSequence1D> components, Index N) {
    return IntertwinedSequence({components.begin(), components.end()}).points(N);
}

// ---------------------------------------------------------------------------
// Determinants

std::vector<Complex> monomials(std::span<const Complex> z, std::size_t count) {
    const std::size_t s = z.size();
    std::vector<Complex> out;
    out.reserve(count);
    if (count == 0) return out;
    const auto dmax = degree_of_index(s, count);
    // powers[j][e] = z_j^e
    std::vector<std::vector<Complex>> powers(s, std::vector<Complex>(dmax + 1));
    for (std::size_t j = 0; j < s; ++j) {
        powers[j][0] = 1.0;
        for (std::uint64_t e = 1; e <= dmax; ++e) powers[j][e] = powers[j][e - 1] * z[j];
    }
    MultiIndex k = MultiIndex::zero(s);
    for (std::size_t i = 0; i < count; ++i) {
        Complex v = 1.0;
        for (std::size_t j = 0; j < s; ++j) v *= powers[j][k[j]];
        out.push_back(v);
        if (i + 1 < count) k = successor(k);
    }
    return out;
}

namespace {

// Determinant of an n x n row-major matrix by partial pivoting.
LogComplex lu_determinant(std::vector<Complex> a, std::size_t n) {
    if (n == 0) return LogComplex{};
    double scale = 0.0;
    for (const auto& x : a) scale = std::max(scale, std::abs(x));
    if (scale == 0.0) return LogComplex::zero();
    const double tiny = static_cast<double>(n) * std::numeric_limits<double>::epsilon() * scale;

    LogComplex det;
    bool negate = false;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        double best = std::abs(a[c * n + c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            const double v = std::abs(a[r * n + c]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best <= tiny) return LogComplex::zero();
        if (piv != c) {
            std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(c * n),
                             a.begin() + static_cast<std::ptrdiff_t>((c + 1) * n),
                             a.begin() + static_cast<std::ptrdiff_t>(piv * n));
            negate = !negate;
        }
        const Complex p = a[c * n + c];
        det *= LogComplex::from(p);
        for (std::size_t r = c + 1; r < n; ++r) {
            const Complex f = a[r * n + c] / p;
            if (f == Complex{}) continue;
            for (std::size_t k = c + 1; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
        }
    }
    if (negate) det *= LogComplex(0.0, std::numbers::pi);
    return det;
}

// Row-major matrix with entry (i, j) = e_i(H_j).
std::vector<Complex> vandermonde_matrix(std::span<const PointS> points) {
    const std::size_t n = points.size();
    std::vector<Complex> a(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto col = monomials(points[j], n);
        for (std::size_t i = 0; i < n; ++i) a[i * n + j] = col[i];
    }
    return a;
}

void check_same_dim(std::span<const PointS> points) {
    if (points.empty()) return;
    const std::size_t s = points[0].size();
    if (s == 0) throw std::invalid_argument("vdm: points must have dimension >= 1");
    for (const auto& p : points)
        if (p.size() != s) throw std::invalid_argument("vdm: points of mixed dimension");
}

}  // namespace

LogComplex vdm_direct(std::span<const PointS> points) {
    check_same_dim(points);
    return lu_determinant(vandermonde_matrix(points), points.size());
}

LogComplex vdm_1d(std::span<const Complex> x) {
    LogComplex v;
    for (std::size_t b = 1; b < x.size(); ++b)
        for (std::size_t a = 0; a < b; ++a) v *= LogComplex::from(x[b] - x[a]);
    return v;
}

std::vector<Complex> vdm_last_column_cofactors(std::span<const PointS> points) {
    check_same_dim(points);
    const std::size_t n = points.size();
    const std::size_t m = n + 1;
    // Rows e_1..e_{n+1} evaluated at H_1..H_n.
    std::vector<std::vector<Complex>> cols;
    cols.reserve(n);
    for (const auto& h : points) cols.push_back(monomials(h, m));
    std::vector<Complex> coeff(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Complex> minor;
        minor.reserve(n * n);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == i) continue;
            for (std::size_t c = 0; c < n; ++c) minor.push_back(cols[c][r]);
        }
        const auto det = lu_determinant(std::move(minor), n).value();
        if (!det) throw std::overflow_error("vdm_last_column_cofactors: cofactor out of double range");
        // sign (-1)^{(i+1)+(n+1)} with 1-based row i+1 and column n+1
        coeff[i] = ((i + n) % 2 == 0) ? *det : -*det;
    }
    return coeff;
}

// ---------------------------------------------------------------------------
// Inductive factorization

Complex FactorPolynomial::operator()(std::span<const Complex> z) const {
    Complex v = 1.0;
    for (const auto& f : factors) v *= z[f.axis] - f.root;
    return v;
}

LogComplex FactorPolynomial::eval_log(std::span<const Complex> z) const {
    LogComplex v;
    for (const auto& f : factors) v *= LogComplex::from(z[f.axis] - f.root);
    return v;
}

std::vector<Complex> FactorPolynomial::roots_on(std::size_t axis) const {
    std::vector<Complex> r;
    for (const auto& f : factors)
        if (f.axis == axis) r.push_back(f.root);
    return r;
}

FactorPolynomial factor_polynomial(std::size_t s, Index N, std::span<const NodeSequence1D> components) {
    if (components.size() != s) throw std::invalid_argument("factor_polynomial: need one component per axis");
    if (N == 0) throw std::invalid_argument("factor_polynomial: N must be >= 1");
    FactorPolynomial P;
    P.s = s;
    auto take = [&](std::size_t axis, std::size_t count) {
        const auto& comp = components[axis];
        if (comp.size() < count)
            throw std::invalid_argument("factor_polynomial: component " + std::to_string(axis + 1) + " has " +
                                        std::to_string(comp.size()) + " points, P_" + std::to_string(N) + " needs " +
                                        std::to_string(count));
        for (std::size_t i = 0; i < count; ++i) P.factors.push_back({axis, comp[i]});
    };

    const MultiIndex k = index_to_multi(s, N);
    const std::uint64_t d = k.degree();
    std::size_t m = 0;  // 1-based position of the last nonzero exponent
    for (std::size_t j = s; j-- > 0;) {
        if (k[j] != 0) {
            m = j + 1;
            break;
        }
    }
    if (m <= 1) {
        // k(N) = (d, 0, ..., 0), N = N_d: prod_{i=0}^{d} (z_s - eta^(s)_i)
        take(s - 1, d + 1);
        return P;
    }
    for (std::size_t j = 1; j + 2 <= m; ++j) take(j - 1, k[j - 1]);  // j = 1..m-2: i < k_j
    take(m - 2, std::size_t{k[m - 2]} + 1);                            // i <= k_{m-1}
    take(s - 1, std::size_t{k[m - 1]} - 1);                            // i <= k_m - 2
    return P;
}

LogComplex vdm_telescoped(std::span<const NodeSequence1D> components, Index N) {
    const std::size_t s = components.size();
    const auto H = intertwine(components, N);
    LogComplex v;
    for (Index n = 1; n < N; ++n) v *= factor_polynomial(s, n, components).eval_log(H[n]);
    return v;
}

LogComplex schiffer_siciak(std::span<const Complex> etas, std::span<const Complex> thetas, std::uint64_t d) {
    if (etas.size() < d + 1 || thetas.size() < d + 1)
        throw std::invalid_argument("schiffer_siciak: need at least d+1 nodes per axis");
    LogComplex v;
    for (std::uint64_t j = 1; j <= d; ++j) {
        v *= vdm_1d(etas.first(j + 1));
        v *= vdm_1d(thetas.first(j + 1));
    }
    return v;
}

// ---------------------------------------------------------------------------
// Multidimensional Leja verification

MultidimLejaReport verify_multidim_leja(std::span<const NodeSequence1D> components, Index N, std::size_t grid_size,
                                        double tol) {
    if (grid_size < 64) throw std::invalid_argument("verify_multidim_leja: grid_size must be >= 64");
    if (!(tol > 0.0)) throw std::invalid_argument("verify_multidim_leja: tol must be > 0");
    const std::size_t s = components.size();
    const auto H = intertwine(components, N);
    MultidimLejaReport report;
    if (N == 0) return report;

    report.start_on_boundary = true;
    for (std::size_t j = 0; j < s; ++j)
        report.start_on_boundary = report.start_on_boundary && components[j].compact().on_boundary(H[0][j]);
    if (!report.start_on_boundary) report.first_failure = 1;

    std::vector<std::vector<Complex>> grids;
    for (const auto& c : components) grids.push_back(c.compact().boundary_grid(grid_size));

    const double log_slack = std::log1p(-tol);
    for (Index n = 1; n < N; ++n) {
        const auto P = factor_polynomial(s, n, components);
        MultidimLejaStep step;
        step.n = n;
        for (std::size_t j = 0; j < s; ++j) {
            const auto roots = P.roots_on(j);
            if (!roots.empty()) step.log_grid_max += max_log_product(roots, grids[j]).log_value;
        }
        const auto v = P.eval_log(H[n]);
        step.log_value = v.log_magnitude();
        step.ok = step.log_value >= step.log_grid_max + log_slack;
        if (!step.ok && !report.first_failure) report.first_failure = n + 1;
        report.steps.push_back(step);
    }
    report.accepted = !report.first_failure.has_value();
    return report;
}

MultidimLejaReport verify_polydisc_leja_brute_force(std::span<const PointS> points, std::size_t grid_per_axis,
                                                    double tol) {
    check_same_dim(points);
    if (grid_per_axis < 64) throw std::invalid_argument("verify_polydisc_leja_brute_force: grid_per_axis must be >= 64");
    MultidimLejaReport report;
    if (points.empty()) return report;
    const std::size_t s = points[0].size();
    const std::size_t N = points.size();

    report.start_on_boundary = std::all_of(points[0].begin(), points[0].end(),
                                           [](Complex c) { return std::abs(std::abs(c) - 1.0) <= 1e-9; });
    if (!report.start_on_boundary) report.first_failure = 1;

    const auto circle = torus_grid(grid_per_axis);
    std::size_t total = 1;
    for (std::size_t j = 0; j < s; ++j) total *= grid_per_axis;

    const double log_slack = std::log1p(-tol);
    for (std::size_t n = 1; n < N; ++n) {
        const auto coeff = vdm_last_column_cofactors(points.first(n));
        auto form = [&](std::span<const Complex> z) {
            const auto e = monomials(z, n + 1);
            Complex v = 0.0;
            for (std::size_t i = 0; i <= n; ++i) v += coeff[i] * e[i];
            return v;
        };
        std::vector<double> partial(chunk_count(total), 0.0);
        parallel_chunks(total, [&](std::size_t c, std::size_t b, std::size_t e) {
            PointS z(s);
            double best = 0.0;
            for (std::size_t idx = b; idx < e; ++idx) {
                std::size_t rest = idx;
                for (std::size_t j = s; j-- > 0;) {
                    z[j] = circle[rest % grid_per_axis];
                    rest /= grid_per_axis;
                }
                best = std::max(best, std::abs(form(z)));
            }
            partial[c] = best;
        });
        const double grid_max = *std::max_element(partial.begin(), partial.end());
        const double value = std::abs(form(points[n]));
        MultidimLejaStep step;
        step.n = n;
        step.log_value = std::log(value);
        step.log_grid_max = std::log(grid_max);
        step.ok = step.log_value >= step.log_grid_max + log_slack;
        if (!step.ok && !report.first_failure) report.first_failure = n + 1;
        report.steps.push_back(step);
    }
    report.accepted = !report.first_failure.has_value();
    return report;
}

// ---------------------------------------------------------------------------
// Intertwining structure

std::string IntertwiningConflict::describe() const {
    std::ostringstream os;
    os.precision(17);
    os << "H_" << first_n << " forces eta^(" << axis + 1 << ")_" << index << " = (" << first_value.real() << ","
       << first_value.imag() << ") but H_" << second_n << " forces (" << second_value.real() << ","
       << second_value.imag() << ")";
    return os.str();
}

namespace {

struct SplitResult {
    std::vector<std::vector<Complex>> values;
    std::optional<IntertwiningConflict> conflict;
};

SplitResult split(std::span<const PointS> points, double tol) {
    check_same_dim(points);
    SplitResult r;
    if (points.empty()) return r;
    const std::size_t s = points[0].size();
    r.values.assign(s, {});
    std::vector<std::vector<Index>> source(s);
    MultiIndex k = MultiIndex::zero(s);
    for (Index n = 1; n <= points.size(); ++n) {
        for (std::size_t j = 0; j < s; ++j) {
            const std::size_t i = k[j];
            const Complex v = points[n - 1][j];
            if (i == r.values[j].size()) {
                r.values[j].push_back(v);
                source[j].push_back(n);
            } else if (std::abs(r.values[j][i] - v) > tol) {
                r.conflict = IntertwiningConflict{j, i, source[j][i], n, r.values[j][i], v};
                return r;
            }
        }
        k = successor(k);
    }
    return r;
}

}  // namespace

std::optional<IntertwiningConflict> find_intertwining_conflict(std::span<const PointS> points, double tol) {
    return split(points, tol).conflict;
}

std::optional<std::vector<std::vector<Complex>>> split_intertwined(std::span<const PointS> points, double tol) {
    auto r = split(points, tol);
    if (r.conflict) return std::nullopt;
    return std::move(r.values);
}

CounterexampleReport counterexample_section(std::size_t grid_per_axis, double tol) {
    const Complex e = DyadicAngle(1, 2).unit();  // e^{i pi/4}
    CounterexampleReport r;
    r.points = {{1.0, 1.0}, {-1.0, -1.0}, {e, -e}};

    const auto leja = verify_polydisc_leja_brute_force(r.points, grid_per_axis, tol);
    r.start_on_boundary = leja.start_on_boundary;
    r.is_leja_section = leja.accepted;
    r.step1_value = std::exp(leja.steps[0].log_value);
    r.step1_grid_max = std::exp(leja.steps[0].log_grid_max);
    r.step2_value = std::exp(leja.steps[1].log_value);
    r.step2_grid_max = std::exp(leja.steps[1].log_grid_max);

    r.conflict = find_intertwining_conflict(r.points);
    r.non_intertwining = r.conflict.has_value();

    const auto disk = CompactDescriptor::unit_disk();
    const NodeSequence1D first({1.0, -1.0, e}, {DyadicAngle{}, DyadicAngle(1, 0), DyadicAngle(1, 2)}, disk);
    const NodeSequence1D second({1.0, -1.0, -e}, {DyadicAngle{}, DyadicAngle(1, 0), DyadicAngle(5, 2)}, disk);
    r.components_not_leja = !verify_leja_section(first).accepted && !verify_leja_section(second).accepted;
    return r;
}

}  // namespace leja
