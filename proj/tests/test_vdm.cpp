// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lejalab/vdm.hpp"
#include "test_support.hpp"

using namespace leja;
using C = std::complex<double>;

namespace {

const CompactDescriptor disk = CompactDescriptor::unit_disk();

NodeSequence1D unimodular(std::mt19937_64& rng, std::size_t n) {
    return NodeSequence1D(testing::random_unimodular(rng, n, 1e-2), disk);
}

std::vector<std::vector<C>> as_rows(const std::vector<PointS>& pts) { return {pts.begin(), pts.end()}; }

// compares a LogComplex with the independent elimination oracle
void check_against_oracle(const LogComplex& got, const std::vector<PointS>& pts, double rel, double phase_tol) {
    const auto [lg, ph] = testing::reference_log_vdm(as_rows(pts));
    REQUIRE_FALSE(got.is_zero());
    CHECK(std::abs(got.log_magnitude() - lg) <= rel * std::max(1.0, std::abs(lg)));
    CHECK(std::abs(std::remainder(got.phase() - ph, 2 * std::numbers::pi)) <= phase_tol);
}

}  // namespace

TEST_CASE("LogComplex arithmetic and raw value exposure") {
    const auto a = LogComplex::from(C(0, 2));
    CHECK(a.log_magnitude() == doctest::Approx(std::log(2.0)));
    CHECK(a.phase() == doctest::Approx(std::numbers::pi / 2));
    const auto b = a * LogComplex::from(C(0, 3));
    CHECK(std::abs(*b.value() - C(-6, 0)) < 1e-14);
    CHECK(LogComplex::from(0.0).is_zero());
    CHECK((LogComplex::zero() * a).is_zero());
    CHECK_THROWS_AS((void)(a / LogComplex::zero()), std::domain_error);
    CHECK_FALSE(LogComplex(400.0, 0.0).value().has_value());
    CHECK(LogComplex(299.0, 0.0).value().has_value());
}

TEST_CASE("intertwine examples") {
    const std::vector<C> four{1.0, -1.0, C(0, 1), C(0, -1)};
    const std::vector<NodeSequence1D> comps{NodeSequence1D(four, disk), NodeSequence1D(four, disk)};
    const auto h = intertwine(comps, 3);
    REQUIRE(h.size() == 3);
    CHECK(h[0] == PointS{1.0, 1.0});
    CHECK(h[1] == PointS{1.0, -1.0});
    CHECK(h[2] == PointS{-1.0, 1.0});

    const std::vector<NodeSequence1D> three{NodeSequence1D({0.1}, disk), NodeSequence1D({0.2}, disk),
                                            NodeSequence1D({0.3}, disk)};
    CHECK(intertwine(three, 1) == std::vector<PointS>{{0.1, 0.2, 0.3}});

    const std::vector<NodeSequence1D> abc{NodeSequence1D({0.1, 0.2, 0.3}, disk),
                                          NodeSequence1D({0.4, 0.5, 0.6}, disk)};
    CHECK(intertwine(abc, 6).back() == PointS{0.3, 0.4});

    // component too short: the error names the component and the length
    try {
        (void)intertwine(comps, 11);  // needs 4 on each axis... and 5 for k = (4,0) at n = 11
        FAIL("expected an error");
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        CHECK(msg.find("component") != std::string::npos);
        CHECK(msg.find('5') != std::string::npos);
    }
}

TEST_CASE("required_lengths follows the numeration") {
    for (std::size_t s = 1; s <= 3; ++s)
        for (Index N = 1; N <= 60; ++N) {
            std::vector<std::size_t> need(s, 0);
            const auto ks = testing::sorted_multi_indices(s, s == 1 ? 60 : 12);
            for (Index n = 0; n < N; ++n)
                for (std::size_t j = 0; j < s; ++j) need[j] = std::max<std::size_t>(need[j], ks[n][j] + 1);
            CHECK(required_lengths(s, N) == need);
        }
}

TEST_CASE("vdm_direct examples") {
    CHECK(*vdm_direct(std::vector<PointS>{{0.3, C(0, 1)}}).value() == C(1, 0));
    const auto v = vdm_direct(std::vector<PointS>{{1.0, 1.0}, {-1.0, -1.0}, {0.0, 1.0}});
    CHECK(std::abs(*v.value() - C(2, 0)) < 1e-14);
    CHECK(vdm_direct(std::vector<PointS>{{1.0, 1.0}, {1.0, 1.0}}).is_zero());
    // det[[1,1],[theta0,theta1]] in the 1-D case
    CHECK(std::abs(*vdm_1d(std::vector<C>{2.0, 5.0}).value() - C(3, 0)) < 1e-14);
}

TEST_CASE("vdm_direct matches the Leibniz expansion") {
    std::mt19937_64 rng(testing::default_seed);
    for (std::size_t s = 1; s <= 3; ++s)
        for (std::size_t n = 1; n <= 7; ++n) {
            std::vector<PointS> pts(n, PointS(s));
            for (auto& p : pts)
                for (auto& c : p) c = testing::random_disk_point(rng);
            const C ref = testing::reference_vdm(as_rows(pts));
            const C got = *vdm_direct(pts).value();
            CHECK(std::abs(got - ref) <= 1e-10 * std::max(1.0, std::abs(ref)));
        }
}

TEST_CASE("factor_polynomial examples") {
    std::mt19937_64 rng(testing::default_seed + 1);
    const std::vector<NodeSequence1D> comps{unimodular(rng, 6), unimodular(rng, 6)};
    const auto& eta = comps[0];
    const auto& theta = comps[1];

    const auto p1 = factor_polynomial(2, 1, comps);
    REQUIRE(p1.factors.size() == 1);
    CHECK(p1.factors[0].axis == 1);
    CHECK(p1.factors[0].root == theta[0]);

    const auto p3 = factor_polynomial(2, 3, comps);
    CHECK(p3.roots_on(0).empty());
    CHECK(p3.roots_on(1) == std::vector<C>{theta[0], theta[1]});

    const auto p2 = factor_polynomial(2, 2, comps);
    CHECK(p2.roots_on(0) == std::vector<C>{eta[0]});
    CHECK(p2.roots_on(1).empty());
    const auto h = intertwine(comps, 3);
    const LogComplex lhs = vdm_direct(h);
    const LogComplex rhs = p2.eval_log(h[2]) * vdm_direct(std::span<const PointS>(h).first(2));
    CHECK(log_magnitude_rel_diff(lhs, rhs) < 1e-12);
    CHECK(phase_diff(lhs, rhs) < 1e-12);

    // s = 2, theta_0 = 1: vdm(H_1, (z,w)) = w - 1
    const std::vector<NodeSequence1D> ones{disk_leja_section(2), disk_leja_section(2)};
    const C zw[2] = {C(0.3, 0.1), C(-0.5, 0.2)};
    CHECK(std::abs(factor_polynomial(2, 1, ones)(zw) - (zw[1] - 1.0)) < 1e-15);
}

TEST_CASE("factorization identity for s in {2,3}, N <= 20") {
    std::mt19937_64 rng(testing::default_seed + 2);
    for (std::size_t s = 2; s <= 3; ++s) {
        std::vector<NodeSequence1D> comps;
        for (std::size_t j = 0; j < s; ++j) comps.push_back(unimodular(rng, 8));
        for (Index N = 1; N <= 20; ++N) {
            const auto h = intertwine(comps, N);
            const auto P = factor_polynomial(s, N, comps);
            const LogComplex base = vdm_direct(h);
            for (int t = 0; t < 20; ++t) {
                PointS z(s);
                for (auto& c : z) c = testing::random_disk_point(rng);
                auto ext = h;
                ext.push_back(z);
                const LogComplex direct = vdm_direct(ext);
                const C ratio = *(direct / base).value();
                const C fz = P(z);
                CHECK(std::abs(ratio - fz) <= 1e-8 * std::max(std::abs(fz), 1e-3));
            }
        }
    }
}

TEST_CASE("telescoped determinant equals the direct one") {
    std::mt19937_64 rng(testing::default_seed + 3);
    const std::vector<NodeSequence1D> two{unimodular(rng, 8), unimodular(rng, 8)};
    CHECK(*vdm_telescoped(two, 1).value() == C(1, 0));
    CHECK(std::abs(*vdm_telescoped(two, 2).value() - (two[1][1] - two[1][0])) < 1e-14);
    for (std::size_t s = 2; s <= 3; ++s) {
        std::vector<NodeSequence1D> comps;
        for (std::size_t j = 0; j < s; ++j) comps.push_back(unimodular(rng, 8));
        for (Index N = 1; N <= 20; ++N) {
            const LogComplex tel = vdm_telescoped(comps, N);
            check_against_oracle(tel, intertwine(comps, N), 1e-8, 1e-6);
            const LogComplex dir = vdm_direct(intertwine(comps, N));
            CHECK(log_magnitude_rel_diff(tel, dir) < 1e-8);
            CHECK(phase_diff(tel, dir) < 1e-6);
        }
    }
    // six random points: 1e-10 in log-magnitude
    const LogComplex t6 = vdm_telescoped(two, 6);
    const LogComplex d6 = vdm_direct(intertwine(two, 6));
    CHECK(log_magnitude_rel_diff(t6, d6) < 1e-10);
}

TEST_CASE("Schiffer-Siciak product formula") {
    const std::vector<C> none{0.0};
    CHECK(*schiffer_siciak(none, none, 0).value() == C(1, 0));
    const std::vector<C> etas{0.0, 1.0}, thetas{0.0, 2.0};
    CHECK(std::abs(*schiffer_siciak(etas, thetas, 1).value() - C(2, 0)) < 1e-14);

    std::mt19937_64 rng(testing::default_seed + 4);
    const std::vector<NodeSequence1D> comps{unimodular(rng, 9), unimodular(rng, 9)};
    for (std::uint64_t d = 0; d <= 8; ++d) {
        const auto ss = schiffer_siciak(comps[0].points(), comps[1].points(), d);
        const auto h = intertwine(comps, block_size(2, d));
        check_against_oracle(ss, h, 1e-8, 1e-6);
    }
}

TEST_CASE("unisolvence of intertwined prefixes up to N = 30") {
    std::mt19937_64 rng(testing::default_seed + 5);
    const std::vector<NodeSequence1D> comps{unimodular(rng, 8), unimodular(rng, 8)};
    for (Index N = 1; N <= 30; ++N) {
        const auto h = intertwine(comps, N);
        CHECK_FALSE(vdm_direct(h).is_zero());
        CHECK(std::isfinite(testing::reference_log_vdm(as_rows(h)).first));
    }
}

TEST_CASE("multidimensional Leja verification in both directions") {
    const std::vector<NodeSequence1D> leja2{disk_leja_section(5), disk_leja_section(5)};
    CHECK(verify_multidim_leja(leja2, 10).accepted);
    for (Index N = 1; N <= 15; ++N) CHECK(verify_multidim_leja(leja2, N).accepted);

    const std::vector<NodeSequence1D> one{disk_leja_section(1), disk_leja_section(1)};
    CHECK(verify_multidim_leja(one, 1).accepted);

    const C e = std::polar(1.0, std::numbers::pi / 4);
    const NodeSequence1D bad({1.0, -1.0, e, C(0, -1), C(0.6, 0.8)}, disk);
    for (std::size_t axis = 0; axis < 2; ++axis) {
        auto comps = leja2;
        comps[axis] = bad;
        const auto r = verify_multidim_leja(comps, 10);
        CHECK_FALSE(r.accepted);
        CHECK(r.first_failure.has_value());
    }
    // three axes
    const std::vector<NodeSequence1D> leja3{disk_leja_section(4), disk_leja_section(4), disk_leja_section(4)};
    CHECK(verify_multidim_leja(leja3, 15).accepted);
    auto broken3 = leja3;
    broken3[2] = bad;
    CHECK_FALSE(verify_multidim_leja(broken3, 15).accepted);
    // off-boundary start
    const std::vector<NodeSequence1D> inside{NodeSequence1D({0.5, -1.0}, disk), disk_leja_section(2)};
    const auto r0 = verify_multidim_leja(inside, 2);
    CHECK_FALSE(r0.start_on_boundary);
    CHECK_FALSE(r0.accepted);
}

TEST_CASE("brute-force polydisc check agrees with the factorized check") {
    const std::vector<NodeSequence1D> leja2{disk_leja_section(4), disk_leja_section(4)};
    const auto h = intertwine(leja2, 8);
    CHECK(verify_polydisc_leja_brute_force(h, 64).accepted);
    auto perturbed = h;
    perturbed[6][0] *= std::polar(1.0, 0.4);
    CHECK_FALSE(verify_polydisc_leja_brute_force(perturbed, 64).accepted);
}

TEST_CASE("last-column cofactors expand the determinant") {
    std::mt19937_64 rng(testing::default_seed + 6);
    std::vector<PointS> pts(6, PointS(2));
    for (auto& p : pts)
        for (auto& c : p) c = testing::random_disk_point(rng);
    const auto cof = vdm_last_column_cofactors(std::span<const PointS>(pts).first(5));
    const auto order = testing::sorted_multi_indices(2, 3);
    C expansion = 0.0;
    for (std::size_t i = 0; i < 6; ++i) expansion += cof[i] * testing::monomial(pts[5], order[i]);
    const C ref = testing::reference_vdm(as_rows(pts));
    CHECK(std::abs(expansion - ref) < 1e-10 * std::max(1.0, std::abs(ref)));
}

TEST_CASE("the three-point section that is not intertwining") {
    const auto r = counterexample_section();
    REQUIRE(r.points.size() == 3);
    CHECK(r.points[0] == PointS{1.0, 1.0});
    CHECK(r.points[1] == PointS{-1.0, -1.0});
    CHECK(r.start_on_boundary);
    CHECK(r.step1_grid_max == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.step1_value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.step2_grid_max == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(r.step2_value == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(r.is_leja_section);
    CHECK(r.non_intertwining);
    REQUIRE(r.conflict.has_value());
    CHECK(r.conflict->axis == 0);
    CHECK(r.conflict->index == 0);
    CHECK(r.conflict->first_value == C(1, 0));
    CHECK(r.conflict->second_value == C(-1, 0));
    CHECK(r.components_not_leja);

    // an actual intertwining set splits back into its components
    const std::vector<NodeSequence1D> leja2{disk_leja_section(3), disk_leja_section(3)};
    const auto h = intertwine(leja2, 6);
    CHECK_FALSE(find_intertwining_conflict(h).has_value());
    const auto split = split_intertwined(h);
    REQUIRE(split.has_value());
    CHECK((*split)[0] == std::vector<C>(leja2[0].points().begin(), leja2[0].points().end()));
}
