// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "lejalab/numeration.hpp"
#include "test_support.hpp"

using namespace leja;

TEST_CASE("block_size examples") {
    CHECK(block_size(2, 2) == 6);  // (d+1)(d+2)/2 at d = 2
    CHECK(block_size(1, 7) == 8);
    // brute-force count of |k| <= 1 in N^3
    CHECK(block_size(3, 1) == testing::sorted_multi_indices(3, 1).size());
    CHECK(block_size(3, 1) == 4);
    CHECK(block_size(4, 0) == 1);
}

TEST_CASE("block_size matches the bidimensional closed form and is monotone") {
    for (std::uint64_t d = 0; d < 200; ++d) {
        CHECK(block_size(2, d) == (d + 1) * (d + 2) / 2);
        CHECK(block_size(3, d + 1) > block_size(3, d));
    }
}

TEST_CASE("block_size reports overflow instead of wrapping") {
    CHECK_THROWS_AS((void)block_size(40, 1000), std::overflow_error);
    CHECK_THROWS_AS((void)block_size(2, std::uint64_t{1} << 40), std::overflow_error);
    CHECK_NOTHROW((void)block_size(2, std::uint64_t{1} << 30));
    CHECK_THROWS_AS((void)block_size(0, 3), std::invalid_argument);
}

TEST_CASE("degree_block bookkeeping") {
    const auto b = degree_block(2, 3);
    CHECK(b.start_index == 7);
    CHECK(b.end_index == 10);
    CHECK(b.size() == 4);
    for (std::size_t s = 1; s <= 4; ++s)
        for (std::uint64_t d = 0; d <= 6; ++d) {
            const auto blk = degree_block(s, d);
            std::size_t exact = 0;
            for (const auto& k : testing::sorted_multi_indices(s, static_cast<std::uint32_t>(d))) {
                std::uint32_t deg = 0;
                for (auto v : k) deg += v;
                exact += deg == d;
            }
            CHECK(blk.size() == exact);
        }
}

TEST_CASE("compare examples") {
    CHECK(compare({0, 2}, {1, 1}) == std::strong_ordering::less);
    CHECK(compare({1, 0, 0}, {0, 0, 2}) == std::strong_ordering::less);
    CHECK(compare({0, 1, 1}, {0, 1, 1}) == std::strong_ordering::equal);
    CHECK(compare({2, 0}, {0, 2}) == std::strong_ordering::greater);
    CHECK_THROWS_AS((void)compare({1, 0}, {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("compare is a strict total order on small prefixes") {
    for (std::size_t s = 1; s <= 3; ++s) {
        const auto all = testing::sorted_multi_indices(s, 5);
        std::vector<MultiIndex> ks;
        for (const auto& k : all) ks.emplace_back(k);
        for (std::size_t a = 0; a < ks.size(); ++a) {
            for (std::size_t b = 0; b < ks.size(); ++b) {
                const auto ab = compare(ks[a], ks[b]);
                const auto ba = compare(ks[b], ks[a]);
                // matches the brute-force sort position and is antisymmetric
                CHECK((ab == std::strong_ordering::less) == (a < b));
                CHECK((ab == std::strong_ordering::equal) == (a == b));
                CHECK((ab < 0) == (ba > 0));
            }
        }
        // transitivity on consecutive triples is implied by agreement with a sort,
        // spot-check it directly too
        for (std::size_t a = 0; a + 2 < ks.size(); a += 3)
            CHECK(compare(ks[a], ks[a + 2]) == std::strong_ordering::less);
    }
}

TEST_CASE("index_to_multi examples") {
    CHECK(index_to_multi(3, 1) == MultiIndex{0, 0, 0});
    CHECK(index_to_multi(3, 2) == MultiIndex{0, 0, 1});
    CHECK(index_to_multi(3, 3) == MultiIndex{0, 1, 0});
    CHECK(index_to_multi(3, 4) == MultiIndex{1, 0, 0});
    CHECK(index_to_multi(3, 5) == MultiIndex{0, 0, 2});
    CHECK(index_to_multi(3, 6) == MultiIndex{0, 1, 1});
    CHECK(index_to_multi(2, 5) == MultiIndex{1, 1});
    CHECK(index_to_multi(1, 9) == MultiIndex{8});
}

TEST_CASE("multi_to_index examples") {
    CHECK(multi_to_index({0, 0, 0}) == 1);
    CHECK(multi_to_index({0, 1, 1}) == 6);
    CHECK(multi_to_index({2, 0}) == 6);
}

TEST_CASE("successor examples") {
    CHECK(successor({2, 0}) == MultiIndex{0, 3});
    CHECK(successor({0, 0, 0}) == MultiIndex{0, 0, 1});
    // brute-force sorted enumeration of degree 2 in N^3:
    // (0,0,2) (0,1,1) (0,2,0) (1,0,1) (1,1,0) (2,0,0)
    const auto sorted = testing::sorted_multi_indices(3, 2);
    CHECK(MultiIndex(sorted[5]) == MultiIndex{0, 1, 1});
    CHECK(successor({0, 1, 1}) == MultiIndex(sorted[6]));
    CHECK(successor({0, 1, 1}) == MultiIndex{0, 2, 0});
}

TEST_CASE("numeration agrees with the brute-force sorted enumeration") {
    for (std::size_t s = 1; s <= 4; ++s) {
        const auto sorted = testing::sorted_multi_indices(s, s == 1 ? 60 : (s == 2 ? 20 : 8));
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            const MultiIndex k(sorted[i]);
            CHECK(index_to_multi(s, i + 1) == k);
            CHECK(multi_to_index(k) == i + 1);
        }
    }
}

TEST_CASE("bijection, successor consistency and block boundaries for s <= 4, n <= 2000") {
    for (std::size_t s = 1; s <= 4; ++s) {
        MultiIndex prev = index_to_multi(s, 1);
        for (Index n = 1; n <= 2000; ++n) {
            const MultiIndex k = index_to_multi(s, n);
            REQUIRE(multi_to_index(k) == n);
            if (n > 1) REQUIRE(successor(prev) == k);
            prev = k;
        }
        for (std::uint64_t d = 0; block_size(s, d) <= 2000; ++d) {
            std::vector<Exponent> top(s, 0);
            top[0] = static_cast<Exponent>(d);
            CHECK(index_to_multi(s, block_size(s, d)) == MultiIndex(top));
        }
    }
}

TEST_CASE("enumerate and degree_of_index") {
    const auto ks = enumerate(2, 10);
    REQUIRE(ks.size() == 10);
    CHECK(ks[9] == MultiIndex{3, 0});
    CHECK(degree_of_index(2, 10) == 3);
    CHECK(degree_of_index(2, 11) == 4);
    CHECK(degree_of_index(5, 1) == 0);
    CHECK_THROWS_AS((void)index_to_multi(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(MultiIndex(std::vector<Exponent>{}), std::invalid_argument);
    // very large indices stay exact
    const Index big = block_size(2, 1'000'000);
    CHECK(index_to_multi(2, big) == MultiIndex{1'000'000, 0});
    CHECK(index_to_multi(2, big + 1) == MultiIndex{0, 1'000'001});
}
