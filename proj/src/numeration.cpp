// SPDX-License-Identifier: MIT
#include "lejalab/numeration.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace leja {

MultiIndex::MultiIndex(std::vector<Exponent> components) : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("MultiIndex: dimension must be >= 1");
}

MultiIndex::MultiIndex(std::initializer_list<Exponent> components)
    : MultiIndex(std::vector<Exponent>(components)) {}

MultiIndex MultiIndex::zero(std::size_t s) { return MultiIndex(std::vector<Exponent>(s, 0)); }

std::uint64_t MultiIndex::degree() const noexcept {
    return std::accumulate(components_.begin(), components_.end(), std::uint64_t{0});
}

std::string MultiIndex::to_string() const {
    std::string out = "(";
    for (std::size_t j = 0; j < components_.size(); ++j) {
        if (j) out += ',';
        out += std::to_string(components_[j]);
    }
    return out + ")";
}

std::strong_ordering compare(const MultiIndex& k, const MultiIndex& l) {
    if (k.dim() != l.dim()) {
        throw std::invalid_argument("compare: dimension mismatch (" + std::to_string(k.dim()) +
                                    " vs " + std::to_string(l.dim()) + ")");
    }
    if (auto c = k.degree() <=> l.degree(); c != 0) return c;
    for (std::size_t j = 0; j < k.dim(); ++j) {
        if (auto c = k[j] <=> l[j]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

Index block_size(std::size_t s, std::uint64_t d) {
    if (s == 0) throw std::invalid_argument("block_size: dimension must be >= 1");
    // binom(s+d, s) == binom(s+d, d); iterate over the smaller of the two.
    __extension__ using wide = unsigned __int128;
    const wide a = std::min<wide>(s, d);
    const wide b = std::max<wide>(s, d);
    constexpr wide limit = std::numeric_limits<Index>::max();
    wide r = 1;
    for (wide i = 1; i <= a; ++i) {
        r = r * (b + i) / i;  // exact: r is binom(b+i, i) after this step
        if (r > limit) {
            throw std::overflow_error("block_size: binom(" + std::to_string(s + d) + ", " +
                                      std::to_string(s) + ") exceeds 64 bits");
        }
    }
    return static_cast<Index>(r);
}

DegreeBlock degree_block(std::size_t s, std::uint64_t d) {
    const Index end = block_size(s, d);
    const Index before = d == 0 ? 0 : block_size(s, d - 1);
    return DegreeBlock{s, d, before + 1, end};
}

namespace {

// Number of t-tuples of non-negative integers summing to e.
Index compositions(std::uint64_t e, std::size_t t) {
    if (t == 0) return e == 0 ? 1 : 0;
    if (t == 1) return 1;
    return block_size(t - 1, e);
}

bool block_at_least(std::size_t s, std::uint64_t d, Index n) {
    try {
        return block_size(s, d) >= n;
    } catch (const std::overflow_error&) {
        return true;
    }
}

}  // namespace

std::uint64_t degree_of_index(std::size_t s, Index n) {
    if (s == 0) throw std::invalid_argument("degree_of_index: dimension must be >= 1");
    if (n == 0) throw std::invalid_argument("degree_of_index: indices are 1-based");
    if (s == 1) return n - 1;
    // Smallest d with N_d >= n; N_d >= d+1 bounds the search by n-1.
    std::uint64_t lo = 0, hi = n - 1;
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (block_at_least(s, mid, n)) hi = mid;
        else lo = mid + 1;
    }
    return lo;
}

MultiIndex index_to_multi(std::size_t s, Index n) {
    const std::uint64_t d = degree_of_index(s, n);
    Index rank = n - (d == 0 ? 0 : block_size(s, d - 1)) - 1;
    std::vector<Exponent> k(s, 0);
    std::uint64_t rem = d;
    for (std::size_t j = 0; j + 1 < s; ++j) {
        for (std::uint64_t a = 0; a <= rem; ++a) {
            const Index c = compositions(rem - a, s - 1 - j);
            if (rank < c) {
                k[j] = static_cast<Exponent>(a);
                rem -= a;
                break;
            }
            rank -= c;
        }
    }
    k[s - 1] = static_cast<Exponent>(rem);
    return MultiIndex(std::move(k));
}

Index multi_to_index(const MultiIndex& k) {
    const std::size_t s = k.dim();
    if (s == 0) throw std::invalid_argument("multi_to_index: empty multi-index");
    const std::uint64_t d = k.degree();
    Index idx = (d == 0 ? 0 : block_size(s, d - 1)) + 1;
    std::uint64_t rem = d;
    for (std::size_t j = 0; j + 1 < s; ++j) {
        for (std::uint64_t a = 0; a < k[j]; ++a) idx += compositions(rem - a, s - 1 - j);
        rem -= k[j];
    }
    return idx;
}

MultiIndex successor(const MultiIndex& k) {
    const std::size_t s = k.dim();
    if (s == 0) throw std::invalid_argument("successor: empty multi-index");
    std::vector<Exponent> r = k.components();

    // m = position (1-based) of the last nonzero component
    std::size_t m = 0;
    for (std::size_t j = s; j-- > 0;) {
        if (r[j] != 0) {
            m = j + 1;
            break;
        }
    }
    if (m <= 1) {
        // k = (d, 0, ..., 0): last index of its block, next is (0, ..., 0, d+1)
        const Exponent d = r[0];
        std::fill(r.begin(), r.end(), 0);
        r[s - 1] = d + 1;
        return MultiIndex(std::move(r));
    }
    const Exponent km = r[m - 1];
    r[m - 2] += 1;
    r[m - 1] = 0;
    r[s - 1] = km - 1;
    return MultiIndex(std::move(r));
}

std::vector<MultiIndex> enumerate(std::size_t s, Index count) {
    std::vector<MultiIndex> out;
    out.reserve(count);
    if (count == 0) return out;
    out.push_back(MultiIndex::zero(s));
    while (out.size() < count) out.push_back(successor(out.back()));
    return out;
}

}  // namespace leja
