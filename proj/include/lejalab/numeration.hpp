// SPDX-License-Identifier: MIT
#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

/// Graded-lexicographic numeration of N^s.
///
/// Indices are 1-based throughout: n = 1 is the zero multi-index, and the
/// block of total degree d occupies n in (N_{d-1}, N_d] with N_d = binom(s+d, s).
namespace leja {

using Exponent = std::uint32_t;
using Index = std::uint64_t;

/// An s-tuple of non-negative exponents, s >= 1.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<Exponent> components);
    MultiIndex(std::initializer_list<Exponent> components);

    /// The zero multi-index of dimension s.
    static MultiIndex zero(std::size_t s);

    [[nodiscard]] std::size_t dim() const noexcept { return components_.size(); }
    [[nodiscard]] std::uint64_t degree() const noexcept;
    [[nodiscard]] Exponent operator[](std::size_t j) const { return components_[j]; }
    [[nodiscard]] const std::vector<Exponent>& components() const noexcept { return components_; }

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<Exponent> components_;
};

/// Graded-lex comparison: total degree first, then lexicographic on (k_1, ..., k_s).
/// Throws std::invalid_argument on dimension mismatch.
[[nodiscard]] std::strong_ordering compare(const MultiIndex& k, const MultiIndex& l);

/// N_d = binom(s+d, s), the number of multi-indices of total degree <= d.
/// Throws std::overflow_error if the value does not fit in 64 bits.
[[nodiscard]] Index block_size(std::size_t s, std::uint64_t d);

/// Bookkeeping for the degree-d block: indices start_index..end_index (1-based).
struct DegreeBlock {
    std::size_t s = 1;
    std::uint64_t d = 0;
    Index start_index = 1;
    Index end_index = 1;

    [[nodiscard]] Index size() const noexcept { return end_index - start_index + 1; }
};

[[nodiscard]] DegreeBlock degree_block(std::size_t s, std::uint64_t d);

/// Total degree of the n-th multi-index, i.e. the d with N_{d-1} < n <= N_d.
[[nodiscard]] std::uint64_t degree_of_index(std::size_t s, Index n);

/// k(n), the n-th multi-index in graded-lex order (n >= 1).
[[nodiscard]] MultiIndex index_to_multi(std::size_t s, Index n);

/// Inverse of index_to_multi.
[[nodiscard]] Index multi_to_index(const MultiIndex& k);

/// k(n+1) given k = k(n), via the closed-form case split (no enumeration).
[[nodiscard]] MultiIndex successor(const MultiIndex& k);

/// First `count` multi-indices k(1), ..., k(count).
[[nodiscard]] std::vector<MultiIndex> enumerate(std::size_t s, Index count);

}  // namespace leja
