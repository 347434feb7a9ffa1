#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace cohom {

/// An n-tuple of naturals (alpha_1, ..., alpha_n) indexing the elementary
/// operator that differentiates the i-th argument alpha_i times.
///
/// Ordered graded-lexicographically: first by total weight |alpha|, then
/// lexicographically. This order fixes every matrix layout in the library.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<unsigned> entries) : entries_(std::move(entries)) {}
    MultiIndex(std::initializer_list<unsigned> entries) : entries_(entries) {}

    static MultiIndex zero(std::size_t n) { return MultiIndex(std::vector<unsigned>(n, 0)); }
    /// The canonical basis vector e_i (0-based i).
    static MultiIndex unit(std::size_t n, std::size_t i);

    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] unsigned operator[](std::size_t i) const { return entries_.at(i); }
    [[nodiscard]] const std::vector<unsigned>& entries() const noexcept { return entries_; }
    [[nodiscard]] unsigned total() const noexcept;

    /// alpha + e_i
    [[nodiscard]] MultiIndex incremented(std::size_t i) const;
    /// alpha - e_i. Throws std::logic_error if alpha_i == 0: a negative
    /// index is always a bug in the caller.
    [[nodiscard]] MultiIndex decremented(std::size_t i) const;

    /// "[a1,a2,...,an]"
    [[nodiscard]] std::string str() const;
    /// Inverse of str(); throws std::invalid_argument.
    static MultiIndex parse(const std::string& text);

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);
    friend std::ostream& operator<<(std::ostream& os, const MultiIndex& a) { return os << a.str(); }

private:
    std::vector<unsigned> entries_;
};

/// C(a, b), zero when b < 0, a < 0 or a < b. Throws std::overflow_error
/// if the result does not fit in 64 bits.
[[nodiscard]] std::uint64_t binomial(long a, long b);

/// Number of multi-indices in N^m with total weight k, i.e. C(m+k-1, k).
/// Conventions: Gamma_m^0 = 1 for every m >= 0, Gamma_m^k = 0 for k < 0.
[[nodiscard]] std::uint64_t multiset_coeff(long m, long k);

/// All alpha in N^n with |alpha| = weight, ascending graded-lex order.
[[nodiscard]] std::vector<MultiIndex> enumerate_multiindices(std::size_t n, unsigned weight);

/// All alpha in N^n with |alpha| <= max_weight, ascending graded-lex order.
[[nodiscard]] std::vector<MultiIndex> enumerate_multiindices_upto(std::size_t n, unsigned max_weight);

} // namespace cohom
