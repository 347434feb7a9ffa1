#pragma once

#include "cohom/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace cohom {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    static RationalMatrix identity(std::size_t n);
    /// Throws std::invalid_argument on ragged input.
    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    [[nodiscard]] const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    [[nodiscard]] std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    [[nodiscard]] RationalMatrix transpose() const;
    /// M * v. Throws std::invalid_argument on a size mismatch.
    [[nodiscard]] std::vector<Rational> multiply(std::span<const Rational> v) const;

    /// Number of stored nonzero entries.
    [[nodiscard]] std::size_t nonzeros() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Exact rank. Rows are scaled to primitive integer vectors and eliminated
/// fraction-free; the pivot of each column is the first remaining row with a
/// nonzero entry there. Deterministic.
[[nodiscard]] std::size_t rank(const RationalMatrix& m);

/// A basis of the null space: exactly cols - rank vectors, one per free
/// column, each with a 1 in its free column.
[[nodiscard]] std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

/// Some x with M x = rhs, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
[[nodiscard]] std::optional<std::vector<Rational>> solve(const RationalMatrix& m, std::span<const Rational> rhs);

} // namespace cohom
