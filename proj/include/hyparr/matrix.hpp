#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "hyparr/rational.hpp"

namespace hyparr {

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    RationalVector row_vector(std::size_t r) const;

    void append_row(std::span<const Rational> values);
    void swap_rows(std::size_t a, std::size_t b);
    void truncate_rows(std::size_t n);

    friend bool operator==(const Matrix&, const Matrix&) = default;
    friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row echelon form with the pivot column of every nonzero row.
/// Zero rows are dropped, so `reduced.rows() == pivots.size()` is the rank.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;

    std::size_t rank() const noexcept { return pivots.size(); }

    /// Reduces `v` against the rows; the result is zero iff v lies in the row space.
    RationalVector residual(std::span<const Rational> v) const;
    bool contains(std::span<const Rational> v) const;

    /// Adds a vector to the row space; returns false if it was already there.
    bool insert(std::span<const Rational> v);
};

Echelon row_echelon(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}, returned as the rows of a matrix in reduced echelon form.
Matrix nullspace(const Matrix& m);

Rational determinant(Matrix m);

}  // namespace hyparr
