#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "staudt/scalar.hpp"

namespace staudt {

/// Dense row-major matrix of exact scalars sharing one field.
class Matrix
{
public:
    Matrix() = default;
    Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);

    static Matrix identity(const FieldSpec& field, std::size_t size);
    /// Matrix whose j-th column is columns[j]; all columns must have equal length.
    static Matrix from_columns(std::span<const std::vector<Scalar>> columns);
    static Matrix from_rows(std::span<const std::vector<Scalar>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Scalar> column(std::size_t c) const;
    std::vector<Scalar> row(std::size_t r) const;
    Matrix transpose() const;

    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
    std::vector<Scalar> operator*(std::span<const Scalar> vec) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    FieldSpec field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Determinant of a square matrix.  Over the rationals the columns are first
/// scaled to integers and the fraction-free Bareiss recurrence runs on big
/// integers; over F_p the same recurrence runs on residues.
Scalar determinant(const Matrix& m);

/// Rank by exact row reduction.
std::size_t rank(const Matrix& m);

/// Inverse; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Solves m * x = rhs for square invertible m; nullopt when singular.
std::optional<std::vector<Scalar>> solve(const Matrix& m, std::span<const Scalar> rhs);

} // namespace staudt
