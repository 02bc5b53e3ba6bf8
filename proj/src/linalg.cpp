#include "staudt/linalg.hpp"

#include <utility>

namespace staudt {

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field))
{
}

Matrix Matrix::identity(const FieldSpec& field, std::size_t size)
{
    Matrix m(field, size, size);
    for (std::size_t i = 0; i < size; ++i)
        m(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_columns(std::span<const std::vector<Scalar>> columns)
{
    if (columns.empty())
        return {};
    const std::size_t rows = columns.front().size();
    if (rows == 0)
        throw DimensionMismatch("empty column");
    Matrix m(columns.front().front().field(), rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows)
            throw DimensionMismatch("columns of unequal length");
        for (std::size_t r = 0; r < rows; ++r) {
            if (!(columns[c][r].field() == m.field_))
                throw FieldMismatch("matrix entries from different fields");
            m(r, c) = columns[c][r];
        }
    }
    return m;
}

Matrix Matrix::from_rows(std::span<const std::vector<Scalar>> rows)
{
    return from_columns(rows).transpose();
}

std::vector<Scalar> Matrix::column(std::size_t c) const
{
    std::vector<Scalar> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out.push_back((*this)(r, c));
    return out;
}

std::vector<Scalar> Matrix::row(std::size_t r) const
{
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs)
{
    if (lhs.cols_ != rhs.rows_)
        throw DimensionMismatch("matrix product shape mismatch");
    if (!(lhs.field_ == rhs.field_))
        throw FieldMismatch("matrix product across fields");
    Matrix out(lhs.field_, lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i)
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            if (lhs(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out(i, j) += lhs(i, k) * rhs(k, j);
        }
    return out;
}

std::vector<Scalar> Matrix::operator*(std::span<const Scalar> vec) const
{
    if (vec.size() != cols_)
        throw DimensionMismatch("matrix-vector shape mismatch");
    std::vector<Scalar> out(rows_, Scalar::zero(field_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out[r] += (*this)(r, c) * vec[c];
    return out;
}

namespace {

// Bareiss on big integers.  Returns the determinant of `a` (destroyed).
mpz_class bareiss_integer(std::vector<std::vector<mpz_class>>& a)
{
    const std::size_t n = a.size();
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a[swap][k] == 0)
                ++swap;
            if (swap == n)
                return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

Scalar determinant_rational(const Matrix& m)
{
    const std::size_t n = m.rows();
    // Clear denominators column by column; the determinant scales by the
    // product of the multipliers.
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    mpz_class scale = 1;
    for (std::size_t c = 0; c < n; ++c) {
        mpz_class lcm = 1;
        for (std::size_t r = 0; r < n; ++r)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).rational().get_den_mpz_t());
        for (std::size_t r = 0; r < n; ++r) {
            const mpq_class& q = m(r, c).rational();
            a[r][c] = q.get_num() * (lcm / q.get_den());
        }
        scale *= lcm;
    }
    mpq_class det(bareiss_integer(a), scale);
    det.canonicalize();
    return Scalar::from_rational(m.field(), det);
}

Scalar determinant_field(Matrix a)
{
    // Plain Gaussian elimination; every division is exact in F_p.
    const std::size_t n = a.rows();
    Scalar det = Scalar::one(a.field());
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a(pivot, k).is_zero())
            ++pivot;
        if (pivot == n)
            return Scalar::zero(a.field());
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(pivot, j));
            det = -det;
        }
        det *= a(k, k);
        const Scalar inv = a(k, k).inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero())
                continue;
            const Scalar factor = a(i, k) * inv;
            for (std::size_t j = k; j < n; ++j)
                a(i, j) -= factor * a(k, j);
        }
    }
    return det;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& a)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.rows() && a(pivot, col).is_zero())
            ++pivot;
        if (pivot == a.rows())
            continue;
        if (pivot != row)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a(row, j), a(pivot, j));
        const Scalar inv = a(row, col).inverse();
        for (std::size_t j = col; j < a.cols(); ++j)
            a(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col).is_zero())
                continue;
            const Scalar factor = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                a(i, j) -= factor * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

Scalar determinant(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw DimensionMismatch("determinant of a non-square matrix");
    if (m.rows() == 0)
        return Scalar::one(m.field());
    if (m.field().is_rationals())
        return determinant_rational(m);
    return determinant_field(m);
}

std::size_t rank(const Matrix& m)
{
    Matrix a = m;
    return row_reduce(a).size();
}

std::optional<Matrix> inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n + r) = Scalar::one(m.field());
    }
    const auto pivots = row_reduce(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        return std::nullopt;
    Matrix out(m.field(), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            out(r, c) = aug(r, n + c);
    return out;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, std::span<const Scalar> rhs)
{
    if (m.rows() != m.cols() || rhs.size() != m.rows())
        throw DimensionMismatch("solve shape mismatch");
    const std::size_t n = m.rows();
    Matrix aug(m.field(), n, n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n) = rhs[r];
    }
    const auto pivots = row_reduce(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        return std::nullopt;
    return aug.column(n);
}

} // namespace staudt
