#ifndef QTRI_MATRIX_HPP
#define QTRI_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <qtri/algebra.hpp>
#include <qtri/errors.hpp>

namespace qtri
{

// Dense row-major matrix. T is Rational or Poly; a default-constructed T is
// the zero element for both.
template <typename T>
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols)
    {
    }
    Matrix(std::initializer_list<std::initializer_list<T>> init)
    {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto &row : init) {
            if (row.size() != cols_) {
                throw DimensionError("ragged matrix initializer");
            }
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    std::size_t rows() const noexcept
    {
        return rows_;
    }
    std::size_t cols() const noexcept
    {
        return cols_;
    }
    bool is_square() const noexcept
    {
        return rows_ == cols_;
    }

    T &operator()(std::size_t i, std::size_t j)
    {
        return data_[i * cols_ + j];
    }
    const T &operator()(std::size_t i, std::size_t j) const
    {
        return data_[i * cols_ + j];
    }

    // Submatrix on the given (sorted) row and column index sets.
    Matrix submatrix(const std::vector<std::size_t> &row_set, const std::vector<std::size_t> &col_set) const
    {
        Matrix out(row_set.size(), col_set.size());
        for (std::size_t i = 0; i < row_set.size(); ++i) {
            for (std::size_t j = 0; j < col_set.size(); ++j) {
                out(i, j) = (*this)(row_set[i], col_set[j]);
            }
        }
        return out;
    }

    // Top-left rows x cols block.
    Matrix leading(std::size_t rows, std::size_t cols) const
    {
        if (rows > rows_ || cols > cols_) {
            throw DimensionError("leading block larger than matrix");
        }
        Matrix out(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                out(i, j) = (*this)(i, j);
            }
        }
        return out;
    }

    friend bool operator==(const Matrix &, const Matrix &) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <typename T>
Matrix<T> operator*(const Matrix<T> &a, const Matrix<T> &b)
{
    if (a.cols() != b.rows()) {
        throw DimensionError("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " by "
                             + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    Matrix<T> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T &aik = a(i, k);
            if (aik == T{}) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

using RatMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<Poly>;

// Embeds a rational matrix as constant polynomials.
PolyMatrix to_poly_matrix(const RatMatrix &m);

// Exact determinant. Rows are scaled to integers first, then reduced with
// fraction-free (Bareiss) elimination. Throws DimensionError if not square.
Rational det_exact(const RatMatrix &m);

} // namespace qtri

#endif
