#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rbdq/scalar.hpp"

namespace rbdq {

/// Dense row-major matrix of exact scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix column(const std::vector<Scalar>& values);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] bool is_zero() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Throws std::invalid_argument on shape mismatch.
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& c, const Matrix& a);

/// Horizontal concatenation [A | B | ...]; all blocks must share a row count.
Matrix hconcat(const std::vector<Matrix>& blocks);

/// M(4): four copies of M on the block diagonal (works for any shape, including columns).
Matrix block_diag4(const Matrix& m);

std::string to_string(const Matrix& m);

}  // namespace rbdq
