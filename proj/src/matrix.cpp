#include "rbdq/matrix.hpp"

#include <stdexcept>

namespace rbdq {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Scalar(1);
    }
    return m;
}

Matrix Matrix::column(const std::vector<Scalar>& values) {
    Matrix m(values.size(), 1);
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, 0) = values[i];
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& s : data_) {
        if (!s.is_zero()) {
            return false;
        }
    }
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix product: shape mismatch");
    }
    Matrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(r, k).is_zero()) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols(); ++c) {
                if (!b(k, c).is_zero()) {
                    out(r, c) += a(r, k) * b(k, c);
                }
            }
        }
    }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix sum: shape mismatch");
    }
    Matrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(r, c) = a(r, c) + b(r, c);
        }
    }
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Scalar(-1) * b; }

Matrix operator*(const Scalar& c, const Matrix& a) {
    Matrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t col = 0; col < a.cols(); ++col) {
            out(r, col) = c * a(r, col);
        }
    }
    return out;
}

Matrix hconcat(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) {
        return {};
    }
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != blocks.front().rows()) {
            throw std::invalid_argument("hconcat: row mismatch");
        }
        cols += b.cols();
    }
    Matrix out(blocks.front().rows(), cols);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r) {
            for (std::size_t c = 0; c < b.cols(); ++c) {
                out(r, offset + c) = b(r, c);
            }
        }
        offset += b.cols();
    }
    return out;
}

Matrix block_diag4(const Matrix& m) {
    Matrix out(4 * m.rows(), 4 * m.cols());
    for (std::size_t b = 0; b < 4; ++b) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) {
                out(b * m.rows() + r, b * m.cols() + c) = m(r, c);
            }
        }
    }
    return out;
}

std::string to_string(const Matrix& m) {
    std::string out = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += r == 0 ? "[" : ", [";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c != 0) {
                out += ", ";
            }
            out += m(r, c).to_string();
        }
        out += "]";
    }
    return out + "]";
}

}  // namespace rbdq
