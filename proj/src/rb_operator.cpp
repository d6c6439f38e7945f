#include "rbdq/rb_operator.hpp"

#include <stdexcept>
#include <vector>

namespace rbdq {

namespace {

Matrix gamma_column(const OperatorMatrix& r, std::size_t j) {
    Matrix g(kDim, 1);
    for (std::size_t k = 0; k < kDim; ++k) {
        g(k, 0) = r(k, j);
    }
    return g;
}

DualQuaternion row_to_element(const Matrix& row) {
    DualQuaternion out;
    for (std::size_t k = 0; k < kDim; ++k) {
        out[k] = row(0, k);
    }
    return out;
}

void check_index(std::size_t i) {
    if (i >= kDim) {
        throw std::out_of_range("basis index out of range");
    }
}

}  // namespace

OperatorMatrix OperatorMatrix::identity() {
    OperatorMatrix r;
    for (std::size_t k = 0; k < kDim; ++k) {
        r(k, k) = Scalar(1);
    }
    return r;
}

OperatorMatrix OperatorMatrix::from_matrix(const Matrix& m) {
    if (m.rows() != kDim || m.cols() != kDim) {
        throw std::invalid_argument("operator matrix must be 4x4");
    }
    OperatorMatrix r;
    for (std::size_t row = 0; row < kDim; ++row) {
        for (std::size_t col = 0; col < kDim; ++col) {
            r(row, col) = m(row, col);
        }
    }
    return r;
}

DualQuaternion OperatorMatrix::column(std::size_t j) const {
    check_index(j);
    DualQuaternion out;
    for (std::size_t k = 0; k < kDim; ++k) {
        out[k] = entries_[k][j];
    }
    return out;
}

Matrix OperatorMatrix::to_matrix() const {
    Matrix m(kDim, kDim);
    for (std::size_t row = 0; row < kDim; ++row) {
        for (std::size_t col = 0; col < kDim; ++col) {
            m(row, col) = entries_[row][col];
        }
    }
    return m;
}

bool OperatorMatrix::is_zero() const {
    for (const auto& row : entries_) {
        for (const auto& s : row) {
            if (!s.is_zero()) {
                return false;
            }
        }
    }
    return true;
}

OperatorMatrix OperatorMatrix::scaled(const Scalar& c) const {
    OperatorMatrix out;
    for (std::size_t row = 0; row < kDim; ++row) {
        for (std::size_t col = 0; col < kDim; ++col) {
            out(row, col) = c * entries_[row][col];
        }
    }
    return out;
}

std::string to_string(const OperatorMatrix& r) { return to_string(r.to_matrix()); }

DualQuaternion apply(const OperatorMatrix& r, const DualQuaternion& x) {
    DualQuaternion out;
    for (std::size_t row = 0; row < kDim; ++row) {
        for (std::size_t col = 0; col < kDim; ++col) {
            if (!r(row, col).is_zero() && !x[col].is_zero()) {
                out[row] += r(row, col) * x[col];
            }
        }
    }
    return out;
}

DualQuaternion rb_defect(const OperatorMatrix& r, const Scalar& lambda, const DualQuaternion& x,
                         const DualQuaternion& y) {
    const DualQuaternion rx = apply(r, x);
    const DualQuaternion ry = apply(r, y);
    const DualQuaternion lhs = multiply(rx, ry);
    const DualQuaternion rhs =
        apply(r, multiply(rx, y)) + apply(r, multiply(x, ry)) + scale(lambda, apply(r, multiply(x, y)));
    return lhs - rhs;
}

std::optional<DefectWitness> find_defect_witness(const OperatorMatrix& r, const Scalar& lambda) {
    for (std::size_t i = 0; i < kDim; ++i) {
        for (std::size_t j = 0; j < kDim; ++j) {
            auto d = rb_defect(r, lambda, DualQuaternion::basis(i), DualQuaternion::basis(j));
            if (!d.is_zero()) {
                return DefectWitness{i, j, std::move(d)};
            }
        }
    }
    return std::nullopt;
}

bool is_rota_baxter(const OperatorMatrix& r, const Scalar& lambda) {
    return !find_defect_witness(r, lambda).has_value();
}

Matrix structure_tensor_c(const StructureTable& table) {
    Matrix c(kDim, kDim * kDim);
    for (std::size_t k = 0; k < kDim; ++k) {
        for (std::size_t p = 0; p < kDim; ++p) {
            for (std::size_t q = 0; q < kDim; ++q) {
                c(p, k * kDim + q) = table.at(p, q, k);
            }
        }
    }
    return c;
}

std::array<Matrix, kDim> left_action_matrices(const StructureTable& table) {
    std::array<Matrix, kDim> out;
    for (std::size_t i = 0; i < kDim; ++i) {
        out[i] = Matrix(kDim, kDim);
        for (std::size_t q = 0; q < kDim; ++q) {
            for (std::size_t k = 0; k < kDim; ++k) {
                out[i](q, k) = table.at(i, q, k);
            }
        }
    }
    return out;
}

std::array<Matrix, kDim> right_action_matrices(const StructureTable& table) {
    std::array<Matrix, kDim> out;
    for (std::size_t j = 0; j < kDim; ++j) {
        out[j] = Matrix(kDim, kDim);
        for (std::size_t p = 0; p < kDim; ++p) {
            for (std::size_t k = 0; k < kDim; ++k) {
                out[j](p, k) = table.at(p, j, k);
            }
        }
    }
    return out;
}

DualQuaternion lemma1_product(const OperatorMatrix& r, std::size_t i, std::size_t j, const StructureTable& table) {
    check_index(i);
    check_index(j);
    const Matrix row = gamma_column(r, i).transpose() * structure_tensor_c(table) * block_diag4(gamma_column(r, j));
    return row_to_element(row);
}

DualQuaternion lemma2_left(const OperatorMatrix& r, std::size_t i, std::size_t j, const StructureTable& table) {
    check_index(i);
    check_index(j);
    return row_to_element(gamma_column(r, j).transpose() * left_action_matrices(table)[i]);
}

DualQuaternion lemma2_right(const OperatorMatrix& r, std::size_t i, std::size_t j, const StructureTable& table) {
    check_index(i);
    check_index(j);
    return row_to_element(gamma_column(r, i).transpose() * right_action_matrices(table)[j]);
}

std::array<Matrix, kDim> theorem3_residual(const OperatorMatrix& r, const Scalar& lambda,
                                           const StructureTable& table) {
    const Matrix rm = r.to_matrix();
    const Matrix c = structure_tensor_c(table);
    const auto left = left_action_matrices(table);
    const auto right = right_action_matrices(table);
    std::vector<Matrix> left_t;
    for (const auto& e : left) {
        left_t.push_back(e.transpose());
    }
    const Matrix stacked_left = hconcat(left_t);

    std::array<Matrix, kDim> out;
    for (std::size_t j = 0; j < kDim; ++j) {
        const Matrix gj4 = block_diag4(gamma_column(r, j));
        const Matrix lhs = gj4.transpose() * c.transpose() * rm;
        const Matrix fj_t = right[j].transpose();
        const Matrix rhs = rm * stacked_left * gj4 + rm * fj_t * rm + lambda * (rm * fj_t);
        out[j] = lhs - rhs;
    }
    return out;
}

}  // namespace rbdq
