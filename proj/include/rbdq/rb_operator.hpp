#pragma once

// Linear operators on the dual quaternion algebra and the Rota-Baxter identity
//
//     R(x)R(y) = R(R(x)y) + R(xR(y)) + lambda R(xy).
//
// Two independent routes are provided. The direct route (rb_defect,
// is_rota_baxter) evaluates the identity with the closed-form product and is
// authoritative. The matrix route (structure tensor C, action matrices,
// theorem3_residual) rebuilds the same quantities from block matrices and is
// used as a cross-check.

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "rbdq/dual_quaternion.hpp"
#include "rbdq/matrix.hpp"
#include "rbdq/scalar.hpp"
#include "rbdq/structure_table.hpp"

namespace rbdq {

/// 4x4 operator matrix. Column j holds the coordinates of R(e_j), so entry
/// (r, c) is a_{r+1,c+1} in 1-based naming (a11 is entries[0][0], a34 is
/// entries[2][3]).
class OperatorMatrix {
public:
    OperatorMatrix() = default;
    explicit OperatorMatrix(const std::array<std::array<Scalar, kDim>, kDim>& entries) : entries_(entries) {}

    static OperatorMatrix zero() { return {}; }
    static OperatorMatrix identity();
    /// Throws std::invalid_argument unless m is 4x4.
    static OperatorMatrix from_matrix(const Matrix& m);

    /// row and col are 1-based, as in a_{row,col}.
    [[nodiscard]] const Scalar& a(std::size_t row, std::size_t col) const { return entries_[row - 1][col - 1]; }
    void set_a(std::size_t row, std::size_t col, Scalar value) { entries_[row - 1][col - 1] = std::move(value); }

    [[nodiscard]] const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r][c]; }
    Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r][c]; }

    /// gamma_j, the coordinates of R(e_j).
    [[nodiscard]] DualQuaternion column(std::size_t j) const;
    [[nodiscard]] Matrix to_matrix() const;
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] OperatorMatrix scaled(const Scalar& c) const;

    friend bool operator==(const OperatorMatrix&, const OperatorMatrix&) = default;

private:
    std::array<std::array<Scalar, kDim>, kDim> entries_{};
};

std::string to_string(const OperatorMatrix& r);

DualQuaternion apply(const OperatorMatrix& r, const DualQuaternion& x);

/// R(x)R(y) - R(R(x)y) - R(xR(y)) - lambda R(xy).
DualQuaternion rb_defect(const OperatorMatrix& r, const Scalar& lambda, const DualQuaternion& x,
                         const DualQuaternion& y);

struct DefectWitness {
    std::size_t i = 0;
    std::size_t j = 0;
    DualQuaternion defect;
};

/// First basis pair (row-major in (i, j)) with a nonzero defect, if any.
std::optional<DefectWitness> find_defect_witness(const OperatorMatrix& r, const Scalar& lambda);

/// The defect is bilinear, so vanishing on the 16 basis pairs is equivalent
/// to vanishing everywhere.
bool is_rota_baxter(const OperatorMatrix& r, const Scalar& lambda);

// ---- matrix route --------------------------------------------------------

/// 4x16 matrix C = [B_0 | B_1 | B_2 | B_3] with B_k(p, q) = coefficient of e_k in e_p e_q.
Matrix structure_tensor_c(const StructureTable& table = StructureTable::dual_quaternion());

/// E_i with E_i(q, k) = coefficient of e_k in e_i e_q; the row vector
/// gamma^T E_i holds the coordinates of e_i * (gamma . e). For the dual
/// quaternion table E_0 = I and E_k has a single 1 at (0, k).
std::array<Matrix, kDim> left_action_matrices(const StructureTable& table = StructureTable::dual_quaternion());

/// F_j with F_j(p, k) = coefficient of e_k in e_p e_j; gamma^T F_j holds the
/// coordinates of (gamma . e) * e_j.
std::array<Matrix, kDim> right_action_matrices(const StructureTable& table = StructureTable::dual_quaternion());

/// R(e_i)R(e_j) computed as gamma_i^T C gamma_j(4).
DualQuaternion lemma1_product(const OperatorMatrix& r, std::size_t i, std::size_t j,
                              const StructureTable& table = StructureTable::dual_quaternion());

/// e_i R(e_j) computed as gamma_j^T E_i.
DualQuaternion lemma2_left(const OperatorMatrix& r, std::size_t i, std::size_t j,
                           const StructureTable& table = StructureTable::dual_quaternion());

/// R(e_i) e_j computed as gamma_i^T F_j.
DualQuaternion lemma2_right(const OperatorMatrix& r, std::size_t i, std::size_t j,
                            const StructureTable& table = StructureTable::dual_quaternion());

/// For j = 0..3, the 4x4 residual
///
///   gamma_j(4)^T C^T R  -  R [E_0^T E_1^T E_2^T E_3^T] gamma_j(4)  -  R F_j^T R  -  lambda R F_j^T
///
/// whose column i holds the coordinates of the defect at (e_i, e_j). All four
/// vanish exactly when R is a Rota-Baxter operator of weight lambda.
std::array<Matrix, kDim> theorem3_residual(const OperatorMatrix& r, const Scalar& lambda,
                                           const StructureTable& table = StructureTable::dual_quaternion());

}  // namespace rbdq
