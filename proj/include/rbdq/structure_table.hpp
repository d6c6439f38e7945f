#pragma once

#include <array>
#include <cstddef>

#include "rbdq/dual_quaternion.hpp"
#include "rbdq/scalar.hpp"

namespace rbdq {

/// Structure constants of a 4-dimensional algebra: at(p, q, k) is the
/// coefficient of e_k in e_p * e_q.
class StructureTable {
public:
    StructureTable() = default;

    /// e0 is the identity, every product among e1, e2, e3 vanishes.
    static StructureTable dual_quaternion();

    [[nodiscard]] const Scalar& at(std::size_t p, std::size_t q, std::size_t k) const {
        return constants_[(p * kDim + q) * kDim + k];
    }
    void set(std::size_t p, std::size_t q, std::size_t k, Scalar value) {
        constants_[(p * kDim + q) * kDim + k] = std::move(value);
    }

    /// Generic bilinear product over any coefficient ring that accepts
    /// Ring + Ring and Ring * Scalar. Zero structure constants are skipped.
    template <class Ring>
    [[nodiscard]] std::array<Ring, kDim> multiply(const std::array<Ring, kDim>& x,
                                                  const std::array<Ring, kDim>& y) const {
        std::array<Ring, kDim> out{};
        for (std::size_t p = 0; p < kDim; ++p) {
            for (std::size_t q = 0; q < kDim; ++q) {
                bool any = false;
                for (std::size_t k = 0; k < kDim; ++k) {
                    any = any || !at(p, q, k).is_zero();
                }
                if (!any) {
                    continue;
                }
                const Ring xy = x[p] * y[q];
                for (std::size_t k = 0; k < kDim; ++k) {
                    const Scalar& c = at(p, q, k);
                    if (!c.is_zero()) {
                        out[k] = out[k] + xy * c;
                    }
                }
            }
        }
        return out;
    }

    [[nodiscard]] DualQuaternion multiply(const DualQuaternion& x, const DualQuaternion& y) const;

    friend bool operator==(const StructureTable&, const StructureTable&) = default;

private:
    std::array<Scalar, kDim * kDim * kDim> constants_{};
};

struct TableReport {
    bool unital = false;       // e0 is a two-sided identity
    bool commutative = false;  // over all 16 basis pairs
    bool associative = false;  // over all 64 basis triples
};

TableReport table_check(const StructureTable& table);

}  // namespace rbdq
