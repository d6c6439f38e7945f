#include "rbdq/structure_table.hpp"

namespace rbdq {

StructureTable StructureTable::dual_quaternion() {
    StructureTable t;
    for (std::size_t k = 0; k < kDim; ++k) {
        t.set(0, k, k, Scalar(1));
        t.set(k, 0, k, Scalar(1));
    }
    return t;
}

DualQuaternion StructureTable::multiply(const DualQuaternion& x, const DualQuaternion& y) const {
    return DualQuaternion{multiply<Scalar>(x.coords, y.coords)};
}

TableReport table_check(const StructureTable& table) {
    TableReport report{true, true, true};
    const auto e = [](std::size_t i) { return DualQuaternion::basis(i); };
    for (std::size_t p = 0; p < kDim; ++p) {
        if (table.multiply(e(0), e(p)) != e(p) || table.multiply(e(p), e(0)) != e(p)) {
            report.unital = false;
        }
        for (std::size_t q = 0; q < kDim; ++q) {
            const auto pq = table.multiply(e(p), e(q));
            if (pq != table.multiply(e(q), e(p))) {
                report.commutative = false;
            }
            for (std::size_t r = 0; r < kDim; ++r) {
                if (table.multiply(pq, e(r)) != table.multiply(e(p), table.multiply(e(q), e(r)))) {
                    report.associative = false;
                }
            }
        }
    }
    return report;
}

}  // namespace rbdq
