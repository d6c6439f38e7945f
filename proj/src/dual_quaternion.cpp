#include "rbdq/dual_quaternion.hpp"

#include <ostream>
#include <stdexcept>

namespace rbdq {

DualQuaternion DualQuaternion::basis(std::size_t index) {
    if (index >= kDim) {
        throw std::out_of_range("basis index out of range");
    }
    DualQuaternion out;
    out.coords[index] = Scalar(1);
    return out;
}

bool DualQuaternion::is_zero() const {
    for (const auto& c : coords) {
        if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

DualQuaternion multiply(const DualQuaternion& x, const DualQuaternion& y) {
    DualQuaternion out;
    out[0] = x[0] * y[0];
    for (std::size_t k = 1; k < kDim; ++k) {
        out[k] = x[0] * y[k] + y[0] * x[k];
    }
    return out;
}

DualQuaternion add(const DualQuaternion& x, const DualQuaternion& y) {
    DualQuaternion out;
    for (std::size_t k = 0; k < kDim; ++k) {
        out[k] = x[k] + y[k];
    }
    return out;
}

DualQuaternion subtract(const DualQuaternion& x, const DualQuaternion& y) {
    DualQuaternion out;
    for (std::size_t k = 0; k < kDim; ++k) {
        out[k] = x[k] - y[k];
    }
    return out;
}

DualQuaternion scale(const Scalar& c, const DualQuaternion& x) {
    DualQuaternion out;
    for (std::size_t k = 0; k < kDim; ++k) {
        out[k] = c * x[k];
    }
    return out;
}

RealPureSplit decompose(const DualQuaternion& x) {
    RealPureSplit out;
    out.real[0] = x[0];
    for (std::size_t k = 1; k < kDim; ++k) {
        out.pure[k] = x[k];
    }
    return out;
}

std::string to_string(const DualQuaternion& x) {
    std::string out = "(";
    for (std::size_t k = 0; k < kDim; ++k) {
        if (k != 0) {
            out += ", ";
        }
        out += x[k].to_string();
    }
    return out + ")";
}

std::ostream& operator<<(std::ostream& os, const DualQuaternion& x) { return os << to_string(x); }

}  // namespace rbdq
