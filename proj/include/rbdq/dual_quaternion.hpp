#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>

#include "rbdq/scalar.hpp"

namespace rbdq {

inline constexpr std::size_t kDim = 4;

/// Element x0*e0 + x1*e1 + x2*e2 + x3*e3 of the dual quaternion algebra.
/// Basis indices are 0-based; e0 is the identity.
struct DualQuaternion {
    std::array<Scalar, kDim> coords{};

    static DualQuaternion basis(std::size_t index);
    static DualQuaternion zero() { return {}; }

    [[nodiscard]] bool is_zero() const;
    const Scalar& operator[](std::size_t k) const { return coords[k]; }
    Scalar& operator[](std::size_t k) { return coords[k]; }

    friend bool operator==(const DualQuaternion&, const DualQuaternion&) = default;
};

struct RealPureSplit {
    DualQuaternion real;
    DualQuaternion pure;
};

/// Product from the closed form (x0y0, x0y1+y0x1, x0y2+y0x2, x0y3+y0x3).
DualQuaternion multiply(const DualQuaternion& x, const DualQuaternion& y);
DualQuaternion add(const DualQuaternion& x, const DualQuaternion& y);
DualQuaternion subtract(const DualQuaternion& x, const DualQuaternion& y);
DualQuaternion scale(const Scalar& c, const DualQuaternion& x);
RealPureSplit decompose(const DualQuaternion& x);

inline DualQuaternion operator+(const DualQuaternion& x, const DualQuaternion& y) { return add(x, y); }
inline DualQuaternion operator-(const DualQuaternion& x, const DualQuaternion& y) { return subtract(x, y); }
inline DualQuaternion operator*(const DualQuaternion& x, const DualQuaternion& y) { return multiply(x, y); }
inline DualQuaternion operator*(const Scalar& c, const DualQuaternion& x) { return scale(c, x); }

/// "(x0, x1, x2, x3)" with canonical scalar strings.
std::string to_string(const DualQuaternion& x);
std::ostream& operator<<(std::ostream& os, const DualQuaternion& x);

}  // namespace rbdq
