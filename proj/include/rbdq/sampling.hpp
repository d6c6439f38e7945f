#pragma once

#include <cstdint>
#include <random>

#include "rbdq/dual_quaternion.hpp"
#include "rbdq/rb_operator.hpp"
#include "rbdq/scalar.hpp"

namespace rbdq {

/// Seeded source of small random rationals for property checks.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    /// p/q with |p| <= max_abs and 1 <= q <= max_den.
    Scalar scalar(int max_abs = 9, int max_den = 5);
    Scalar nonzero_scalar(int max_abs = 9, int max_den = 5);
    DualQuaternion element();
    /// Each entry is zero with probability zero_chance, otherwise a random scalar.
    OperatorMatrix matrix(double zero_chance = 0.0);
    int integer(int lo, int hi);

private:
    std::mt19937_64 rng_;
};

}  // namespace rbdq
