#include "rbdq/sampling.hpp"

namespace rbdq {

int Sampler::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Scalar Sampler::scalar(int max_abs, int max_den) { return Scalar(integer(-max_abs, max_abs), integer(1, max_den)); }

Scalar Sampler::nonzero_scalar(int max_abs, int max_den) {
    Scalar s;
    do {
        s = scalar(max_abs, max_den);
    } while (s.is_zero());
    return s;
}

DualQuaternion Sampler::element() {
    DualQuaternion x;
    for (auto& c : x.coords) {
        c = scalar();
    }
    return x;
}

OperatorMatrix Sampler::matrix(double zero_chance) {
    OperatorMatrix r;
    std::bernoulli_distribution zero(zero_chance);
    for (std::size_t row = 0; row < kDim; ++row) {
        for (std::size_t col = 0; col < kDim; ++col) {
            if (!zero(rng_)) {
                r(row, col) = scalar();
            }
        }
    }
    return r;
}

}  // namespace rbdq
