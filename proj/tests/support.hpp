#pragma once
// Independent oracles for the tests. Nothing here calls the library's
// arithmetic: products use the dual-number form (x0 + v)(y0 + w) = x0 y0 +
// x0 w + y0 v with v w = 0 for pure parts, and operators act through plain
// mpq_class sums.

#include <array>
#include <fstream>
#include <sstream>
#include <string>

#include <gmpxx.h>

#include "rbdq/rb_operator.hpp"

#ifndef RBDQ_TEST_DATA
#define RBDQ_TEST_DATA "tests/data"
#endif

namespace oracle {

using Q = mpq_class;
using Vec = std::array<Q, 4>;
using Mat = std::array<std::array<Q, 4>, 4>;  // m[row][col], column j = R(e_j)

inline Vec basis(std::size_t i) {
    Vec v{0, 0, 0, 0};
    v[i] = 1;
    return v;
}

inline Vec product(const Vec& x, const Vec& y) {
    Vec out;
    out[0] = x[0] * y[0];
    for (int k = 1; k < 4; ++k) {
        out[k] = x[0] * y[k] + y[0] * x[k];
    }
    return out;
}

inline Vec act(const Mat& m, const Vec& x) {
    Vec out{0, 0, 0, 0};
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            out[r] += m[r][c] * x[c];
        }
    }
    return out;
}

inline Vec defect(const Mat& m, const Q& lambda, const Vec& x, const Vec& y) {
    const Vec rx = act(m, x);
    const Vec ry = act(m, y);
    const Vec lhs = product(rx, ry);
    const Vec t1 = act(m, product(rx, y));
    const Vec t2 = act(m, product(x, ry));
    const Vec t3 = act(m, product(x, y));
    Vec out;
    for (int k = 0; k < 4; ++k) {
        out[k] = lhs[k] - t1[k] - t2[k] - lambda * t3[k];
    }
    return out;
}

inline bool rota_baxter(const Mat& m, const Q& lambda) {
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            for (const auto& c : defect(m, lambda, basis(i), basis(j))) {
                if (c != 0) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline Vec from(const rbdq::DualQuaternion& x) { return {x[0].raw(), x[1].raw(), x[2].raw(), x[3].raw()}; }

inline Mat from(const rbdq::OperatorMatrix& r) {
    Mat m;
    for (std::size_t row = 0; row < 4; ++row) {
        for (std::size_t col = 0; col < 4; ++col) {
            m[row][col] = r(row, col).raw();
        }
    }
    return m;
}

inline std::string read_data(const std::string& relative) {
    std::ifstream in(std::string(RBDQ_TEST_DATA) + "/" + relative);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace oracle
