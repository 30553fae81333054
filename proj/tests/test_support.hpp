#pragma once

// Deterministic generators shared by the property-style tests.

#include <random>

#include "torfan/linalg.hpp"

namespace torfan::testsupport {

inline IntMatrix random_int_matrix(std::mt19937& rng, int n, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(n, n);
    for (auto& e : m.entries) e = d(rng);
    return m;
}

/// Product of random elementary row operations applied to the identity;
/// always in GL(n,Z).
inline IntMatrix random_unimodular(std::mt19937& rng, int n, int steps = 12) {
    std::uniform_int_distribution<int> op(0, 2);
    std::uniform_int_distribution<int> idx(0, n - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    IntMatrix m = IntMatrix::identity(n);
    for (int s = 0; s < steps; ++s) {
        int i = idx(rng), j = idx(rng);
        switch (op(rng)) {
            case 0: {  // row_i += c * row_j
                if (i == j) break;
                int c = coef(rng);
                for (int k = 0; k < n; ++k) m.at(i, k) += c * m.at(j, k);
                break;
            }
            case 1: {  // swap rows
                if (i == j) break;
                for (int k = 0; k < n; ++k) std::swap(m.at(i, k), m.at(j, k));
                break;
            }
            default: {  // negate a row
                for (int k = 0; k < n; ++k) m.at(i, k) = -m.at(i, k);
                break;
            }
        }
    }
    return m;
}

inline RatVec random_rat_vec(std::mt19937& rng, int n, int num_range = 8, int den_max = 6) {
    std::uniform_int_distribution<int> nd(-num_range, num_range);
    std::uniform_int_distribution<int> dd(1, den_max);
    RatVec v(n);
    for (auto& q : v) q = make_rat(nd(rng), dd(rng));
    return v;
}

}  // namespace torfan::testsupport
