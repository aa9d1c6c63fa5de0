#pragma once

// Unchecked polynomial kernels shared by the energy and degeneracy code.
// Callers validate (q, p) themselves; these never throw.

#include "qpdeg/qp_core.hpp"

#include <algorithm>

namespace qpdeg::detail {

// [[k]] by Horner in the larger parameter. Ordering the pair first makes the
// value bit-identical under q <-> p.
inline double bracket(LevelIndex k, double q, double p) noexcept {
    const double hi = std::max(q, p);
    const double lo = std::min(q, p);
    double acc = 0.0;
    double lo_pow = 1.0;
    for (LevelIndex r = 0; r < k; ++r) {
        acc = acc * hi + lo_pow;
        lo_pow *= lo;
    }
    return acc;
}

// d[[k]]/dq from [[k+1]] = q [[k]] + p^k, i.e. D_{k+1} = [[k]] + q D_k.
inline double bracket_dq(LevelIndex k, double q, double p) noexcept {
    double value = 0.0; // [[j]]
    double deriv = 0.0; // d[[j]]/dq
    double p_pow = 1.0;
    for (LevelIndex j = 0; j < k; ++j) {
        deriv = value + q * deriv;
        value = q * value + p_pow;
        p_pow *= p;
    }
    return deriv;
}

inline double bracket_dp(LevelIndex k, double q, double p) noexcept {
    return bracket_dq(k, p, q);
}

} // namespace qpdeg::detail
