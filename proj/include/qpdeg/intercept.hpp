#pragma once

#include "qpdeg/families.hpp"

#include <cstddef>
#include <vector>

namespace qpdeg {

/// Large-momentum limit of the two-particle correlation intercept,
/// lambda = q + f(q) - 1.
///
/// Gives lambda = q for p = 1 and -1 + q + exp((q - 1)/2) for exp:0.5, the
/// two cases with an independently known value. Other families use the same
/// expression as an extrapolation (see has_reference_intercept).
double asymptotic_intercept(const ReductionFamily& fam, double q);

/// True for power:0 and exp:0.5.
bool has_reference_intercept(const ReductionFamily& fam);

struct InterceptSample {
    double q;
    double lambda;
};

struct InterceptCurve {
    ReductionFamily family;
    std::vector<InterceptSample> samples;
    bool extrapolated;
};

/// Uniform q-grid over [domain_low, 1].
InterceptCurve intercept_curve(const ReductionFamily& fam, std::size_t n_samples);

} // namespace qpdeg
