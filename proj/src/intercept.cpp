#include "qpdeg/intercept.hpp"

#include "qpdeg/errors.hpp"
#include "root_scan.hpp"

#include <variant>

namespace qpdeg {

double asymptotic_intercept(const ReductionFamily& fam, double q) {
    // q + (p - 1) keeps lambda == q bit-exact when p == 1.
    return q + (family_p(fam, q) - 1.0);
}

bool has_reference_intercept(const ReductionFamily& fam) {
    if (fam.is_boundary_member()) {
        return true;
    }
    const auto* exp_map = std::get_if<ExpMap>(&fam.kind());
    return exp_map != nullptr && exp_map->alpha == 0.5;
}

InterceptCurve intercept_curve(const ReductionFamily& fam, std::size_t n_samples) {
    if (n_samples < 2) {
        throw DomainError("intercept curve needs at least 2 samples");
    }
    InterceptCurve curve{fam, {}, !has_reference_intercept(fam)};
    curve.samples.reserve(n_samples);
    for (const double q : detail::uniform_grid(fam.domain_low(), 1.0, n_samples)) {
        curve.samples.push_back({q, asymptotic_intercept(fam, q)});
    }
    return curve;
}

} // namespace qpdeg
