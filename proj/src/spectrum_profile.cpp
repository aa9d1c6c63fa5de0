#include "qpdeg/spectrum_profile.hpp"

#include "qpdeg/errors.hpp"

#include <algorithm>
#include <string>

namespace qpdeg {

namespace {

DeformationPoint deformed_point(const ReductionFamily& fam, double q) {
    if (!(q < 1.0)) {
        throw DomainError("spectrum profile needs q < 1; at q = 1 the levels are equally spaced");
    }
    return {q, family_p(fam, q)};
}

LevelIndex first_argmax(const std::vector<double>& energies, std::size_t end) {
    const auto it = std::max_element(energies.begin(), energies.begin() + static_cast<std::ptrdiff_t>(end));
    return static_cast<LevelIndex>(it - energies.begin());
}

} // namespace

SpectrumProfile profile(const ReductionFamily& fam, double q, LevelIndex n_max) {
    if (n_max < 2) {
        throw DomainError("spectrum profile needs n_max >= 2");
    }
    const DeformationPoint point = deformed_point(fam, q);
    SpectrumProfile result{fam, q, energy_spectrum(n_max, point), 0, 0.0, {}};
    result.peak_index = first_argmax(result.energies, result.energies.size());
    result.tail_bound = result.energies.back();
    for (std::size_t n = result.peak_index + 1; n < result.energies.size(); ++n) {
        if (!(result.energies[n] < result.energies[n - 1])) {
            result.decrease_violations.push_back(static_cast<LevelIndex>(n));
        }
    }
    return result;
}

LevelIndex peak_level(const ReductionFamily& fam, double q) {
    const DeformationPoint point = deformed_point(fam, q);
    // Grow the window geometrically; energy_spectrum is O(n) per call.
    LevelIndex window = 64;
    while (true) {
        const auto energies = energy_spectrum(window, point);
        LevelIndex run = 0;
        for (std::size_t n = 1; n < energies.size(); ++n) {
            run = energies[n] < energies[n - 1] ? run + 1 : 0;
            if (run == kPeakCertificateRun) {
                return first_argmax(energies, n + 1);
            }
        }
        if (window >= kPeakScanCap) {
            throw ConsistencyError("no certified maximum of E(n) below n = " + std::to_string(kPeakScanCap) +
                                   " for " + fam.label() + " at q = " + std::to_string(q));
        }
        window = std::min<LevelIndex>(window * 2, kPeakScanCap);
    }
}

} // namespace qpdeg
