#pragma once

#include "qpdeg/families.hpp"

#include <vector>

namespace qpdeg {

/// Shape of E(n) for one family member: rise to a maximum, then decay to 0.
struct SpectrumProfile {
    ReductionFamily family;
    double q;
    std::vector<double> energies; // E_0 .. E_{n_max}
    LevelIndex peak_index;        // smallest argmax
    double tail_bound;            // E_{n_max}
    std::vector<LevelIndex> decrease_violations; // n > peak with E_n >= E_{n-1}

    bool monotone_tail() const noexcept { return decrease_violations.empty(); }
};

/// Number of consecutive decreasing levels that certifies a peak.
inline constexpr LevelIndex kPeakCertificateRun = 10;
inline constexpr LevelIndex kPeakScanCap = 10'000;

/// Needs q < 1 (at q = 1 the spectrum is linear with no maximum) and n_max >= 2.
SpectrumProfile profile(const ReductionFamily& fam, double q, LevelIndex n_max);

/// Index of the maximum of E(n), found by scanning until E has dropped for
/// kPeakCertificateRun levels in a row. Throws ConsistencyError if that does
/// not happen before kPeakScanCap.
LevelIndex peak_level(const ReductionFamily& fam, double q);

} // namespace qpdeg
