#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qpdeg {

using LevelIndex = std::uint32_t;

/// Deformation parameters (q, p) of the two-parameter oscillator.
///
/// Both components lie in [0, 1] and the origin is excluded; the axes are
/// admitted because the degeneracy curves end on them. Construction throws
/// OriginExcludedError for (0, 0) and DomainError for anything else outside
/// the square.
class DeformationPoint {
public:
    DeformationPoint(double q, double p);

    double q() const noexcept { return q_; }
    double p() const noexcept { return p_; }

    /// The mirrored point (p, q).
    DeformationPoint swapped() const { return {p_, q_}; }

    bool operator==(const DeformationPoint&) const = default;

private:
    double q_;
    double p_;
};

/// Below this |q - p| the real-argument bracket uses its p -> q limit x q^(x-1).
inline constexpr double kEqualParameterThreshold = 1e-9;

/// q,p-bracket (q^x - p^x) / (q - p) for real x.
///
/// Non-negative integer x is routed to qp_bracket_int. Fractional or negative
/// x is a DomainError when q or p is zero.
double qp_bracket(double x, const DeformationPoint& point);

/// q,p-number [[k]] as the homogeneous sum of q^(k-1-r) p^r, r = 0..k-1.
///
/// Uses 0^0 = 1, so [[1]] = 1 everywhere including the axes, and the result
/// is bit-identical under q <-> p.
double qp_bracket_int(LevelIndex k, const DeformationPoint& point);

/// E_n = ([[n+1]] + [[n]]) / 2. E_0 is exactly 1/2.
double energy_level(LevelIndex n, const DeformationPoint& point);

/// [E_0, ..., E_{n_max}], element-wise identical to energy_level.
std::vector<double> energy_spectrum(LevelIndex n_max, const DeformationPoint& point);

/// Ladder operators truncated to the first `dim` Fock states.
struct FockRep {
    Eigen::MatrixXd a;        // annihilation, a(n-1, n) = sqrt([[n]])
    Eigen::MatrixXd a_dagger; // transpose of a
    Eigen::MatrixXd number;   // diag(0, 1, ..., dim-1)

    std::size_t dim() const noexcept { return static_cast<std::size_t>(a.rows()); }
};

FockRep fock_rep(std::size_t dim, const DeformationPoint& point);

/// Largest entrywise deviation of the algebra relations on columns 0..dim-2.
/// The top state is skipped: truncation breaks AA^dagger there.
struct FockResiduals {
    double q_relation;      // A A^dagger - q A^dagger A - p^N
    double p_relation;      // A A^dagger - p A^dagger A - q^N
    double number_relation; // A^dagger A - [[N]], checked on every column

    double max() const noexcept;
};

FockResiduals fock_residuals(const FockRep& rep, const DeformationPoint& point);

} // namespace qpdeg
