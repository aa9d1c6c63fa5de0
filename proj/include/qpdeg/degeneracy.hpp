#pragma once

#include "qpdeg/qp_core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qpdeg {

enum class ConditionKind {
    Ground,   // E_0 = E_m, m >= 2
    Neighbor, // E_m = E_{m+1}, m >= 1
    General,  // any other E_{m1} = E_{m2}
};

/// Requirement that levels `lower` and `upper` coincide.
///
/// (0, 1) is rejected along with lower >= upper: E_1 - E_0 = (q + p) / 2
/// vanishes only at the excluded origin.
class DegeneracyCondition {
public:
    DegeneracyCondition(LevelIndex lower, LevelIndex upper);

    LevelIndex lower() const noexcept { return lower_; }
    LevelIndex upper() const noexcept { return upper_; }
    ConditionKind kind() const noexcept { return kind_; }

    std::string label() const; // "E0=E2"

    bool operator==(const DegeneracyCondition&) const = default;

private:
    LevelIndex lower_;
    LevelIndex upper_;
    ConditionKind kind_;
};

/// Scan step of the p-grid used to bracket roots in solve_p_for_q.
inline constexpr double kRootScanStep = 1e-3;
inline constexpr int kMaxBisectionSteps = 200;

/// Polynomial whose zero set is the degeneracy curve.
///
/// Ground type: sum_{r<=m} p^(m-r) q^r + sum_{s<m} p^(m-1-s) q^s - 1.
/// Neighbor type: sum_{r<=m+1} p^(m+1-r) q^r - sum_{s<m} p^(m-1-s) q^s.
/// General type: 2 (E_{m2} - E_{m1}).
/// All three equal twice the energy gap, so they share one zero set.
double residual(const DegeneracyCondition& cond, const DeformationPoint& point);

/// The p in [0, 1] on the curve above q, or nullopt if the curve does not
/// reach this q. Throws ConsistencyError when the scan finds several roots.
std::optional<double> solve_p_for_q(const DegeneracyCondition& cond, double q);

/// dp/dq = -F_q / F_p from analytic partials.
///
/// Throws PreconditionError when |residual| >= 1e-8 and SingularityError
/// when F_p vanishes.
double implicit_derivative(const DegeneracyCondition& cond, const DeformationPoint& point);

/// q_m: where the ground-type curve meets the q axis (root of q^m + q^(m-1) = 1).
/// By symmetry it is also the p-axis intercept p_m.
double endpoint_q(const DegeneracyCondition& cond);

struct CurveSample {
    double q;
    double p;
    double dpdq;
};

struct CurveTrace {
    DegeneracyCondition condition;
    std::vector<CurveSample> samples; // strictly increasing q
};

/// Samples the curve at `n_samples` uniformly spaced q values.
///
/// Ground-type curves span [0, q_m] and run from (0, p_m) to (q_m, 0); all
/// others span [0, 1] from (0, 1) to (1, 0). Endpoints are placed exactly.
/// Where F_p vanishes at an endpoint the tangent is vertical and dpdq is
/// reported as -infinity.
CurveTrace trace_curve(const DegeneracyCondition& cond, std::size_t n_samples);

} // namespace qpdeg
