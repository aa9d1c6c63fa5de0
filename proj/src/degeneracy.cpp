#include "qpdeg/degeneracy.hpp"

#include "bracket_poly.hpp"
#include "qpdeg/errors.hpp"
#include "root_scan.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace qpdeg {

namespace {

constexpr double kOnCurveTolerance = 1e-8;
// A root on p = 0 or p = 1 can be displaced off the square by rounding.
constexpr double kBoundaryRootTolerance = 1e-14;

ConditionKind classify(LevelIndex lower, LevelIndex upper) {
    if (lower == 0) {
        return ConditionKind::Ground;
    }
    if (upper == lower + 1) {
        return ConditionKind::Neighbor;
    }
    return ConditionKind::General;
}

// Each residual form is a signed sum of brackets plus a constant.
struct BracketTerm {
    LevelIndex k;
    double sign;
};

struct ResidualForm {
    BracketTerm terms[4];
    int count;
    double constant;
};

ResidualForm residual_form(const DegeneracyCondition& cond) {
    const LevelIndex lo = cond.lower();
    const LevelIndex hi = cond.upper();
    switch (cond.kind()) {
    case ConditionKind::Ground:
        return {{{hi + 1, 1.0}, {hi, 1.0}}, 2, -1.0};
    case ConditionKind::Neighbor:
        return {{{lo + 2, 1.0}, {lo, -1.0}}, 2, 0.0};
    case ConditionKind::General:
        break;
    }
    return {{{hi + 1, 1.0}, {hi, 1.0}, {lo + 1, -1.0}, {lo, -1.0}}, 4, 0.0};
}

double eval_residual(const ResidualForm& form, double q, double p) {
    double sum = 0.0;
    for (int i = 0; i < form.count; ++i) {
        sum += form.terms[i].sign * detail::bracket(form.terms[i].k, q, p);
    }
    return sum + form.constant;
}

struct Partials {
    double dq;
    double dp;
};

Partials eval_partials(const ResidualForm& form, double q, double p) {
    Partials d{0.0, 0.0};
    for (int i = 0; i < form.count; ++i) {
        d.dq += form.terms[i].sign * detail::bracket_dq(form.terms[i].k, q, p);
        d.dp += form.terms[i].sign * detail::bracket_dp(form.terms[i].k, q, p);
    }
    return d;
}

// Slope at a trace sample. A vanishing F_p with F_q != 0 is a vertical tangent.
double sample_slope(const ResidualForm& form, double q, double p) {
    const Partials d = eval_partials(form, q, p);
    if (d.dp == 0.0) {
        if (d.dq == 0.0) {
            throw SingularityError("both partial derivatives vanish on the curve");
        }
        return d.dq > 0.0 ? -std::numeric_limits<double>::infinity()
                          : std::numeric_limits<double>::infinity();
    }
    return -d.dq / d.dp + 0.0;
}

} // namespace

DegeneracyCondition::DegeneracyCondition(LevelIndex lower, LevelIndex upper)
    : lower_(lower), upper_(upper), kind_(classify(lower, upper)) {
    if (lower >= upper) {
        throw DomainError("degeneracy condition needs m1 < m2, got (" + std::to_string(lower) + ", " +
                          std::to_string(upper) + ")");
    }
    if (lower == 0 && upper == 1) {
        throw DomainError("E0 = E1 only holds at the excluded origin");
    }
    if (upper == std::numeric_limits<LevelIndex>::max()) {
        throw DomainError("level index too large");
    }
}

std::string DegeneracyCondition::label() const {
    return "E" + std::to_string(lower_) + "=E" + std::to_string(upper_);
}

double residual(const DegeneracyCondition& cond, const DeformationPoint& point) {
    return eval_residual(residual_form(cond), point.q(), point.p());
}

std::optional<double> solve_p_for_q(const DegeneracyCondition& cond, double q) {
    if (!(q >= 0.0 && q <= 1.0)) {
        throw DomainError("solve_p_for_q needs q in [0, 1]");
    }
    const ResidualForm form = residual_form(cond);
    const auto steps = static_cast<std::size_t>(std::lround(1.0 / kRootScanStep));
    const auto grid = detail::uniform_grid(0.0, 1.0, steps + 1);

    auto f = [&](double p) { return eval_residual(form, q, p); };
    auto f_admissible = [&](double p) -> std::optional<double> {
        if (q == 0.0 && p == 0.0) {
            return std::nullopt;
        }
        return f(p);
    };
    const auto bracket = detail::unique_bracket(detail::scan_sign_changes(f_admissible, grid),
                                                cond.label() + " at q=" + std::to_string(q));
    if (!bracket) {
        for (const double edge : {0.0, 1.0}) {
            const auto f_edge = f_admissible(edge);
            if (f_edge && std::abs(*f_edge) <= kBoundaryRootTolerance) {
                return edge;
            }
        }
        return std::nullopt;
    }
    return detail::bisect(f, *bracket, kMaxBisectionSteps);
}

double implicit_derivative(const DegeneracyCondition& cond, const DeformationPoint& point) {
    const ResidualForm form = residual_form(cond);
    const double r = eval_residual(form, point.q(), point.p());
    if (!(std::abs(r) < kOnCurveTolerance)) {
        throw PreconditionError("point is not on the " + cond.label() + " curve (residual " +
                                std::to_string(r) + ")");
    }
    const Partials d = eval_partials(form, point.q(), point.p());
    if (d.dp == 0.0) {
        throw SingularityError("dF/dp vanishes on the " + cond.label() + " curve");
    }
    return -d.dq / d.dp + 0.0;
}

double endpoint_q(const DegeneracyCondition& cond) {
    if (cond.kind() != ConditionKind::Ground) {
        throw DomainError("axis endpoints q_m are defined for E0=Em conditions only");
    }
    // F(q, 0) = q^m + q^(m-1) - 1 goes from -1 at q = 0 to +1 at q = 1.
    const ResidualForm form = residual_form(cond);
    auto f = [&](double q) { return eval_residual(form, q, 0.0); };
    return detail::bisect(f, {0.0, 1.0, f(0.0)}, kMaxBisectionSteps);
}

CurveTrace trace_curve(const DegeneracyCondition& cond, std::size_t n_samples) {
    if (n_samples < 2) {
        throw DomainError("trace_curve needs at least 2 samples");
    }
    const ResidualForm form = residual_form(cond);
    const bool ground = cond.kind() == ConditionKind::Ground;
    const double q_end = ground ? endpoint_q(cond) : 1.0;
    const double p_start = ground ? q_end : 1.0;

    const auto qs = detail::uniform_grid(0.0, q_end, n_samples);
    CurveTrace trace{cond, {}};
    trace.samples.reserve(n_samples);
    for (std::size_t i = 0; i < qs.size(); ++i) {
        const double q = qs[i];
        double p = 0.0;
        if (i == 0) {
            p = p_start;
        } else if (i + 1 < qs.size()) {
            const auto solved = solve_p_for_q(cond, q);
            if (!solved) {
                throw ConsistencyError(cond.label() + ": no root inside the curve's q-range at q=" +
                                       std::to_string(q));
            }
            p = *solved;
        }
        trace.samples.push_back({q, p, sample_slope(form, q, p)});
    }
    return trace;
}

} // namespace qpdeg
