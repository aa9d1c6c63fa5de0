#include "qpdeg/qp_core.hpp"

#include "bracket_poly.hpp"
#include "qpdeg/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace qpdeg {

namespace {

bool in_unit_interval(double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; }

} // namespace

DeformationPoint::DeformationPoint(double q, double p) : q_(q), p_(p) {
    if (!in_unit_interval(q) || !in_unit_interval(p)) {
        throw DomainError("deformation point (" + std::to_string(q) + ", " + std::to_string(p) +
                          ") lies outside [0,1]x[0,1]");
    }
    if (q == 0.0 && p == 0.0) {
        throw OriginExcludedError();
    }
}

double qp_bracket(double x, const DeformationPoint& point) {
    if (!std::isfinite(x)) {
        throw DomainError("q,p-bracket argument must be finite");
    }
    const double q = point.q();
    const double p = point.p();
    const bool integral = x >= 0.0 && x == std::floor(x);
    if (integral && x <= static_cast<double>(std::numeric_limits<LevelIndex>::max())) {
        return qp_bracket_int(static_cast<LevelIndex>(x), point);
    }
    if (!integral && (q == 0.0 || p == 0.0)) {
        throw DomainError("q,p-bracket with a zero parameter needs a non-negative integer argument");
    }
    if (std::abs(q - p) < kEqualParameterThreshold) {
        return x * std::pow(q, x - 1.0);
    }
    return (std::pow(q, x) - std::pow(p, x)) / (q - p);
}

double qp_bracket_int(LevelIndex k, const DeformationPoint& point) {
    return detail::bracket(k, point.q(), point.p());
}

double energy_level(LevelIndex n, const DeformationPoint& point) {
    return 0.5 * (qp_bracket_int(n + 1, point) + qp_bracket_int(n, point));
}

std::vector<double> energy_spectrum(LevelIndex n_max, const DeformationPoint& point) {
    // Same Horner recurrence as detail::bracket, run once for all levels.
    const double hi = std::max(point.q(), point.p());
    const double lo = std::min(point.q(), point.p());
    std::vector<double> energies;
    energies.reserve(static_cast<std::size_t>(n_max) + 1);
    double current = 0.0; // [[n]]
    double lo_pow = 1.0;
    for (LevelIndex n = 0; n <= n_max; ++n) {
        const double next = current * hi + lo_pow; // [[n+1]]
        lo_pow *= lo;
        energies.push_back(0.5 * (next + current));
        current = next;
        if (n == std::numeric_limits<LevelIndex>::max()) {
            break;
        }
    }
    return energies;
}

FockRep fock_rep(std::size_t dim, const DeformationPoint& point) {
    if (dim < 2) {
        throw DomainError("Fock truncation needs dim >= 2");
    }
    const auto size = static_cast<Eigen::Index>(dim);
    FockRep rep;
    rep.a = Eigen::MatrixXd::Zero(size, size);
    for (Eigen::Index n = 1; n < size; ++n) {
        rep.a(n - 1, n) = std::sqrt(qp_bracket_int(static_cast<LevelIndex>(n), point));
    }
    rep.a_dagger = rep.a.transpose();
    rep.number = Eigen::VectorXd::LinSpaced(size, 0.0, static_cast<double>(size - 1)).asDiagonal();
    return rep;
}

double FockResiduals::max() const noexcept {
    return std::max({q_relation, p_relation, number_relation});
}

FockResiduals fock_residuals(const FockRep& rep, const DeformationPoint& point) {
    const auto size = static_cast<Eigen::Index>(rep.dim());
    const Eigen::MatrixXd aad = rep.a * rep.a_dagger;
    const Eigen::MatrixXd ada = rep.a_dagger * rep.a;

    Eigen::VectorXd p_pow(size), q_pow(size), bracket(size);
    for (Eigen::Index n = 0; n < size; ++n) {
        const double e = static_cast<double>(n);
        p_pow(n) = std::pow(point.p(), e);
        q_pow(n) = std::pow(point.q(), e);
        bracket(n) = qp_bracket_int(static_cast<LevelIndex>(n), point);
    }

    const Eigen::MatrixXd q_rel = aad - point.q() * ada - Eigen::MatrixXd(p_pow.asDiagonal());
    const Eigen::MatrixXd p_rel = aad - point.p() * ada - Eigen::MatrixXd(q_pow.asDiagonal());
    const Eigen::MatrixXd num_rel = ada - Eigen::MatrixXd(bracket.asDiagonal());

    const auto kept = size - 1;
    return {
        q_rel.leftCols(kept).cwiseAbs().maxCoeff(),
        p_rel.leftCols(kept).cwiseAbs().maxCoeff(),
        num_rel.cwiseAbs().maxCoeff(),
    };
}

} // namespace qpdeg
