#pragma once

#include "qpdeg/degeneracy.hpp"
#include "qpdeg/families.hpp"
#include "qpdeg/output_table.hpp"

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace qpdeg::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kDomainError = 2,
    kSolverError = 3,
};

/// "m1,m2" -> DegeneracyCondition. Malformed text is a ParseError, an
/// impossible pair a DomainError.
DegeneracyCondition parse_levels(std::string_view text);

/// Columns q,p,dpdq along the degeneracy curve.
OutputTable cmd_curve(const DegeneracyCondition& levels, std::size_t samples);

/// One row q_star,p_star,E_m1,E_m2, or a row of `none` when the family does
/// not admit the degeneracy. Throws DomainError if the family fails validation.
OutputTable cmd_solve(const DegeneracyCondition& levels, const ReductionFamily& family);

/// Rows n,E_n and a trailing `n0=<peak>` comment (`n0=none` at q = 1).
OutputTable cmd_spectrum(const ReductionFamily& family, double q, LevelIndex n_max);

/// Rows q,lambda.
OutputTable cmd_intercept(const ReductionFamily& family, std::size_t samples);

/// Max residuals of both algebra relations and of A^dagger A = [[N]].
OutputTable cmd_fock(std::size_t dim, const DeformationPoint& point);

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qpdeg::cli
