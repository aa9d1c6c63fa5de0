#pragma once

#include "qpdeg/degeneracy.hpp"
#include "qpdeg/qp_core.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qpdeg {

struct PowerMap { double exponent; }; // p = q^l
struct LogMap { double alpha; };      // p = 1 + alpha ln q
struct ExpMap { double alpha; };      // p = exp(alpha (q - 1))
struct CustomMap {
    std::function<double(double)> map;
    std::string label;
};

/// One-parameter reduction p = f(q) of the two-parameter oscillator.
///
/// Factories check the parameter ranges (l >= 0, alpha > 0) and throw
/// DomainError otherwise. Admissibility of the map itself (f(1) = 1,
/// monotone, values in [0, 1]) is checked by validate_family.
class ReductionFamily {
public:
    using Kind = std::variant<PowerMap, LogMap, ExpMap, CustomMap>;

    static ReductionFamily power(double exponent);
    static ReductionFamily log(double alpha);
    static ReductionFamily exp(double alpha);
    /// `map` must be pure; it is called from any thread.
    static ReductionFamily custom(std::function<double(double)> map, std::string label,
                                  double domain_low = 0.0);

    const Kind& kind() const noexcept { return kind_; }
    double domain_low() const noexcept { return domain_low_; }

    /// f(q) without the domain check.
    double operator()(double q) const;

    /// Spec string ("power:2.5", "log:6.05", ...) or the custom label.
    std::string label() const;

    /// p = q^0 = 1, the Arik-Coon end of the power class.
    bool is_boundary_member() const noexcept;

private:
    ReductionFamily(Kind kind, double domain_low) : kind_(std::move(kind)), domain_low_(domain_low) {}

    Kind kind_;
    double domain_low_;
};

/// Parses `power:<l>`, `log:<alpha>` or `exp:<alpha>`.
ReductionFamily parse_family(std::string_view spec);

/// f(q); DomainError when q is outside [domain_low, 1].
double family_p(const ReductionFamily& fam, double q);

inline constexpr std::size_t kFamilyGridPoints = 10'000;

enum class ViolationKind { NonFinite, OutOfRange, Decreasing, EndpointNotOne };

struct FamilyViolation {
    double q;
    ViolationKind kind;
};

struct ValidationReport {
    bool passed = true;
    bool boundary_member = false; // Power(0): admitted, outside 0 < l < infinity
    std::vector<FamilyViolation> violations;
};

ValidationReport validate_family(const ReductionFamily& fam);

/// q* in (domain_low, 1) where the family realizes `cond`.
///
/// Scans g(q) = residual(cond, (q, f(q))) on a 10^4-point grid. nullopt when
/// g has no sign change (the family does not admit the degeneracy); a root
/// closer to a tangency than the grid spacing can be missed. Several sign
/// changes throw ConsistencyError.
std::optional<double> solve_degeneracy_on_family(const ReductionFamily& fam, const DegeneracyCondition& cond);

/// energy_level(n, (q, f(q))).
double family_energy(const ReductionFamily& fam, LevelIndex n, double q);

std::string to_string(ViolationKind kind);

} // namespace qpdeg
