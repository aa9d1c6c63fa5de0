#include "qpdeg/families.hpp"

#include "qpdeg/errors.hpp"
#include "root_scan.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>

namespace qpdeg {

namespace {

constexpr double kEndpointTolerance = 1e-12;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double parse_decimal(std::string_view text, std::string_view spec) {
    double value = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last || !std::isfinite(value)) {
        throw ParseError(fmt::format("invalid number '{}' in family spec '{}'", text, spec));
    }
    return value;
}

} // namespace

ReductionFamily ReductionFamily::power(double exponent) {
    if (!std::isfinite(exponent) || exponent < 0.0) {
        throw DomainError(fmt::format("power family needs l >= 0, got {}", exponent));
    }
    return {PowerMap{exponent}, 0.0};
}

ReductionFamily ReductionFamily::log(double alpha) {
    if (!std::isfinite(alpha) || alpha <= 0.0) {
        throw DomainError(fmt::format("log family needs alpha > 0, got {}", alpha));
    }
    // p reaches 0 at q = exp(-1/alpha); below that p would be negative.
    return {LogMap{alpha}, std::exp(-1.0 / alpha)};
}

ReductionFamily ReductionFamily::exp(double alpha) {
    if (!std::isfinite(alpha) || alpha <= 0.0) {
        throw DomainError(fmt::format("exp family needs alpha > 0, got {}", alpha));
    }
    return {ExpMap{alpha}, 0.0};
}

ReductionFamily ReductionFamily::custom(std::function<double(double)> map, std::string label, double domain_low) {
    if (!map) {
        throw DomainError("custom family needs a map");
    }
    if (!(domain_low >= 0.0 && domain_low < 1.0)) {
        throw DomainError("custom family domain must start in [0, 1)");
    }
    return {CustomMap{std::move(map), std::move(label)}, domain_low};
}

double ReductionFamily::operator()(double q) const {
    return std::visit(overloaded{
                          [q](const PowerMap& m) { return std::pow(q, m.exponent); },
                          // clamp the rounding at q = exp(-1/alpha)
                          [q](const LogMap& m) { return std::max(0.0, 1.0 + m.alpha * std::log(q)); },
                          [q](const ExpMap& m) { return std::exp(m.alpha * (q - 1.0)); },
                          [q](const CustomMap& m) { return m.map(q); },
                      },
                      kind_);
}

std::string ReductionFamily::label() const {
    return std::visit(overloaded{
                          [](const PowerMap& m) { return fmt::format("power:{}", m.exponent); },
                          [](const LogMap& m) { return fmt::format("log:{}", m.alpha); },
                          [](const ExpMap& m) { return fmt::format("exp:{}", m.alpha); },
                          [](const CustomMap& m) { return m.label; },
                      },
                      kind_);
}

bool ReductionFamily::is_boundary_member() const noexcept {
    const auto* power_map = std::get_if<PowerMap>(&kind_);
    return power_map != nullptr && power_map->exponent == 0.0;
}

ReductionFamily parse_family(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) {
        throw ParseError(fmt::format("family spec '{}' must look like power:<l>, log:<alpha> or exp:<alpha>", spec));
    }
    const auto name = spec.substr(0, colon);
    const double value = parse_decimal(spec.substr(colon + 1), spec);
    if (name == "power") {
        return ReductionFamily::power(value);
    }
    if (name == "log") {
        return ReductionFamily::log(value);
    }
    if (name == "exp") {
        return ReductionFamily::exp(value);
    }
    throw ParseError(fmt::format("unknown family '{}' (expected power, log or exp)", name));
}

double family_p(const ReductionFamily& fam, double q) {
    if (!(q >= fam.domain_low() && q <= 1.0)) {
        throw DomainError(fmt::format("q = {} outside the {} domain [{}, 1]", q, fam.label(), fam.domain_low()));
    }
    return fam(q);
}

ValidationReport validate_family(const ReductionFamily& fam) {
    ValidationReport report;
    report.boundary_member = fam.is_boundary_member();

    const auto grid = detail::uniform_grid(fam.domain_low(), 1.0, kFamilyGridPoints);
    double previous = -std::numeric_limits<double>::infinity();
    for (const double q : grid) {
        const double p = fam(q);
        if (!std::isfinite(p)) {
            report.violations.push_back({q, ViolationKind::NonFinite});
            continue;
        }
        if (p < 0.0 || p > 1.0) {
            report.violations.push_back({q, ViolationKind::OutOfRange});
        }
        if (p < previous) {
            report.violations.push_back({q, ViolationKind::Decreasing});
        }
        previous = p;
    }
    const double at_one = fam(1.0);
    if (!(std::abs(at_one - 1.0) <= kEndpointTolerance)) {
        report.violations.push_back({1.0, ViolationKind::EndpointNotOne});
    }
    report.passed = report.violations.empty();
    return report;
}

std::optional<double> solve_degeneracy_on_family(const ReductionFamily& fam, const DegeneracyCondition& cond) {
    auto g = [&](double q) { return residual(cond, DeformationPoint{q, fam(q)}); };
    auto g_admissible = [&](double q) -> std::optional<double> {
        const double p = fam(q);
        if (q == 0.0 && p == 0.0) {
            return std::nullopt;
        }
        return residual(cond, DeformationPoint{q, p});
    };
    const auto grid = detail::uniform_grid(fam.domain_low(), 1.0, kFamilyGridPoints);
    auto found = detail::scan_sign_changes(g_admissible, grid);
    // q* must be interior; p = 1 meets every non-ground curve at its (0, 1) endpoint.
    std::erase_if(found, [&](const detail::Bracket& b) {
        return b.lo == b.hi && (b.lo == fam.domain_low() || b.lo == 1.0);
    });
    const auto bracket = detail::unique_bracket(found, cond.label() + " on " + fam.label());
    if (!bracket) {
        return std::nullopt;
    }
    return detail::bisect(g, *bracket, kMaxBisectionSteps);
}

double family_energy(const ReductionFamily& fam, LevelIndex n, double q) {
    return energy_level(n, DeformationPoint{q, family_p(fam, q)});
}

std::string to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::NonFinite:
        return "non-finite";
    case ViolationKind::OutOfRange:
        return "outside [0,1]";
    case ViolationKind::Decreasing:
        return "decreasing";
    case ViolationKind::EndpointNotOne:
        return "f(1) != 1";
    }
    return "unknown";
}

} // namespace qpdeg
