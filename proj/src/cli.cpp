#include "qpdeg/cli.hpp"

#include "qpdeg/errors.hpp"
#include "qpdeg/intercept.hpp"
#include "qpdeg/spectrum_profile.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <memory>

#ifndef QPDEG_VERSION
#define QPDEG_VERSION "0.0.0"
#endif

namespace qpdeg::cli {

namespace {

const char* kind_name(ConditionKind kind) {
    switch (kind) {
    case ConditionKind::Ground:
        return "ground";
    case ConditionKind::Neighbor:
        return "neighbor";
    case ConditionKind::General:
        return "general";
    }
    return "unknown";
}

LevelIndex parse_level(std::string_view text, std::string_view whole) {
    LevelIndex value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ParseError(fmt::format("invalid level '{}' in '{}' (expected m1,m2)", text, whole));
    }
    return value;
}

std::string join_args(const std::vector<std::string>& args) {
    std::string joined = "qpdeg";
    for (const auto& a : args) {
        joined += ' ';
        joined += a;
    }
    return joined;
}

} // namespace

DegeneracyCondition parse_levels(std::string_view text) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) {
        throw ParseError(fmt::format("levels '{}' must look like m1,m2", text));
    }
    return {parse_level(text.substr(0, comma), text), parse_level(text.substr(comma + 1), text)};
}

OutputTable cmd_curve(const DegeneracyCondition& levels, std::size_t samples) {
    const CurveTrace trace = trace_curve(levels, samples);
    OutputTable table({"q", "p", "dpdq"});
    table.add_comment(fmt::format("curve {} ({} type)", levels.label(), kind_name(levels.kind())));
    for (const auto& s : trace.samples) {
        table.add_row({s.q, s.p, s.dpdq});
    }
    return table;
}

OutputTable cmd_solve(const DegeneracyCondition& levels, const ReductionFamily& family) {
    const ValidationReport report = validate_family(family);
    if (!report.passed) {
        const auto& first = report.violations.front();
        throw DomainError(fmt::format("family {} is not admissible: {} at q={} ({} violations)", family.label(),
                                      to_string(first.kind), first.q, report.violations.size()));
    }
    OutputTable table({"q_star", "p_star", "E_m1", "E_m2"});
    table.add_comment(fmt::format("solve {} on {}", levels.label(), family.label()));
    if (report.boundary_member) {
        table.add_comment("boundary member p=1 (Arik-Coon)");
    }
    const auto q_star = solve_degeneracy_on_family(family, levels);
    if (!q_star) {
        table.add_row({std::nullopt, std::nullopt, std::nullopt, std::nullopt});
        table.add_footer("degeneracy not admitted by this family");
        return table;
    }
    table.add_row({*q_star, family(*q_star), family_energy(family, levels.lower(), *q_star),
                   family_energy(family, levels.upper(), *q_star)});
    return table;
}

OutputTable cmd_spectrum(const ReductionFamily& family, double q, LevelIndex n_max) {
    OutputTable table({"n", "E_n"});
    table.add_comment(fmt::format("spectrum {} q={}", family.label(), format_number(q)));
    if (q == 1.0) {
        const auto energies = energy_spectrum(n_max, DeformationPoint{q, family_p(family, q)});
        for (std::size_t n = 0; n < energies.size(); ++n) {
            table.add_row({static_cast<double>(n), energies[n]});
        }
        table.add_footer("n0=none");
        return table;
    }
    const SpectrumProfile prof = profile(family, q, n_max);
    for (std::size_t n = 0; n < prof.energies.size(); ++n) {
        table.add_row({static_cast<double>(n), prof.energies[n]});
    }
    table.add_footer(fmt::format("n0={}", prof.peak_index));
    if (!prof.monotone_tail()) {
        table.add_footer(fmt::format("post-peak decrease violated at n={}", fmt::join(prof.decrease_violations, ";")));
    }
    return table;
}

OutputTable cmd_intercept(const ReductionFamily& family, std::size_t samples) {
    const InterceptCurve curve = intercept_curve(family, samples);
    OutputTable table({"q", "lambda"});
    table.add_comment(fmt::format("asymptotic intercept {}", family.label()));
    if (curve.extrapolated) {
        table.add_comment("extrapolated: lambda = q + f(q) - 1 outside the reference families");
    }
    for (const auto& s : curve.samples) {
        table.add_row({s.q, s.lambda});
    }
    return table;
}

OutputTable cmd_fock(std::size_t dim, const DeformationPoint& point) {
    const FockResiduals res = fock_residuals(fock_rep(dim, point), point);
    OutputTable table({"dim", "q", "p", "q_relation", "p_relation", "number_relation"});
    table.add_comment(fmt::format("max |residual| on columns 0..{}", dim - 2));
    table.add_row({static_cast<double>(dim), point.q(), point.p(), res.q_relation, res.p_relation,
                   res.number_relation});
    return table;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"q,p-deformed oscillator spectra and pairwise degeneracies", "qpdeg"};
    app.require_subcommand(1);
    app.set_version_flag("--version", QPDEG_VERSION);

    std::string out_path;
    std::string levels_text;
    std::string family_text;
    std::size_t samples = 100;
    std::size_t intercept_samples = 11;
    double q = 0.0;
    double p = 0.0;
    LevelIndex n_max = 40;
    std::size_t dim = 8;

    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", out_path, "Write the table to this file"); };

    auto* curve = app.add_subcommand("curve", "Trace the E_m1=E_m2 curve in the (q,p) square");
    curve->add_option("--levels", levels_text, "Level pair m1,m2")->required();
    curve->add_option("--samples", samples, "Number of q samples")->capture_default_str();
    add_out(curve);

    auto* solve = app.add_subcommand("solve", "Find q* where a family realizes E_m1=E_m2");
    solve->add_option("--levels", levels_text, "Level pair m1,m2")->required();
    solve->add_option("--family", family_text, "power:<l> | log:<alpha> | exp:<alpha>")->required();
    add_out(solve);

    auto* spectrum = app.add_subcommand("spectrum", "Energies E_0..E_nmax along a family");
    spectrum->add_option("--family", family_text, "power:<l> | log:<alpha> | exp:<alpha>")->required();
    spectrum->add_option("--q", q, "Deformation parameter q")->required();
    spectrum->add_option("--n-max", n_max, "Highest level")->capture_default_str();
    add_out(spectrum);

    auto* intercept = app.add_subcommand("intercept", "Asymptotic two-particle intercept over q");
    intercept->add_option("--family", family_text, "power:<l> | log:<alpha> | exp:<alpha>")->required();
    intercept->add_option("--samples", intercept_samples, "Number of q samples")->capture_default_str();
    add_out(intercept);

    auto* fock = app.add_subcommand("fock", "Check the algebra on a truncated Fock space");
    fock->add_option("--dim", dim, "Truncation dimension")->capture_default_str();
    fock->add_option("--q", q, "Deformation parameter q")->required();
    fock->add_option("--p", p, "Deformation parameter p")->required();
    add_out(fock);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
    }

    try {
        std::unique_ptr<OutputTable> table;
        if (curve->parsed()) {
            table = std::make_unique<OutputTable>(cmd_curve(parse_levels(levels_text), samples));
        } else if (solve->parsed()) {
            table = std::make_unique<OutputTable>(cmd_solve(parse_levels(levels_text), parse_family(family_text)));
        } else if (spectrum->parsed()) {
            table = std::make_unique<OutputTable>(cmd_spectrum(parse_family(family_text), q, n_max));
        } else if (intercept->parsed()) {
            table = std::make_unique<OutputTable>(cmd_intercept(parse_family(family_text), intercept_samples));
        } else {
            table = std::make_unique<OutputTable>(cmd_fock(dim, DeformationPoint{q, p}));
        }

        std::ofstream file;
        if (!out_path.empty()) {
            file.open(out_path, std::ios::out | std::ios::trunc | std::ios::binary);
            if (!file) {
                err << "error: cannot open '" << out_path << "' for writing\n";
                return kUsageError;
            }
        }
        std::ostream& sink = out_path.empty() ? out : file;
        sink << "# qpdeg " << QPDEG_VERSION << '\n';
        sink << "# command: " << join_args(args) << '\n';
        write_csv(sink, *table);
        return kSuccess;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const ConsistencyError& e) {
        err << "solver error: " << e.what() << '\n';
        return kSolverError;
    } catch (const SingularityError& e) {
        err << "solver error: " << e.what() << '\n';
        return kSolverError;
    }
}

} // namespace qpdeg::cli
