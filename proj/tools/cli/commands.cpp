#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>

#include "cli/reference_values.hpp"
#include "jtspec/errors.hpp"
#include "jtspec/pseudoherm.hpp"
#include "jtspec/rwa.hpp"
#include "jtspec/spectrum.hpp"
#include "jtspec/transforms.hpp"

namespace jtspec::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

constexpr double kMetricTolerance = 1e-12;
constexpr double kClosureTolerance = 1e-10;

std::vector<BasisSpec> schedule_for(const RunConfig& c)
{
    std::vector<int> cutoffs;
    for (const int n : kDefaultSchedule)
        if (n < c.schedule_max)
            cutoffs.push_back(n);
    cutoffs.push_back(c.schedule_max);
    return total_number_schedule(cutoffs);
}

const PublishedRow* published_row(double kappa2)
{
    for (const PublishedRow& row : kPublishedTable)
        if (std::abs(row.kappa2 - kappa2) < 1e-12)
            return &row;
    return nullptr;
}

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

}  // namespace

CommandResult cmd_table1(const RunConfig& c)
{
    CommandResult result;
    Table& t = result.table;
    t.columns = {"kappa2", "state", "E_rwa_eq9", "E_rwa_tablefit", "E_exact_computed",
                 "E_rwa_paper", "E_exact_paper", "abs_delta"};

    std::vector<double> couplings;
    if (c.kappa2_override)
        couplings.push_back(*c.kappa2_override);
    else
        for (const PublishedRow& row : kPublishedTable)
            couplings.push_back(row.kappa2);

    const auto schedule = schedule_for(c);
    double worst_exact = 0.0;
    double worst_fit = 0.0;
    double worst_eq9 = 0.0;
    int checked = 0;
    int within = 0;
    bool all_converged = true;

    for (const double kappa2 : couplings) {
        const ModelParams p = ModelParams::from_kappa2(c.params.omega, c.params.omega0, kappa2);
        const Spectrum s = converge_ground(build_full_jt, p, c.tol, schedule, 2);
        all_converged = all_converged && s.converged;
        const double exact[2] = {s.ground(), first_excited(s)};
        const std::vector<double> eq9 = rwa_lowest_levels(p, 2);
        const PublishedRow* ref = published_row(kappa2);
        const bool table_regime = c.params.omega == 1.0 && c.params.omega0 == 0.0;

        for (int m = 0; m < 2; ++m) {
            const double fit = c.params.omega0 == 0.0 ? table_fit_energy(m, p) : kNaN;
            double rwa_paper = kNaN;
            double exact_paper = kNaN;
            if (ref && table_regime) {
                rwa_paper = m == 0 ? ref->rwa_ground : ref->rwa_excited;
                exact_paper = m == 0 ? ref->exact_ground : ref->exact_excited;
            }
            const double delta = std::abs(exact[m] - exact_paper);
            if (!std::isnan(exact_paper)) {
                ++checked;
                if (delta <= kExactTolerance)
                    ++within;
                worst_exact = std::max(worst_exact, delta);
                worst_fit = std::max(worst_fit, std::abs(fit - rwa_paper));
                worst_eq9 = std::max(worst_eq9, std::abs(eq9[static_cast<std::size_t>(m)] - rwa_paper));
            }
            t.add_row({kappa2, std::string(m == 0 ? "ground" : "excited"), eq9[static_cast<std::size_t>(m)], fit,
                       exact[m], rwa_paper, exact_paper, delta});
        }
    }

    t.summary = {{"entries_checked", std::int64_t{checked}},
                 {"entries_within_tolerance", std::int64_t{within}},
                 {"exact_tolerance", kExactTolerance},
                 {"max_abs_delta_exact", worst_exact},
                 {"max_abs_delta_rwa_tablefit", worst_fit},
                 {"max_abs_delta_rwa_eq9", worst_eq9},
                 {"all_converged", yes_no(all_converged)}};
    result.exit_code = (within == checked && all_converged) ? kExitOk : kExitThreshold;
    return result;
}

CommandResult cmd_spectrum(const RunConfig& c)
{
    CommandResult result;
    Table& t = result.table;
    t.columns = {"index", "re", "im"};
    const BasisPtr basis = make_basis(c.basis);
    const Spectrum s = diagonalize(builder_for(c.model)(c.params, basis));
    for (std::size_t k = 0; k < s.size(); ++k)
        t.add_row({static_cast<std::int64_t>(k), s.eigenvalues[k].real(), s.eigenvalues[k].imag()});
    t.summary = {{"model", std::string(to_string(c.model))},
                 {"basis", to_string(c.basis)},
                 {"dimension", static_cast<std::int64_t>(s.size())},
                 {"max_imag", s.max_imag()}};
    return result;
}

CommandResult cmd_converge(const RunConfig& c)
{
    CommandResult result;
    Table& t = result.table;
    t.columns = {"cutoff", "ground_energy"};
    const Spectrum s = converge_ground(build_full_jt, c.params, c.tol, schedule_for(c), 2);
    for (const CutoffPoint& pt : s.cutoff_history)
        t.add_row({std::int64_t{pt.cutoff}, pt.ground_energy});
    t.summary = {{"converged", yes_no(s.converged)},
                 {"tolerance", c.tol},
                 {"ground_energy", s.ground()},
                 {"first_excited", first_excited(s)}};
    result.exit_code = s.converged ? kExitOk : kExitThreshold;
    return result;
}

CommandResult cmd_transform_residual(const RunConfig& c)
{
    CommandResult result;
    Table& t = result.table;
    t.columns = {"kappa", "residual", "residual_spectral"};
    if (c.grid.empty())
        throw UsageError("transform-residual: empty coupling grid");
    const TransformReport report = residual_study(c.params, make_basis(c.basis), c.grid);
    for (std::size_t i = 0; i < report.kappa_values.size(); ++i)
        t.add_row({report.kappa_values[i], report.residual_norms[i], report.spectral_norms[i]});
    const bool in_window = report.fitted_slope >= kSlopeLow && report.fitted_slope <= kSlopeHigh;
    t.summary = {{"fitted_slope", report.fitted_slope},
                 {"slope_window_low", kSlopeLow},
                 {"slope_window_high", kSlopeHigh},
                 {"slope_in_window", yes_no(in_window)},
                 {"edge_layers_dropped", std::int64_t{report.edge_layers}}};
    result.exit_code = in_window ? kExitOk : kExitThreshold;
    return result;
}

CommandResult cmd_pseudoherm(const RunConfig& c)
{
    CommandResult result;
    Table& t = result.table;
    t.columns = {"gamma", "sigma0_residual", "parity_residual", "combined_residual", "pt_residual",
                 "conjugation_closure"};
    if (c.grid.empty())
        throw UsageError("pseudoherm: empty gamma grid");
    const BasisPtr basis = make_basis(c.basis);
    const OperatorMatrix sigma0 = pauli_ops(basis).sigma0;
    const OperatorMatrix parity = parity_op(basis);
    bool ok = true;
    for (const double gamma : c.grid) {
        ModelParams p = c.params;
        p.gamma = gamma;
        const OperatorMatrix h = build_nonhermitian(p, basis);
        const double r_sigma = check_pseudo_hermitian(h, sigma0);
        const double r_parity = check_pseudo_hermitian(h, parity);
        const double r_combined = check_combined_symmetry(h);
        const double r_pt = check_pt(h);
        const double closure = conjugation_closure_distance(diagonalize(h).eigenvalues);
        ok = ok && r_sigma <= kMetricTolerance && r_parity <= kMetricTolerance && r_combined <= kMetricTolerance &&
             closure <= kClosureTolerance;
        t.add_row({gamma, r_sigma, r_parity, r_combined, r_pt, closure});
    }
    t.summary = {{"metric_tolerance", kMetricTolerance},
                 {"closure_tolerance", kClosureTolerance},
                 {"all_within_tolerance", yes_no(ok)}};
    result.exit_code = ok ? kExitOk : kExitThreshold;
    return result;
}

CommandResult cmd_reality_scan(const RunConfig& c)
{
    CommandResult result;
    Table& t = result.table;
    t.columns = {"gamma", "max_imag_lowk"};
    if (c.grid.empty())
        throw UsageError("reality-scan: empty gamma grid");
    const RealityReport report = reality_scan(c.params, make_basis(c.basis), c.grid, c.k_low);
    for (std::size_t i = 0; i < report.gamma_values.size(); ++i)
        t.add_row({report.gamma_values[i], report.max_imag_lowk[i]});
    t.summary = {{"k", std::int64_t{report.k}},
                 {"tolerance", report.tolerance},
                 {"detected_threshold", report.detected_threshold.value_or(kNaN)},
                 {"lowest_block_threshold", lowest_block_reality_threshold(c.params)}};
    return result;
}

CommandResult run_command(const RunConfig& c)
{
    try {
        switch (c.command) {
        case Command::Table1: return cmd_table1(c);
        case Command::Spectrum: return cmd_spectrum(c);
        case Command::Converge: return cmd_converge(c);
        case Command::TransformResidual: return cmd_transform_residual(c);
        case Command::Pseudoherm: return cmd_pseudoherm(c);
        case Command::RealityScan: return cmd_reality_scan(c);
        }
    } catch (const ResonanceError& e) {
        throw UsageError(e.what());
    } catch (const DimensionError&) {
        throw;
    } catch (const UsageError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    throw UsageError("unknown command");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    const ParseResult parsed = parse_command_line(argc, argv, out, err);
    if (!parsed.config)
        return parsed.exit_code;
    const RunConfig& config = *parsed.config;

    CommandResult result;
    try {
        result = run_command(config);
    } catch (const UsageError& e) {
        err << "jtspec: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "jtspec: " << to_string(config.command) << " failed: " << e.what() << '\n';
        return kExitThreshold;
    }

    if (config.output_path) {
        std::ofstream file(*config.output_path, std::ios::binary);
        if (!file) {
            err << "jtspec: cannot open " << *config.output_path << " for writing\n";
            return kExitUsage;
        }
        write_table(result.table, config.format, file);
    } else {
        write_table(result.table, config.format, out);
    }
    if (config.format == OutputFormat::Csv)
        write_summary(result.table, err);
    return result.exit_code;
}

}  // namespace jtspec::cli
