#include "cli/args.hpp"

#include <cmath>
#include <ostream>

#include "CLI11.hpp"

namespace jtspec::cli {

std::string_view to_string(Command command)
{
    switch (command) {
    case Command::Table1: return "table1";
    case Command::Spectrum: return "spectrum";
    case Command::Converge: return "converge";
    case Command::TransformResidual: return "transform-residual";
    case Command::Pseudoherm: return "pseudoherm";
    case Command::RealityScan: return "reality-scan";
    }
    return "?";
}

namespace {

double parse_number(std::string_view text)
{
    const std::string s(text);
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(s, &used);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + s + "'");
    }
    if (used != s.size() || !std::isfinite(value))
        throw UsageError("not a number: '" + s + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return parts;
}

}  // namespace

std::vector<double> parse_grid(std::string_view text)
{
    if (text.empty())
        throw UsageError("empty grid");
    std::vector<double> out;
    if (text.find(':') != std::string_view::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3)
            throw UsageError("grid must look like a:b:step, got '" + std::string(text) + "'");
        const double a = parse_number(parts[0]);
        const double b = parse_number(parts[1]);
        const double step = parse_number(parts[2]);
        if (!(step > 0.0))
            throw UsageError("grid step must be > 0");
        if (b >= a) {
            const auto count = static_cast<long>(std::floor((b - a) / step + 1e-9)) + 1;
            for (long i = 0; i < count; ++i)
                out.push_back(a + static_cast<double>(i) * step);
        }
    } else {
        for (const auto part : split(text, ','))
            out.push_back(parse_number(part));
    }
    if (out.empty())
        throw UsageError("grid '" + std::string(text) + "' contains no points");
    return out;
}

RunConfig default_config(Command command)
{
    RunConfig c;
    c.command = command;
    c.params.omega = 1.0;
    c.params.omega0 = 0.0;
    switch (command) {
    case Command::Table1:
    case Command::Converge:
        c.basis = BasisSpec::total_number(40);
        c.params.kappa = Complex(std::sqrt(0.5), 0.0);
        break;
    case Command::Spectrum:
        c.basis = BasisSpec::total_number(10);
        c.params.kappa = Complex(std::sqrt(0.1), 0.0);
        break;
    case Command::TransformResidual:
        c.params.omega0 = 0.2;
        c.basis = BasisSpec::per_mode(8);
        c.grid = {0.01, 0.02, 0.04, 0.08};
        break;
    case Command::Pseudoherm:
        c.basis = BasisSpec::per_mode(8);
        c.grid = {0.1, 0.2, 0.3};
        break;
    case Command::RealityScan:
        c.basis = BasisSpec::per_mode(8);
        c.grid = parse_grid("0:0.5:0.005");
        break;
    }
    return c;
}

ParseResult parse_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Spectral toolkit for the two-mode Jahn-Teller model: rotating-wave reduction, exact "
                 "diagonalization and pseudo-Hermiticity checks"};
    app.name("jtspec");
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<double> omega, omega0, kappa2, gamma, tol;
    std::optional<int> nmax, total_nmax, k_low;
    std::optional<std::string> grid, out_path;
    std::string format = "csv";
    std::string model = "full";

    app.add_option("--omega", omega, "oscillator frequency (> 0)");
    app.add_option("--omega0", omega0, "level separation");
    app.add_option("--kappa2", kappa2, "squared real coupling");
    app.add_option("--gamma", gamma, "imaginary coupling magnitude");
    app.add_option("--nmax", nmax, "per-mode Fock cutoff");
    app.add_option("--total-nmax", total_nmax, "total boson number cutoff");
    app.add_option("--tol", tol, "convergence tolerance");
    app.add_option("--k-low", k_low, "number of low-lying levels checked for reality");
    app.add_option("--grid", grid, "sweep grid, a:b:step or comma list");
    app.add_option("--format", format, "csv, json or pretty")->check(CLI::IsMember({"csv", "json", "pretty"}));
    app.add_option("--out", out_path, "write the table to this file instead of stdout");

    const std::pair<Command, const char*> commands[] = {
        {Command::Table1, "reproduce the ground/first-excited energy table"},
        {Command::Spectrum, "print the full spectrum of one model"},
        {Command::Converge, "ground energy versus total-number cutoff"},
        {Command::TransformResidual, "scaling of the second-order transform remainder"},
        {Command::Pseudoherm, "pseudo-Hermiticity and symmetry residuals of the imaginary-coupling model"},
        {Command::RealityScan, "reality of the low-lying spectrum versus gamma"},
    };
    std::vector<std::pair<Command, CLI::App*>> subs;
    for (const auto& [cmd, help] : commands) {
        CLI::App* sub = app.add_subcommand(std::string(to_string(cmd)), help);
        if (cmd == Command::Spectrum)
            sub->add_option("--model", model, "full, rwa, second-order, rotated or nonhermitian");
        subs.emplace_back(cmd, sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return {std::nullopt, app.exit(e, out, err)};
    } catch (const CLI::CallForAllHelp& e) {
        return {std::nullopt, app.exit(e, out, err)};
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return {std::nullopt, kExitUsage};
    }

    Command command = Command::Table1;
    for (const auto& [cmd, sub] : subs)
        if (sub->parsed())
            command = cmd;

    try {
        RunConfig c = default_config(command);
        if (omega) c.params.omega = *omega;
        if (omega0) c.params.omega0 = *omega0;
        if (kappa2) {
            if (*kappa2 < 0.0)
                throw UsageError("--kappa2 must be >= 0");
            c.params.kappa = Complex(std::sqrt(*kappa2), 0.0);
            c.kappa2_override = *kappa2;
        }
        if (gamma) c.params.gamma = *gamma;
        if (tol) {
            if (!(*tol > 0.0))
                throw UsageError("--tol must be > 0");
            c.tol = *tol;
        }
        if (k_low) {
            if (*k_low < 1)
                throw UsageError("--k-low must be >= 1");
            c.k_low = *k_low;
        }
        if (nmax && total_nmax)
            throw UsageError("--nmax and --total-nmax are mutually exclusive");
        if (nmax) {
            if (*nmax < 1)
                throw UsageError("--nmax must be >= 1");
            c.basis = BasisSpec::per_mode(*nmax);
        }
        if (total_nmax) {
            if (*total_nmax < 1)
                throw UsageError("--total-nmax must be >= 1");
            c.basis = BasisSpec::total_number(*total_nmax);
            c.schedule_max = *total_nmax;
        }
        if ((command == Command::Table1 || command == Command::Converge) && nmax)
            throw UsageError("the convergence schedule uses total-number cutoffs; pass --total-nmax");
        if (grid) c.grid = parse_grid(*grid);
        c.format = format == "json" ? OutputFormat::Json : format == "pretty" ? OutputFormat::Pretty : OutputFormat::Csv;
        c.output_path = out_path;
        try {
            c.model = parse_model_kind(model);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        try {
            c.params.validate();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return {std::move(c), kExitOk};
    } catch (const UsageError& e) {
        err << "jtspec: " << e.what() << '\n';
        return {std::nullopt, kExitUsage};
    }
}

}  // namespace jtspec::cli
