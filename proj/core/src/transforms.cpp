#include "jtspec/transforms.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <stdexcept>
#include <string>

#include "jtspec/errors.hpp"
#include "jtspec/expm.hpp"
#include "jtspec/fock_ops.hpp"

namespace jtspec {

OperatorMatrix build_T(const ModelParams& p, const BasisPtr& basis)
{
    p.validate();
    require_off_resonance(p, "build_T");
    const auto ops = SparseFockOperators::build(basis);
    const Complex c_plus = p.kappa / (p.omega + p.omega0);
    const Complex c_minus = p.kappa / (p.omega - p.omega0);
    const SparseMatrix t = c_plus * SparseMatrix(ops.sigma_plus * ops.a2_dag - ops.sigma_minus * ops.a2) +
                           c_minus * SparseMatrix(ops.sigma_minus * ops.a2_dag - ops.sigma_plus * ops.a2);
    return ops.dense(t, p.kappa_is_real() ? Hint::AntiHermitian : Hint::General);
}

OperatorMatrix build_U(const BasisPtr& basis)
{
    if (basis->spec().truncation != Truncation::TotalNumber)
        std::clog << "warning: boson rotation in " << to_string(basis->spec())
                  << " is only approximate near the cutoff; use a TotalNumber basis for exact closure\n";
    const auto ops = SparseFockOperators::build(basis);
    const SparseMatrix generator = (std::numbers::pi / 4.0) * SparseMatrix(ops.a1_dag * ops.a2 - ops.a2_dag * ops.a1);
    return expm(ops.dense(generator, Hint::AntiHermitian));
}

OperatorMatrix conjugate(const OperatorMatrix& generator, const OperatorMatrix& h)
{
    require_same_basis(generator, h);
    const Matrix forward = expm(generator.entries());
    const Matrix backward = expm(Matrix(-generator.entries()));
    const bool similarity_is_unitary = generator.hint() == Hint::AntiHermitian;
    const Hint hint = similarity_is_unitary ? h.hint() : Hint::General;
    return {h.basis_ptr(), forward * h.entries() * backward, hint};
}

namespace {

Matrix bulk_difference(const ModelParams& p, const BasisPtr& basis, int edge_layers)
{
    const OperatorMatrix transformed = conjugate(build_T(p, basis), build_full_jt(p, basis));
    const OperatorMatrix second_order = build_eq4_rhs(p, basis);
    return restrict_to(Matrix(transformed.entries() - second_order.entries()), bulk_mask(*basis, edge_layers));
}

}  // namespace

double transform_residual(const ModelParams& p, const BasisPtr& basis, NormKind norm, int edge_layers)
{
    const Matrix diff = bulk_difference(p, basis, edge_layers);
    return norm == NormKind::Frobenius ? diff.norm() : spectral_norm(diff);
}

TransformReport residual_study(const ModelParams& tmpl, const BasisPtr& basis, std::span<const double> kappa_grid)
{
    tmpl.validate();
    require_off_resonance(tmpl, "residual_study");
    if (kappa_grid.empty())
        throw std::invalid_argument("residual_study: empty coupling grid");

    const double limit =
        kWeakCouplingFraction * std::min(std::abs(tmpl.omega + tmpl.omega0), std::abs(tmpl.omega - tmpl.omega0));
    for (std::size_t i = 0; i < kappa_grid.size(); ++i) {
        const double k = kappa_grid[i];
        if (!(k > 0.0))
            throw std::invalid_argument("residual_study: couplings must be strictly positive");
        if (i > 0 && !(k > kappa_grid[i - 1]))
            throw std::invalid_argument("residual_study: couplings must be strictly ascending");
        if (k > limit)
            throw std::invalid_argument("residual_study: coupling " + std::to_string(k) +
                                        " exceeds the weak-coupling guard " + std::to_string(limit));
    }

    TransformReport report;
    report.basis = basis->spec();
    for (const double k : kappa_grid) {
        ModelParams p = tmpl;
        p.kappa = Complex(k, 0.0);
        const Matrix diff = bulk_difference(p, basis, report.edge_layers);
        report.kappa_values.push_back(k);
        report.residual_norms.push_back(diff.norm());
        report.spectral_norms.push_back(spectral_norm(diff));
    }
    report.fitted_slope = report.kappa_values.size() >= 2
                              ? loglog_slope(report.kappa_values, report.residual_norms)
                              : std::nan("");
    return report;
}

double loglog_slope(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("loglog_slope: need at least two (x, y) pairs");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const auto n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0))
            throw std::invalid_argument("loglog_slope: values must be positive");
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0)
        throw std::invalid_argument("loglog_slope: x values are all equal");
    return (n * sxy - sx * sy) / denom;
}

}  // namespace jtspec
