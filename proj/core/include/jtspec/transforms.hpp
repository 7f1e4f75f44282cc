#pragma once

#include <span>
#include <vector>

#include "jtspec/models.hpp"
#include "jtspec/operator_matrix.hpp"

namespace jtspec {

/// Generator of the similarity transform that removes the counter-rotating
/// mode-2 coupling:
///   T = kappa/(w+w0) (sigma+ a2^+ - sigma- a2) + kappa/(w-w0) (sigma- a2^+ - sigma+ a2)
/// Anti-Hermitian for real kappa. Throws ResonanceError at w = +-w0.
OperatorMatrix build_T(const ModelParams& params, const BasisPtr& basis);

/// Boson rotation U = exp[(pi/4)(a1^+ a2 - a2^+ a1)].
///
/// The generator conserves a1^+ a1 + a2^+ a2, so in a TotalNumber basis U
/// is exact. In a PerMode basis the top layers are cut and a warning is
/// written to std::clog.
OperatorMatrix build_U(const BasisPtr& basis);

/// exp(G) H exp(-G).
OperatorMatrix conjugate(const OperatorMatrix& generator, const OperatorMatrix& h);

enum class NormKind { Frobenius, Spectral };

/// Number of Fock layers below the truncation edge that residual norms ignore.
inline constexpr int kResidualEdgeLayers = 2;

/// || P (e^T H_full e^-T - H_2nd) P || at one coupling, with P the bulk
/// projector that drops `edge_layers` top Fock layers.
double transform_residual(const ModelParams& params, const BasisPtr& basis, NormKind norm = NormKind::Frobenius,
                          int edge_layers = kResidualEdgeLayers);

struct TransformReport {
    std::vector<double> kappa_values;
    std::vector<double> residual_norms;  // Frobenius
    std::vector<double> spectral_norms;
    double fitted_slope = 0.0;           // least squares on (log kappa, log residual)
    BasisSpec basis;
    int edge_layers = kResidualEdgeLayers;
};

/// Couplings must lie within this fraction of min|w +- w0|.
inline constexpr double kWeakCouplingFraction = 0.1;

/// Sweeps the real coupling over `kappa_grid` (strictly positive, ascending,
/// each <= 0.1 min|w +- w0|) and fits the scaling exponent of the residual.
/// `params_template.kappa` is ignored.
TransformReport residual_study(const ModelParams& params_template, const BasisPtr& basis,
                               std::span<const double> kappa_grid);

/// Least-squares slope of log(y) against log(x). Needs >= 2 positive points.
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace jtspec
