#pragma once

#include <functional>
#include <string_view>

#include "jtspec/fock_ops.hpp"
#include "jtspec/operator_matrix.hpp"

namespace jtspec {

/// Physical constants of the two-mode, two-level model.
///
/// `kappa` is the coupling of the Hermitian family and may be complex;
/// `gamma` is the magnitude of the purely imaginary coupling used by
/// build_nonhermitian.
struct ModelParams {
    double omega = 1.0;   // oscillator frequency, > 0
    double omega0 = 0.0;  // level separation
    Complex kappa{0.0, 0.0};
    double gamma = 0.0;   // >= 0

    /// omega = 1-style table regime: real kappa = sqrt(kappa2).
    static ModelParams from_kappa2(double omega, double omega0, double kappa2);

    [[nodiscard]] bool kappa_is_real() const { return kappa.imag() == 0.0; }

    /// Throws std::invalid_argument on omega <= 0, gamma < 0 or non-finite fields.
    void validate() const;
};

/// Throws ResonanceError when omega +- omega0 vanishes. `what` names the
/// caller in the diagnostic.
void require_off_resonance(const ModelParams& params, std::string_view what);

/// omega (a1^+ a1 + a2^+ a2 + 1) + omega0 sigma0 + kappa[(a1 + a2^+) sigma+ + (a1^+ + a2) sigma-]
OperatorMatrix build_full_jt(const ModelParams& params, const BasisPtr& basis);

/// Rotating-wave form: the mode-2 coupling is replaced by a2 sigma+ + a2^+ sigma-.
OperatorMatrix build_rwa(const ModelParams& params, const BasisPtr& basis);

/// Second-order transformed Hamiltonian: the rotating-wave part plus the
/// explicit kappa^2 corrections, without the third-order remainder.
///
/// Terms, in the order they are assembled:
///   kappa^2/(w+w0) (a1^+ a2^+ + a1 a2) sigma0
///   kappa^2/(w-w0) (a1^+ a2 + a1 a2^+) sigma0
///   w kappa^2/(w^2-w0^2) (a2^+^2 + a2^2 + 2 a2^+ a2) sigma0
///   kappa^2 sigma+ sigma- /(w-w0) - kappa^2 sigma- sigma+ /(w+w0)
///
/// Throws ResonanceError for omega == +-omega0.
OperatorMatrix build_eq4_rhs(const ModelParams& params, const BasisPtr& basis);

/// Jaynes-Cummings form after the boson rotation: only mode 1 couples,
/// with strength sqrt(2) kappa.
OperatorMatrix build_rotated(const ModelParams& params, const BasisPtr& basis);

/// Rotated form with kappa -> i gamma. Not Hermitian for gamma > 0.
OperatorMatrix build_nonhermitian(const ModelParams& params, const BasisPtr& basis);

/// Conserved quantity of the full model: a1^+ a1 - a2^+ a2 + sigma0 / 2.
OperatorMatrix lambda_operator(const BasisPtr& basis);

enum class ModelKind { FullJT, Rwa, Eq4, Rotated, NonHermitian };

using HamiltonianBuilder = std::function<OperatorMatrix(const ModelParams&, const BasisPtr&)>;

HamiltonianBuilder builder_for(ModelKind kind);
ModelKind parse_model_kind(std::string_view name);
std::string_view to_string(ModelKind kind);

}  // namespace jtspec
