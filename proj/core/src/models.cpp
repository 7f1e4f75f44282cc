#include "jtspec/models.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "jtspec/errors.hpp"

namespace jtspec {

namespace {

/// Relative size below which omega +- omega0 counts as resonant.
constexpr double kResonanceEps = 1e-12;

SparseMatrix free_part(const SparseFockOperators& ops, const ModelParams& p)
{
    return p.omega * (ops.a1_dag * ops.a1 + ops.a2_dag * ops.a2 + ops.id) + Complex(p.omega0) * ops.sigma0;
}

SparseMatrix rwa_part(const SparseFockOperators& ops, const ModelParams& p)
{
    const SparseMatrix coupling = (ops.a1 + ops.a2) * ops.sigma_plus + (ops.a1_dag + ops.a2_dag) * ops.sigma_minus;
    return free_part(ops, p) + p.kappa * coupling;
}

SparseMatrix jc_part(const SparseFockOperators& ops, const ModelParams& p, Complex coupling)
{
    const SparseMatrix exchange = ops.a1 * ops.sigma_plus + ops.a1_dag * ops.sigma_minus;
    return free_part(ops, p) + std::sqrt(2.0) * coupling * exchange;
}

Hint hermitian_if(bool cond)
{
    return cond ? Hint::Hermitian : Hint::General;
}

}  // namespace

ModelParams ModelParams::from_kappa2(double omega, double omega0, double kappa2)
{
    if (!(kappa2 >= 0.0))
        throw std::invalid_argument("kappa^2 must be >= 0");
    ModelParams p;
    p.omega = omega;
    p.omega0 = omega0;
    p.kappa = Complex(std::sqrt(kappa2), 0.0);
    return p;
}

void ModelParams::validate() const
{
    if (!std::isfinite(omega) || !std::isfinite(omega0) || !std::isfinite(kappa.real()) ||
        !std::isfinite(kappa.imag()) || !std::isfinite(gamma))
        throw std::invalid_argument("model parameters must be finite");
    if (!(omega > 0.0))
        throw std::invalid_argument("omega must be > 0, got " + std::to_string(omega));
    if (gamma < 0.0)
        throw std::invalid_argument("gamma must be >= 0, got " + std::to_string(gamma));
}

void require_off_resonance(const ModelParams& p, std::string_view what)
{
    const double scale = std::max(std::abs(p.omega), std::abs(p.omega0));
    const double plus = p.omega + p.omega0;
    const double minus = p.omega - p.omega0;
    if (std::abs(plus) <= kResonanceEps * scale || std::abs(minus) <= kResonanceEps * scale)
        throw ResonanceError(std::string(what) + ": resonant denominator, omega = " + std::to_string(p.omega) +
                             ", omega0 = " + std::to_string(p.omega0) + " (omega +- omega0 = " +
                             std::to_string(plus) + ", " + std::to_string(minus) + ")");
}

OperatorMatrix build_full_jt(const ModelParams& p, const BasisPtr& basis)
{
    p.validate();
    const auto ops = SparseFockOperators::build(basis);
    const SparseMatrix coupling =
        (ops.a1 + ops.a2_dag) * ops.sigma_plus + (ops.a1_dag + ops.a2) * ops.sigma_minus;
    return ops.dense(free_part(ops, p) + p.kappa * coupling, hermitian_if(p.kappa_is_real()));
}

OperatorMatrix build_rwa(const ModelParams& p, const BasisPtr& basis)
{
    p.validate();
    const auto ops = SparseFockOperators::build(basis);
    return ops.dense(rwa_part(ops, p), hermitian_if(p.kappa_is_real()));
}

OperatorMatrix build_eq4_rhs(const ModelParams& p, const BasisPtr& basis)
{
    p.validate();
    require_off_resonance(p, "build_eq4_rhs");
    const auto ops = SparseFockOperators::build(basis);
    const Complex k2 = p.kappa * p.kappa;
    const double w = p.omega;
    const double w0 = p.omega0;

    const SparseMatrix pair = ops.a1_dag * ops.a2_dag + ops.a1 * ops.a2;
    // a1 a2^+ written lowering-first: raising first would step past a
    // TotalNumber edge and break hermiticity there.
    const SparseMatrix hop = ops.a1_dag * ops.a2 + ops.a2_dag * ops.a1;
    const SparseMatrix squeeze = ops.a2_dag * ops.a2_dag + ops.a2 * ops.a2 + 2.0 * ops.a2_dag * ops.a2;

    SparseMatrix h = rwa_part(ops, p);
    h += (k2 / (w + w0)) * pair * ops.sigma0;
    h += (k2 / (w - w0)) * hop * ops.sigma0;
    h += (w * k2 / (w * w - w0 * w0)) * squeeze * ops.sigma0;
    h += (k2 / (w - w0)) * ops.sigma_plus * ops.sigma_minus;
    h -= (k2 / (w + w0)) * ops.sigma_minus * ops.sigma_plus;
    return ops.dense(h, hermitian_if(p.kappa_is_real()));
}

OperatorMatrix build_rotated(const ModelParams& p, const BasisPtr& basis)
{
    p.validate();
    const auto ops = SparseFockOperators::build(basis);
    return ops.dense(jc_part(ops, p, p.kappa), hermitian_if(p.kappa_is_real()));
}

OperatorMatrix build_nonhermitian(const ModelParams& p, const BasisPtr& basis)
{
    p.validate();
    const auto ops = SparseFockOperators::build(basis);
    return ops.dense(jc_part(ops, p, Complex(0.0, p.gamma)), hermitian_if(p.gamma == 0.0));
}

OperatorMatrix lambda_operator(const BasisPtr& basis)
{
    const auto ops = SparseFockOperators::build(basis);
    return ops.dense(ops.a1_dag * ops.a1 - ops.a2_dag * ops.a2 + 0.5 * ops.sigma0, Hint::Hermitian);
}

HamiltonianBuilder builder_for(ModelKind kind)
{
    switch (kind) {
    case ModelKind::FullJT: return build_full_jt;
    case ModelKind::Rwa: return build_rwa;
    case ModelKind::Eq4: return build_eq4_rhs;
    case ModelKind::Rotated: return build_rotated;
    case ModelKind::NonHermitian: return build_nonhermitian;
    }
    throw std::invalid_argument("unknown model kind");
}

ModelKind parse_model_kind(std::string_view name)
{
    if (name == "full") return ModelKind::FullJT;
    if (name == "rwa") return ModelKind::Rwa;
    if (name == "second-order") return ModelKind::Eq4;
    if (name == "rotated") return ModelKind::Rotated;
    if (name == "nonhermitian") return ModelKind::NonHermitian;
    throw std::invalid_argument("unknown model '" + std::string(name) +
                                "' (expected full, rwa, second-order, rotated or nonhermitian)");
}

std::string_view to_string(ModelKind kind)
{
    switch (kind) {
    case ModelKind::FullJT: return "full";
    case ModelKind::Rwa: return "rwa";
    case ModelKind::Eq4: return "second-order";
    case ModelKind::Rotated: return "rotated";
    case ModelKind::NonHermitian: return "nonhermitian";
    }
    return "?";
}

}  // namespace jtspec
