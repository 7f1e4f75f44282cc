#include "jtspec/pseudoherm.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/LU>

#include "jtspec/fock_ops.hpp"
#include "jtspec/spectrum.hpp"

namespace jtspec {

namespace {

Matrix checked_inverse(const Matrix& m, const char* what)
{
    const Eigen::FullPivLU<Matrix> lu(m);
    if (!lu.isInvertible())
        throw std::invalid_argument(std::string(what) + ": operator is singular");
    return lu.inverse();
}

}  // namespace

AntilinearOp::AntilinearOp(OperatorMatrix matrix_part, bool conjugates)
    : matrix_(std::move(matrix_part)), conjugates_(conjugates)
{
}

Vector AntilinearOp::apply(const Vector& v) const
{
    if (v.size() != matrix_.dim())
        throw std::invalid_argument("AntilinearOp::apply: vector length does not match dimension");
    return conjugates_ ? Vector(matrix_.entries() * v.conjugate()) : Vector(matrix_.entries() * v);
}

OperatorMatrix AntilinearOp::transform(const OperatorMatrix& h) const
{
    require_same_basis(matrix_, h);
    const Matrix inv = checked_inverse(matrix_.entries(), "AntilinearOp::transform");
    const Matrix inner = conjugates_ ? Matrix(h.entries().conjugate()) : h.entries();
    return {h.basis_ptr(), matrix_.entries() * inner * inv, Hint::General};
}

AntilinearOp AntilinearOp::inverse() const
{
    Matrix inv = checked_inverse(matrix_.entries(), "AntilinearOp::inverse");
    if (conjugates_)
        inv = inv.conjugate().eval();
    return AntilinearOp({matrix_.basis_ptr(), std::move(inv)}, conjugates_);
}

AntilinearOp operator*(const OperatorMatrix& linear, const AntilinearOp& op)
{
    return AntilinearOp(linear * op.matrix_, op.conjugates_);
}

OperatorMatrix parity_op(const BasisPtr& basis)
{
    const auto n = static_cast<Eigen::Index>(basis->dim());
    Matrix p = Matrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const BasisState& s = basis->state(static_cast<std::size_t>(k));
        p(k, k) = (s.n1 + s.n2) % 2 == 0 ? 1.0 : -1.0;
    }
    return {basis, std::move(p), Hint::Hermitian};
}

AntilinearOp time_reversal_op(const BasisPtr& basis)
{
    // -i sigma_y = [[0, -1], [1, 0]] = sigma- - sigma+
    auto [plus, minus, z] = pauli_ops(basis);
    return AntilinearOp((minus - plus).with_hint(Hint::Unitary), true);
}

double check_pt(const OperatorMatrix& h)
{
    const AntilinearOp pt = parity_op(h.basis_ptr()) * time_reversal_op(h.basis_ptr());
    return (pt.transform(h) - h).entries().norm();
}

double check_pseudo_hermitian(const OperatorMatrix& h, const OperatorMatrix& eta)
{
    require_same_basis(h, eta);
    if (eta.hermiticity_defect() > 1e-12)
        throw std::invalid_argument("check_pseudo_hermitian: metric is not Hermitian");
    const Matrix inv = checked_inverse(eta.entries(), "check_pseudo_hermitian");
    return (eta.entries() * h.entries() * inv - h.entries().adjoint()).norm();
}

double check_combined_symmetry(const OperatorMatrix& h)
{
    const auto [plus, minus, sigma0] = pauli_ops(h.basis_ptr());
    return frobenius_norm(commutator(h, parity_op(h.basis_ptr()) * sigma0));
}

RealityReport reality_scan(const ModelParams& tmpl, const BasisPtr& basis, std::span<const double> gamma_grid,
                           int k, double tolerance)
{
    if (k < 1)
        throw std::invalid_argument("reality_scan: k must be >= 1");
    for (std::size_t i = 1; i < gamma_grid.size(); ++i)
        if (!(gamma_grid[i] > gamma_grid[i - 1]))
            throw std::invalid_argument("reality_scan: gamma grid must be strictly ascending");

    RealityReport report;
    report.k = k;
    report.tolerance = tolerance;
    for (const double gamma : gamma_grid) {
        ModelParams p = tmpl;
        p.gamma = gamma;
        const Spectrum s = diagonalize(build_nonhermitian(p, basis));
        const std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(k), s.size());
        double worst = 0.0;
        for (std::size_t i = 0; i < count; ++i)
            worst = std::max(worst, std::abs(s.eigenvalues[i].imag()));
        report.gamma_values.push_back(gamma);
        report.max_imag_lowk.push_back(worst);
        if (!report.detected_threshold && worst > tolerance)
            report.detected_threshold = gamma;
    }
    return report;
}

double lowest_block_reality_threshold(const ModelParams& p)
{
    return std::abs(p.omega - 2.0 * p.omega0) / std::sqrt(8.0);
}

}  // namespace jtspec
