#include "jtspec/fock_ops.hpp"

#include <cmath>
#include <stdexcept>

namespace jtspec {

namespace {

using Triplets = std::vector<Eigen::Triplet<Complex>>;

int occupation(const BasisState& s, Mode mode)
{
    return mode == Mode::One ? s.n1 : s.n2;
}

BasisState shifted(BasisState s, Mode mode, int delta)
{
    (mode == Mode::One ? s.n1 : s.n2) += delta;
    return s;
}

SparseMatrix from_triplets(std::size_t dim, const Triplets& t)
{
    const auto n = static_cast<Eigen::Index>(dim);
    SparseMatrix m(n, n);
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

SparseMatrix sparse_lowering(const Basis& basis, Mode mode)
{
    Triplets t;
    for (std::size_t col = 0; col < basis.dim(); ++col) {
        const BasisState& s = basis.state(col);
        const int occ = occupation(s, mode);
        if (occ == 0)
            continue;
        if (const auto row = basis.index(shifted(s, mode, -1)))
            t.emplace_back(static_cast<int>(*row), static_cast<int>(col), std::sqrt(static_cast<double>(occ)));
    }
    return from_triplets(basis.dim(), t);
}

SparseMatrix sparse_sigma_plus(const Basis& basis)
{
    Triplets t;
    for (std::size_t col = 0; col < basis.dim(); ++col) {
        const BasisState& s = basis.state(col);
        if (s.spin == Spin::Down)
            t.emplace_back(static_cast<int>(*basis.index({Spin::Up, s.n1, s.n2})), static_cast<int>(col), 1.0);
    }
    return from_triplets(basis.dim(), t);
}

SparseMatrix sparse_sigma0(const Basis& basis)
{
    Triplets t;
    for (std::size_t k = 0; k < basis.dim(); ++k)
        t.emplace_back(static_cast<int>(k), static_cast<int>(k), basis.state(k).spin == Spin::Up ? 1.0 : -1.0);
    return from_triplets(basis.dim(), t);
}

}  // namespace

SparseFockOperators SparseFockOperators::build(const BasisPtr& basis)
{
    SparseFockOperators ops;
    ops.basis = basis;
    const auto n = static_cast<Eigen::Index>(basis->dim());
    ops.id = SparseMatrix(n, n);
    ops.id.setIdentity();
    ops.a1 = sparse_lowering(*basis, Mode::One);
    ops.a1_dag = ops.a1.adjoint();
    ops.a2 = sparse_lowering(*basis, Mode::Two);
    ops.a2_dag = ops.a2.adjoint();
    ops.sigma_plus = sparse_sigma_plus(*basis);
    ops.sigma_minus = ops.sigma_plus.adjoint();
    ops.sigma0 = sparse_sigma0(*basis);
    return ops;
}

OperatorMatrix SparseFockOperators::dense(const SparseMatrix& m, Hint hint) const
{
    return {basis, Matrix(m), hint};
}

LadderPair boson_ops(const BasisPtr& basis, Mode mode)
{
    Matrix a(sparse_lowering(*basis, mode));
    Matrix a_dag = a.adjoint();
    return {OperatorMatrix(basis, std::move(a)), OperatorMatrix(basis, std::move(a_dag))};
}

OperatorMatrix number_op(const BasisPtr& basis, Mode mode)
{
    const auto n = static_cast<Eigen::Index>(basis->dim());
    Matrix m = Matrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k)
        m(k, k) = static_cast<double>(occupation(basis->state(static_cast<std::size_t>(k)), mode));
    return {basis, std::move(m), Hint::Hermitian};
}

PauliOps pauli_ops(const BasisPtr& basis)
{
    Matrix plus(sparse_sigma_plus(*basis));
    Matrix minus = plus.adjoint();
    return {OperatorMatrix(basis, std::move(plus)), OperatorMatrix(basis, std::move(minus)),
            OperatorMatrix(basis, Matrix(sparse_sigma0(*basis)), Hint::Hermitian)};
}

std::vector<bool> raising_interior(const Basis& basis, Mode mode)
{
    std::vector<bool> mask(basis.dim());
    for (std::size_t k = 0; k < basis.dim(); ++k)
        mask[k] = basis.contains(shifted(basis.state(k), mode, +1));
    return mask;
}

std::vector<bool> bulk_mask(const Basis& basis, int layers)
{
    if (layers < 0)
        throw std::invalid_argument("bulk_mask: layers must be >= 0");
    const BasisSpec& spec = basis.spec();
    std::vector<bool> mask(basis.dim());
    for (std::size_t k = 0; k < basis.dim(); ++k) {
        const BasisState& s = basis.state(k);
        if (spec.truncation == Truncation::TotalNumber)
            mask[k] = s.n1 + s.n2 <= spec.total_max - layers;
        else
            mask[k] = s.n1 <= spec.n_max_1 - layers && s.n2 <= spec.n_max_2 - layers;
    }
    return mask;
}

OperatorMatrix projector(const BasisPtr& basis, const std::vector<bool>& mask)
{
    if (mask.size() != basis->dim())
        throw std::invalid_argument("projector: mask length does not match basis dimension");
    const auto n = static_cast<Eigen::Index>(basis->dim());
    Matrix m = Matrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k)
        m(k, k) = mask[static_cast<std::size_t>(k)] ? 1.0 : 0.0;
    return {basis, std::move(m), Hint::Hermitian};
}

}  // namespace jtspec
