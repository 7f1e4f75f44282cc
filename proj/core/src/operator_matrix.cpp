#include "jtspec/operator_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "jtspec/errors.hpp"

namespace jtspec {

BasisPtr make_basis(const BasisSpec& spec)
{
    return std::make_shared<const Basis>(spec);
}

const char* to_string(Hint hint)
{
    switch (hint) {
    case Hint::Hermitian: return "Hermitian";
    case Hint::AntiHermitian: return "AntiHermitian";
    case Hint::Unitary: return "Unitary";
    case Hint::General: return "General";
    }
    return "?";
}

OperatorMatrix::OperatorMatrix(BasisPtr basis, Matrix entries, Hint hint)
    : basis_(std::move(basis)), entries_(std::move(entries)), hint_(hint)
{
    if (!basis_)
        throw std::invalid_argument("OperatorMatrix requires a basis");
    const auto n = static_cast<Eigen::Index>(basis_->dim());
    if (entries_.rows() != n || entries_.cols() != n)
        throw DimensionError("matrix is " + std::to_string(entries_.rows()) + "x" + std::to_string(entries_.cols()) +
                             " but basis " + to_string(basis_->spec()) + " has dimension " + std::to_string(n));
}

OperatorMatrix OperatorMatrix::zero(BasisPtr basis)
{
    const auto n = static_cast<Eigen::Index>(basis->dim());
    return {std::move(basis), Matrix::Zero(n, n), Hint::Hermitian};
}

OperatorMatrix OperatorMatrix::identity(BasisPtr basis)
{
    const auto n = static_cast<Eigen::Index>(basis->dim());
    return {std::move(basis), Matrix::Identity(n, n), Hint::Hermitian};
}

OperatorMatrix OperatorMatrix::with_hint(Hint hint) const
{
    OperatorMatrix out = *this;
    out.hint_ = hint;
    return out;
}

OperatorMatrix OperatorMatrix::adjoint() const
{
    return {basis_, entries_.adjoint(), hint_};
}

double OperatorMatrix::hermiticity_defect() const
{
    return max_abs(Matrix(entries_ - entries_.adjoint()));
}

bool OperatorMatrix::validate_hint(double tol) const
{
    switch (hint_) {
    case Hint::Hermitian:
        return hermiticity_defect() <= tol;
    case Hint::AntiHermitian:
        return max_abs(Matrix(entries_ + entries_.adjoint())) <= tol;
    case Hint::Unitary:
        return max_abs(Matrix(entries_.adjoint() * entries_ - Matrix::Identity(dim(), dim()))) <= tol;
    case Hint::General:
        return true;
    }
    return false;
}

std::vector<Eigen::Triplet<Complex>> OperatorMatrix::triplets(double drop_below) const
{
    std::vector<Eigen::Triplet<Complex>> out;
    for (Eigen::Index i = 0; i < dim(); ++i)
        for (Eigen::Index j = 0; j < dim(); ++j)
            if (const Complex v = entries_(i, j); v != Complex{} && std::abs(v) > drop_below)
                out.emplace_back(static_cast<int>(i), static_cast<int>(j), v);
    return out;
}

Eigen::SparseMatrix<Complex> OperatorMatrix::sparse(double drop_below) const
{
    const auto t = triplets(drop_below);
    Eigen::SparseMatrix<Complex> out(dim(), dim());
    out.setFromTriplets(t.begin(), t.end());
    return out;
}

namespace {

Hint sum_hint(Hint a, Hint b)
{
    if (a == b && (a == Hint::Hermitian || a == Hint::AntiHermitian))
        return a;
    return Hint::General;
}

}  // namespace

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& rhs)
{
    require_same_basis(*this, rhs);
    entries_ += rhs.entries_;
    hint_ = sum_hint(hint_, rhs.hint_);
    return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& rhs)
{
    require_same_basis(*this, rhs);
    entries_ -= rhs.entries_;
    hint_ = sum_hint(hint_, rhs.hint_);
    return *this;
}

OperatorMatrix& OperatorMatrix::operator*=(Complex scalar)
{
    entries_ *= scalar;
    const bool real = scalar.imag() == 0.0;
    const bool imaginary = scalar.real() == 0.0;
    if (hint_ == Hint::Hermitian)
        hint_ = real ? Hint::Hermitian : imaginary ? Hint::AntiHermitian : Hint::General;
    else if (hint_ == Hint::AntiHermitian)
        hint_ = real ? Hint::AntiHermitian : imaginary ? Hint::Hermitian : Hint::General;
    else if (hint_ == Hint::Unitary && std::abs(std::abs(scalar) - 1.0) != 0.0)
        hint_ = Hint::General;
    return *this;
}

OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs)
{
    require_same_basis(lhs, rhs);
    const Hint h = (lhs.hint() == Hint::Unitary && rhs.hint() == Hint::Unitary) ? Hint::Unitary : Hint::General;
    return {lhs.basis_ptr(), lhs.entries() * rhs.entries(), h};
}

void require_same_basis(const OperatorMatrix& a, const OperatorMatrix& b)
{
    if (a.basis_ptr() != b.basis_ptr() && !(a.basis() == b.basis()))
        throw DimensionError("operands built over different bases: " + to_string(a.basis().spec()) + " vs " +
                             to_string(b.basis().spec()));
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b)
{
    require_same_basis(a, b);
    return {a.basis_ptr(), a.entries() * b.entries() - b.entries() * a.entries(), Hint::General};
}

double max_abs(const Matrix& m)
{
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs(const OperatorMatrix& m)
{
    return max_abs(m.entries());
}

double frobenius_norm(const OperatorMatrix& m)
{
    return m.entries().norm();
}

double spectral_norm(const Matrix& m)
{
    if (m.size() == 0)
        return 0.0;
    const Eigen::SelfAdjointEigenSolver<Matrix> solver(m.adjoint() * m, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

double spectral_norm(const OperatorMatrix& m)
{
    return spectral_norm(m.entries());
}

Matrix restrict_to(const Matrix& m, const std::vector<bool>& keep)
{
    if (static_cast<Eigen::Index>(keep.size()) != m.rows())
        throw DimensionError("mask length does not match matrix dimension");
    std::vector<Eigen::Index> idx;
    for (std::size_t i = 0; i < keep.size(); ++i)
        if (keep[i])
            idx.push_back(static_cast<Eigen::Index>(i));
    const auto n = static_cast<Eigen::Index>(idx.size());
    Matrix out(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            out(i, j) = m(idx[i], idx[j]);
    return out;
}

}  // namespace jtspec
