#pragma once

#include <complex>
#include <memory>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "jtspec/basis.hpp"

namespace jtspec {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using BasisPtr = std::shared_ptr<const Basis>;

/// Shared, immutable basis handle.
BasisPtr make_basis(const BasisSpec& spec);

/// Advisory structure tag; checked only by validate_hint().
enum class Hint { Hermitian, AntiHermitian, Unitary, General };

const char* to_string(Hint hint);

/// Dense complex operator over a fixed basis.
///
/// The basis is shared; operands of binary operations must be built over
/// equal basis specs or a DimensionError is thrown.
class OperatorMatrix {
public:
    OperatorMatrix(BasisPtr basis, Matrix entries, Hint hint = Hint::General);

    static OperatorMatrix zero(BasisPtr basis);
    static OperatorMatrix identity(BasisPtr basis);

    [[nodiscard]] const Basis& basis() const { return *basis_; }
    [[nodiscard]] const BasisPtr& basis_ptr() const { return basis_; }
    [[nodiscard]] const Matrix& entries() const { return entries_; }
    [[nodiscard]] Eigen::Index dim() const { return entries_.rows(); }
    [[nodiscard]] Hint hint() const { return hint_; }
    [[nodiscard]] Complex operator()(Eigen::Index row, Eigen::Index col) const { return entries_(row, col); }

    [[nodiscard]] OperatorMatrix with_hint(Hint hint) const;
    [[nodiscard]] OperatorMatrix adjoint() const;

    /// max_ij |M - M^dagger|_ij
    [[nodiscard]] double hermiticity_defect() const;

    /// Checks the hint against the entries. General always validates.
    [[nodiscard]] bool validate_hint(double tol = 1e-12) const;

    /// Nonzero entries as (row, col, value) triplets, row-major order.
    [[nodiscard]] std::vector<Eigen::Triplet<Complex>> triplets(double drop_below = 0.0) const;
    [[nodiscard]] Eigen::SparseMatrix<Complex> sparse(double drop_below = 0.0) const;

    OperatorMatrix& operator+=(const OperatorMatrix& rhs);
    OperatorMatrix& operator-=(const OperatorMatrix& rhs);
    OperatorMatrix& operator*=(Complex scalar);

    friend OperatorMatrix operator+(OperatorMatrix lhs, const OperatorMatrix& rhs) { return lhs += rhs; }
    friend OperatorMatrix operator-(OperatorMatrix lhs, const OperatorMatrix& rhs) { return lhs -= rhs; }
    friend OperatorMatrix operator*(OperatorMatrix op, Complex scalar) { return op *= scalar; }
    friend OperatorMatrix operator*(Complex scalar, OperatorMatrix op) { return op *= scalar; }
    friend OperatorMatrix operator*(double scalar, OperatorMatrix op) { return op *= Complex(scalar, 0.0); }
    friend OperatorMatrix operator-(OperatorMatrix op) { return op *= Complex(-1.0, 0.0); }
    friend OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs);

private:
    BasisPtr basis_;
    Matrix entries_;
    Hint hint_;
};

void require_same_basis(const OperatorMatrix& a, const OperatorMatrix& b);

[[nodiscard]] OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

[[nodiscard]] double max_abs(const OperatorMatrix& m);
[[nodiscard]] double max_abs(const Matrix& m);
[[nodiscard]] double frobenius_norm(const OperatorMatrix& m);
[[nodiscard]] double spectral_norm(const Matrix& m);
[[nodiscard]] double spectral_norm(const OperatorMatrix& m);

/// Restricts m to the rows/columns whose basis index satisfies keep.
[[nodiscard]] Matrix restrict_to(const Matrix& m, const std::vector<bool>& keep);

}  // namespace jtspec
