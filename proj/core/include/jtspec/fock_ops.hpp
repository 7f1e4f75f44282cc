#pragma once

#include <vector>

#include "jtspec/operator_matrix.hpp"

namespace jtspec {

enum class Mode { One = 1, Two = 2 };

struct LadderPair {
    OperatorMatrix a;
    OperatorMatrix a_dag;
};

/// a|n> = sqrt(n)|n-1>. a_dag is the exact conjugate transpose of a, so
/// raising out of the truncated space gives zero.
LadderPair boson_ops(const BasisPtr& basis, Mode mode);

/// Number operator a^dagger a of one mode (diagonal).
OperatorMatrix number_op(const BasisPtr& basis, Mode mode);

struct PauliOps {
    OperatorMatrix plus;   // |Up><Down|
    OperatorMatrix minus;  // |Down><Up|
    OperatorMatrix sigma0; // diag(+1, -1)
};

/// 2x2 Pauli matrices embedded with the identity on both modes.
PauliOps pauli_ops(const BasisPtr& basis);

using SparseMatrix = Eigen::SparseMatrix<Complex>;

/// Every elementary operator of one basis in sparse form. Model builders
/// assemble products here and densify once at the end.
struct SparseFockOperators {
    BasisPtr basis;
    SparseMatrix id;
    SparseMatrix a1, a1_dag;
    SparseMatrix a2, a2_dag;
    SparseMatrix sigma_plus, sigma_minus, sigma0;

    static SparseFockOperators build(const BasisPtr& basis);

    [[nodiscard]] OperatorMatrix dense(const SparseMatrix& m, Hint hint = Hint::General) const;
};

/// States from which a_mode^dagger stays inside the truncated space.
/// On this set [a, a^dagger] acts as the identity.
std::vector<bool> raising_interior(const Basis& basis, Mode mode);

/// States at least `layers` Fock layers below the truncation edge: for
/// PerMode n_i <= n_max_i - layers on both modes, for TotalNumber
/// n1 + n2 <= N - layers.
std::vector<bool> bulk_mask(const Basis& basis, int layers);

/// Diagonal projector onto the masked states.
OperatorMatrix projector(const BasisPtr& basis, const std::vector<bool>& mask);

}  // namespace jtspec
