#pragma once

#include "jtspec/operator_matrix.hpp"

namespace jtspec {

/// Matrix exponential by scaling and squaring with diagonal Pade
/// approximants of degree 3, 5, 7, 9 or 13, chosen from the 1-norm so that
/// the backward error stays at unit roundoff (Higham, SIAM J. Matrix Anal.
/// Appl. 26 (2005) 1179).
Matrix expm(const Matrix& a);

/// Exponential of an operator. An anti-Hermitian generator yields a result
/// tagged Unitary.
OperatorMatrix expm(const OperatorMatrix& generator);

}  // namespace jtspec
