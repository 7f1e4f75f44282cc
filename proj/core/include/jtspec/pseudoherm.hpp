#pragma once

#include <optional>
#include <span>
#include <vector>

#include "jtspec/models.hpp"
#include "jtspec/operator_matrix.hpp"

namespace jtspec {

/// Operator of the form M K, with K complex conjugation in the Fock basis,
/// or plain M when `conjugates` is false. Kept separate from
/// OperatorMatrix so that conjugating by it also conjugates the entries.
class AntilinearOp {
public:
    explicit AntilinearOp(OperatorMatrix matrix_part, bool conjugates = true);

    [[nodiscard]] const OperatorMatrix& matrix_part() const { return matrix_; }
    [[nodiscard]] bool conjugates() const { return conjugates_; }

    /// M conj(v), or M v for a linear operator.
    [[nodiscard]] Vector apply(const Vector& v) const;

    /// A h A^-1, i.e. M conj(h) M^-1 when antilinear.
    [[nodiscard]] OperatorMatrix transform(const OperatorMatrix& h) const;

    /// (M K)^-1 = conj(M^-1) K.
    [[nodiscard]] AntilinearOp inverse() const;

    /// L (M K) = (L M) K.
    friend AntilinearOp operator*(const OperatorMatrix& linear, const AntilinearOp& op);

private:
    OperatorMatrix matrix_;
    bool conjugates_;
};

/// Diagonal (-1)^(n1+n2), identity on spin: flips the sign of every boson
/// ladder operator.
OperatorMatrix parity_op(const BasisPtr& basis);

/// -i sigma_y (x) 1 followed by complex conjugation.
AntilinearOp time_reversal_op(const BasisPtr& basis);

/// || (PT) h (PT)^-1 - h ||_F with P = parity_op and T = time_reversal_op.
double check_pt(const OperatorMatrix& h);

/// || eta h eta^-1 - h^dagger ||_F. eta must be Hermitian and invertible,
/// otherwise std::invalid_argument.
double check_pseudo_hermitian(const OperatorMatrix& h, const OperatorMatrix& eta);

/// || [h, P sigma0] ||_F.
double check_combined_symmetry(const OperatorMatrix& h);

/// |Im lambda| above this counts as broken reality.
inline constexpr double kRealityTolerance = 1e-8;
inline constexpr int kDefaultLowLevels = 4;

struct RealityReport {
    std::vector<double> gamma_values;
    std::vector<double> max_imag_lowk;  // over the k lowest-by-real-part eigenvalues
    int k = kDefaultLowLevels;
    double tolerance = kRealityTolerance;
    std::optional<double> detected_threshold;  // first gamma with max_imag_lowk > tolerance
};

/// Diagonalizes the imaginary-coupling Hamiltonian at every gamma of an
/// ascending grid (params_template.gamma is ignored).
RealityReport reality_scan(const ModelParams& params_template, const BasisPtr& basis,
                           std::span<const double> gamma_grid, int k = kDefaultLowLevels,
                           double tolerance = kRealityTolerance);

/// gamma at which the lowest coupled block {|Up,0,n2>, |Down,1,n2>} of the
/// imaginary-coupling Hamiltonian turns complex: |w - 2 w0| / sqrt(8).
double lowest_block_reality_threshold(const ModelParams& params);

}  // namespace jtspec
