#pragma once

#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "jtspec/models.hpp"
#include "jtspec/operator_matrix.hpp"

namespace jtspec {

/// Levels closer than this are reported as one level with multiplicity.
inline constexpr double kDegeneracyGap = 1e-6;

/// Largest accepted eigenpair residual ||Hv - lambda v||.
inline constexpr double kEigenpairTolerance = 1e-8;

struct CutoffPoint {
    int cutoff = 0;
    double ground_energy = 0.0;
};

/// Eigenvalues sorted by (real, imag), with optional unit-norm eigenvectors
/// stored column-wise in the same order.
struct Spectrum {
    std::vector<Complex> eigenvalues;
    std::optional<Matrix> eigenvectors;
    std::vector<double> residual_norms;  // filled when eigenvectors are present
    BasisSpec basis;
    bool hermitian = false;              // produced by the self-adjoint path
    bool converged = true;
    std::vector<CutoffPoint> cutoff_history;

    [[nodiscard]] std::size_t size() const { return eigenvalues.size(); }
    [[nodiscard]] double ground() const;
    [[nodiscard]] double max_imag() const;
};

struct Level {
    double energy = 0.0;
    int multiplicity = 0;
};

/// Groups real parts of the spectrum into levels; neighbours within `gap`
/// join the current level.
std::vector<Level> distinct_levels(const Spectrum& spectrum, double gap = kDegeneracyGap,
                                   std::size_t max_levels = std::numeric_limits<std::size_t>::max());

/// Smallest eigenvalue exceeding the ground value by more than `gap`.
double first_excited(const Spectrum& spectrum, double gap = kDegeneracyGap);

/// Full spectrum of h.
///
/// The self-adjoint solver is used when the hint is Hermitian and the
/// entries confirm it to 1e-12 (real arithmetic when all entries are real);
/// otherwise the general complex Schur path. Diagonal input is read off
/// directly. Throws ConvergenceError when the solver fails or an eigenpair
/// residual exceeds kEigenpairTolerance.
Spectrum diagonalize(const OperatorMatrix& h, bool want_vectors = false);

/// Diagonalizes builder(params, basis) over an ascending schedule until the
/// lowest `tracked_levels` distinct levels move by at most `tol` between
/// consecutive cutoffs. If the schedule runs out first, the last spectrum
/// is returned with converged = false and the partial history.
Spectrum converge_ground(const HamiltonianBuilder& builder, const ModelParams& params, double tol,
                         std::span<const BasisSpec> schedule, int tracked_levels = 1);

std::vector<BasisSpec> total_number_schedule(std::span<const int> cutoffs);

/// Default TotalNumber cutoffs for the weak-to-intermediate coupling table.
inline constexpr int kDefaultSchedule[] = {10, 20, 30, 40};

/// Distance between the eigenvalue multiset and its complex conjugate:
/// the largest gap in a greedy nearest-neighbour matching.
double conjugation_closure_distance(std::span<const Complex> eigenvalues);

}  // namespace jtspec
