#include "jtspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "jtspec/errors.hpp"

namespace jtspec {

double Spectrum::ground() const
{
    if (eigenvalues.empty())
        throw std::logic_error("empty spectrum");
    return eigenvalues.front().real();
}

double Spectrum::max_imag() const
{
    double out = 0.0;
    for (const Complex& z : eigenvalues)
        out = std::max(out, std::abs(z.imag()));
    return out;
}

std::vector<Level> distinct_levels(const Spectrum& spectrum, double gap, std::size_t max_levels)
{
    std::vector<double> re;
    re.reserve(spectrum.size());
    for (const Complex& z : spectrum.eigenvalues)
        re.push_back(z.real());
    std::sort(re.begin(), re.end());

    std::vector<Level> levels;
    for (const double e : re) {
        if (!levels.empty() && e - levels.back().energy <= gap) {
            ++levels.back().multiplicity;
            continue;
        }
        if (levels.size() == max_levels)
            break;
        levels.push_back({e, 1});
    }
    return levels;
}

double first_excited(const Spectrum& spectrum, double gap)
{
    const double e0 = spectrum.ground();
    for (const Complex& z : spectrum.eigenvalues)
        if (z.real() > e0 + gap)
            return z.real();
    throw std::runtime_error("spectrum has no level above the ground state");
}

namespace {

bool is_diagonal(const Matrix& m)
{
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (i != j && m(i, j) != Complex{})
                return false;
    return true;
}

bool less_re_im(const Complex& a, const Complex& b)
{
    if (a.real() != b.real())
        return a.real() < b.real();
    return a.imag() < b.imag();
}

void sort_in_place(Spectrum& s)
{
    std::vector<std::size_t> order(s.eigenvalues.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return less_re_im(s.eigenvalues[a], s.eigenvalues[b]); });

    std::vector<Complex> values(order.size());
    for (std::size_t k = 0; k < order.size(); ++k)
        values[k] = s.eigenvalues[order[k]];
    s.eigenvalues = std::move(values);

    if (s.eigenvectors) {
        Matrix sorted(s.eigenvectors->rows(), s.eigenvectors->cols());
        for (std::size_t k = 0; k < order.size(); ++k)
            sorted.col(static_cast<Eigen::Index>(k)) = s.eigenvectors->col(static_cast<Eigen::Index>(order[k]));
        s.eigenvectors = std::move(sorted);
    }
}

void fill_residuals(Spectrum& s, const Matrix& h)
{
    const Matrix& v = *s.eigenvectors;
    const Matrix hv = h * v;
    s.residual_norms.resize(s.eigenvalues.size());
    for (Eigen::Index k = 0; k < v.cols(); ++k) {
        const double r = (hv.col(k) - s.eigenvalues[static_cast<std::size_t>(k)] * v.col(k)).norm();
        s.residual_norms[static_cast<std::size_t>(k)] = r;
        if (!(r <= kEigenpairTolerance))
            throw ConvergenceError("eigenpair " + std::to_string(k) + " has residual " + std::to_string(r));
    }
}

bool all_real(const Matrix& m)
{
    return m.imag().cwiseAbs().maxCoeff() == 0.0;
}

}  // namespace

Spectrum diagonalize(const OperatorMatrix& h, bool want_vectors)
{
    Spectrum s;
    s.basis = h.basis().spec();
    const Matrix& m = h.entries();
    const Eigen::Index n = m.rows();
    s.eigenvalues.reserve(static_cast<std::size_t>(n));

    if (is_diagonal(m)) {
        for (Eigen::Index k = 0; k < n; ++k)
            s.eigenvalues.push_back(m(k, k));
        s.hermitian = h.hermiticity_defect() == 0.0;
        if (want_vectors)
            s.eigenvectors = Matrix::Identity(n, n);
    } else if (h.hint() == Hint::Hermitian && h.hermiticity_defect() <= 1e-12) {
        s.hermitian = true;
        const auto options = want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly;
        if (all_real(m)) {
            const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.real(), options);
            if (solver.info() != Eigen::Success)
                throw ConvergenceError("self-adjoint eigensolver failed");
            for (Eigen::Index k = 0; k < n; ++k)
                s.eigenvalues.emplace_back(solver.eigenvalues()(k), 0.0);
            if (want_vectors)
                s.eigenvectors = solver.eigenvectors().cast<Complex>();
        } else {
            const Eigen::SelfAdjointEigenSolver<Matrix> solver(m, options);
            if (solver.info() != Eigen::Success)
                throw ConvergenceError("self-adjoint eigensolver failed");
            for (Eigen::Index k = 0; k < n; ++k)
                s.eigenvalues.emplace_back(solver.eigenvalues()(k), 0.0);
            if (want_vectors)
                s.eigenvectors = solver.eigenvectors();
        }
    } else {
        const Eigen::ComplexEigenSolver<Matrix> solver(m, want_vectors);
        if (solver.info() != Eigen::Success)
            throw ConvergenceError("complex eigensolver failed to converge");
        for (Eigen::Index k = 0; k < n; ++k)
            s.eigenvalues.push_back(solver.eigenvalues()(k));
        if (want_vectors)
            s.eigenvectors = solver.eigenvectors();
    }

    sort_in_place(s);
    if (s.eigenvectors)
        fill_residuals(s, m);
    return s;
}

Spectrum converge_ground(const HamiltonianBuilder& builder, const ModelParams& params, double tol,
                         std::span<const BasisSpec> schedule, int tracked_levels)
{
    if (schedule.empty())
        throw std::invalid_argument("converge_ground: empty cutoff schedule");
    if (!(tol > 0.0))
        throw std::invalid_argument("converge_ground: tolerance must be > 0");
    if (tracked_levels < 1)
        throw std::invalid_argument("converge_ground: tracked_levels must be >= 1");

    std::vector<BasisPtr> bases;
    for (const BasisSpec& spec : schedule) {
        bases.push_back(make_basis(spec));
        if (bases.size() > 1 && !(bases.back()->dim() > bases[bases.size() - 2]->dim()))
            throw std::invalid_argument("converge_ground: cutoff schedule must be strictly ascending");
    }

    const auto n_levels = static_cast<std::size_t>(tracked_levels);
    std::vector<CutoffPoint> history;
    std::vector<Level> previous;
    Spectrum current;
    for (const BasisPtr& basis : bases) {
        current = diagonalize(builder(params, basis));
        history.push_back({basis->spec().cutoff(), current.ground()});
        std::vector<Level> levels = distinct_levels(current, kDegeneracyGap, n_levels);

        bool settled = !previous.empty() && levels.size() == previous.size();
        for (std::size_t k = 0; settled && k < levels.size(); ++k)
            settled = std::abs(levels[k].energy - previous[k].energy) <= tol;
        previous = std::move(levels);

        if (settled) {
            current.converged = true;
            current.cutoff_history = std::move(history);
            return current;
        }
    }
    current.converged = false;
    current.cutoff_history = std::move(history);
    return current;
}

std::vector<BasisSpec> total_number_schedule(std::span<const int> cutoffs)
{
    std::vector<BasisSpec> out;
    out.reserve(cutoffs.size());
    for (const int n : cutoffs)
        out.push_back(BasisSpec::total_number(n));
    return out;
}

double conjugation_closure_distance(std::span<const Complex> eigenvalues)
{
    const std::size_t n = eigenvalues.size();
    std::vector<bool> used(n, false);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Complex target = std::conj(eigenvalues[i]);
        std::size_t best = n;
        double best_dist = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j])
                continue;
            const double d = std::abs(eigenvalues[j] - target);
            if (best == n || d < best_dist) {
                best = j;
                best_dist = d;
            }
        }
        used[best] = true;
        worst = std::max(worst, best_dist);
    }
    return worst;
}

}  // namespace jtspec
