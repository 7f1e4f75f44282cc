#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

#include "jtspec/errors.hpp"
#include "jtspec/expm.hpp"
#include "jtspec/fock_ops.hpp"
#include "jtspec/models.hpp"
#include "jtspec/transforms.hpp"
#include "test_helpers.hpp"

using namespace jtspec;
using jtspec::testing::max_entry;
using jtspec::testing::random_matrix;

namespace {

ModelParams params(double omega, double omega0, double kappa)
{
    ModelParams p;
    p.omega = omega;
    p.omega0 = omega0;
    p.kappa = kappa;
    return p;
}

// exp(A) for anti-Hermitian A through the eigendecomposition of the
// Hermitian matrix iA.
Matrix expm_by_eigen(const Matrix& a)
{
    const Matrix h = Complex(0.0, 1.0) * a;
    const Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    const Eigen::VectorXd lambda = es.eigenvalues();
    Vector phases(lambda.size());
    for (Eigen::Index i = 0; i < lambda.size(); ++i)
        phases(i) = std::exp(Complex(0.0, -lambda(i)));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

TEST(Expm, ZeroGivesIdentity)
{
    EXPECT_EQ(max_entry(Matrix(expm(Matrix::Zero(5, 5)) - Matrix::Identity(5, 5))), 0.0);
}

TEST(Expm, Diagonal)
{
    Vector d(4);
    d << Complex(0.5, 0.0), Complex(-3.0, 1.0), Complex(0.0, 2.5), Complex(7.0, -0.3);
    const Matrix e = expm(Matrix(d.asDiagonal()));
    for (Eigen::Index i = 0; i < 4; ++i)
        EXPECT_LE(std::abs(e(i, i) - std::exp(d(i))), 1e-13 * std::abs(std::exp(d(i))));
    EXPECT_LE(max_entry(Matrix(e - Matrix(e.diagonal().asDiagonal()))), 1e-14);
}

TEST(Expm, NilpotentShiftIsTruncatedSeries)
{
    const int n = 5;
    Matrix shift = Matrix::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i)
        shift(i, i + 1) = 1.0;
    const Matrix e = expm(shift);
    double factorial = 1.0;
    for (int k = 0; k < n; ++k) {
        if (k > 0)
            factorial *= k;
        for (int i = 0; i + k < n; ++i)
            EXPECT_NEAR(std::abs(e(i, i + k) - 1.0 / factorial), 0.0, 1e-15);
    }
}

TEST(Expm, LargeRotationAngle)
{
    for (const double theta : {0.3, 12.0, 250.0}) {
        Matrix a(2, 2);
        a << 0.0, -theta, theta, 0.0;
        const Matrix e = expm(a);
        EXPECT_NEAR(e(0, 0).real(), std::cos(theta), 1e-12 * std::max(1.0, theta));
        EXPECT_NEAR(e(1, 0).real(), std::sin(theta), 1e-12 * std::max(1.0, theta));
        EXPECT_NEAR(e(0, 1).real(), -std::sin(theta), 1e-12 * std::max(1.0, theta));
    }
}

TEST(Expm, AntiHermitianMatchesEigendecomposition)
{
    std::mt19937_64 rng(20240611);
    for (const double scale : {1e-3, 0.5, 4.0, 40.0}) {
        const Matrix r = random_matrix(rng, 12);
        const Matrix a = scale * (r - r.adjoint()) / 2.0;
        const Matrix e = expm(a);
        EXPECT_LE(max_entry(Matrix(e - expm_by_eigen(a))), 1e-12 * std::max(1.0, scale)) << scale;
        EXPECT_LE(max_entry(Matrix(e * e.adjoint() - Matrix::Identity(12, 12))), 1e-12 * std::max(1.0, scale));
    }
}

TEST(Expm, InverseIsExpOfNegative)
{
    std::mt19937_64 rng(7);
    const Matrix a = 0.8 * random_matrix(rng, 8);
    EXPECT_LE(max_entry(Matrix(expm(a) * expm(Matrix(-a)) - Matrix::Identity(8, 8))), 1e-12);
}

TEST(Expm, OperatorHintBecomesUnitary)
{
    const auto basis = make_basis(BasisSpec::per_mode(2, 2));
    const auto t = build_T(params(1.0, 0.2, 0.05), basis);
    const auto u = expm(t);
    EXPECT_EQ(u.hint(), Hint::Unitary);
    EXPECT_TRUE(u.validate_hint());
}

TEST(Generator, MatchesHandBuiltElements)
{
    const auto basis = make_basis(BasisSpec::per_mode(1, 1));
    const double w = 1.0, w0 = 0.3, k = 0.07;
    const double cp = k / (w + w0), cm = k / (w - w0);
    const auto t = build_T(params(w, w0, k), basis);

    Matrix oracle = Matrix::Zero(t.dim(), t.dim());
    for (const auto& s : basis->states()) {
        const auto col = static_cast<Eigen::Index>(*basis->index(s));
        auto add = [&](Spin spin, int n2, double v) {
            if (const auto row = basis->index({spin, s.n1, n2}))
                oracle(static_cast<Eigen::Index>(*row), col) += v;
        };
        if (s.spin == Spin::Down) {
            add(Spin::Up, s.n2 + 1, cp * std::sqrt(s.n2 + 1.0));   // sigma+ a2^+
            add(Spin::Up, s.n2 - 1, -cm * std::sqrt(1.0 * s.n2));  // -sigma+ a2
        } else {
            add(Spin::Down, s.n2 - 1, -cp * std::sqrt(1.0 * s.n2));  // -sigma- a2
            add(Spin::Down, s.n2 + 1, cm * std::sqrt(s.n2 + 1.0));   // sigma- a2^+
        }
    }
    EXPECT_LE(max_entry(Matrix(t.entries() - oracle)), 1e-16);
}

TEST(Generator, DegenerateFormAtZeroSplitting)
{
    // At w0 = 0 the generator collapses to (kappa/w)(sigma+ + sigma-)(a2^+ - a2).
    const auto basis = make_basis(BasisSpec::per_mode(3, 3));
    const double w = 1.4, k = 0.1;
    const auto t = build_T(params(w, 0.0, k), basis);
    const auto [a2, a2_dag] = boson_ops(basis, Mode::Two);
    const auto pauli = pauli_ops(basis);
    const auto oracle = (k / w) * ((pauli.plus + pauli.minus) * (a2_dag - a2));
    EXPECT_LE(max_entry(t - oracle), 1e-16);
}

TEST(Generator, AntiHermitian)
{
    const auto t = build_T(params(1.0, -0.35, 0.08), make_basis(BasisSpec::per_mode(4, 4)));
    EXPECT_EQ(t.hint(), Hint::AntiHermitian);
    EXPECT_LE(max_entry(t + t.adjoint()), 1e-16);
}

TEST(Generator, RejectsResonance)
{
    const auto basis = make_basis(BasisSpec::per_mode(2, 2));
    EXPECT_THROW(build_T(params(1.0, 1.0, 0.1), basis), ResonanceError);
    EXPECT_THROW(build_T(params(1.0, -1.0, 0.1), basis), ResonanceError);
}

TEST(BosonRotation, UnitaryInTotalNumberBasis)
{
    const auto basis = make_basis(BasisSpec::total_number(7));
    const auto u = build_U(basis);
    EXPECT_LE(max_entry(Matrix(u.entries() * u.entries().adjoint() - Matrix::Identity(u.dim(), u.dim()))), 1e-13);
}

TEST(BosonRotation, MixesModes)
{
    const auto basis = make_basis(BasisSpec::total_number(7));
    const auto u = build_U(basis);
    const auto a1 = boson_ops(basis, Mode::One).a;
    const auto a2 = boson_ops(basis, Mode::Two).a;
    const auto rotated = u * (a1 + a2) * u.adjoint();
    EXPECT_LE(max_entry(rotated - std::sqrt(2.0) * a1), 1e-12);
    const auto other = u * (a2 - a1) * u.adjoint();
    EXPECT_LE(max_entry(other - std::sqrt(2.0) * a2), 1e-12);
}

TEST(BosonRotation, TakesRotatingWaveToRotatedForm)
{
    const auto basis = make_basis(BasisSpec::total_number(8));
    const auto u = build_U(basis);
    for (const double k : {0.05, 0.4}) {
        const auto p = params(1.0, 0.2, k);
        EXPECT_LE(max_entry(u * build_rwa(p, basis) * u.adjoint() - build_rotated(p, basis)), 1e-12) << k;
    }
}

TEST(Conjugate, ZeroGeneratorIsIdentityMap)
{
    const auto basis = make_basis(BasisSpec::per_mode(3, 3));
    const auto h = build_full_jt(params(1.0, 0.1, 0.3), basis);
    EXPECT_EQ(max_entry(conjugate(OperatorMatrix::zero(basis), h) - h), 0.0);
}

TEST(Residual, VanishesWithoutCoupling)
{
    const auto basis = make_basis(BasisSpec::per_mode(6, 6));
    EXPECT_EQ(transform_residual(params(1.0, 0.2, 0.0), basis), 0.0);
}

TEST(Residual, SpectralBelowFrobenius)
{
    const auto basis = make_basis(BasisSpec::per_mode(6, 6));
    const auto p = params(1.0, 0.2, 0.05);
    const double f = transform_residual(p, basis, NormKind::Frobenius);
    const double s = transform_residual(p, basis, NormKind::Spectral);
    EXPECT_GT(s, 0.0);
    EXPECT_LE(s, f * (1.0 + 1e-12));
}

TEST(Residual, ScalesLinearlyWithThisGenerator)
{
    // The generator as written leaves a first-order remainder, so the
    // residual grows like kappa rather than kappa^3.
    const auto basis = make_basis(BasisSpec::per_mode(8, 8));
    const std::vector<double> grid{0.01, 0.02, 0.04, 0.08};
    const auto report = residual_study(params(1.0, 0.2, 0.0), basis, grid);
    ASSERT_EQ(report.residual_norms.size(), grid.size());
    EXPECT_NEAR(report.fitted_slope, 1.0, 0.1);
    EXPECT_EQ(report.edge_layers, kResidualEdgeLayers);
    for (std::size_t i = 1; i < grid.size(); ++i)
        EXPECT_GT(report.residual_norms[i], report.residual_norms[i - 1]);
}

TEST(Residual, StudyValidatesGrid)
{
    const auto basis = make_basis(BasisSpec::per_mode(4, 4));
    const auto p = params(1.0, 0.2, 0.0);
    const std::vector<double> empty;
    const std::vector<double> descending{0.02, 0.01};
    const std::vector<double> nonpositive{0.0, 0.01};
    const std::vector<double> too_strong{0.01, 0.09};  // 0.1 * min|w +- w0| = 0.08
    EXPECT_THROW(residual_study(p, basis, empty), std::invalid_argument);
    EXPECT_THROW(residual_study(p, basis, descending), std::invalid_argument);
    EXPECT_THROW(residual_study(p, basis, nonpositive), std::invalid_argument);
    EXPECT_THROW(residual_study(p, basis, too_strong), std::invalid_argument);
}

TEST(LogLogSlope, ExactPowerLaw)
{
    const std::vector<double> x{0.01, 0.02, 0.05, 0.1};
    std::vector<double> y;
    for (const double v : x)
        y.push_back(4.2 * std::pow(v, 3.0));
    EXPECT_NEAR(loglog_slope(x, y), 3.0, 1e-12);
    const std::vector<double> one{1.0};
    EXPECT_THROW(loglog_slope(one, one), std::invalid_argument);
}
