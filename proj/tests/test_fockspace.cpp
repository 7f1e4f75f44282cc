#include <gtest/gtest.h>

#include <random>
#include <set>

#include "jtspec/basis.hpp"
#include "jtspec/fock_ops.hpp"
#include "test_helpers.hpp"

using namespace jtspec;
using jtspec::testing::max_entry;

TEST(Basis, PerModeDimension)
{
    EXPECT_EQ(Basis(BasisSpec::per_mode(1, 1)).dim(), 8u);
    EXPECT_EQ(Basis(BasisSpec::per_mode(3, 5)).dim(), 2u * 4u * 6u);
}

TEST(Basis, TotalNumberDimension)
{
    EXPECT_EQ(Basis(BasisSpec::total_number(2)).dim(), 12u);
    for (int n = 1; n <= 12; ++n)
        EXPECT_EQ(Basis(BasisSpec::total_number(n)).dim(), static_cast<std::size_t>((n + 1) * (n + 2)));
}

TEST(Basis, RejectsNonPositiveCutoffs)
{
    EXPECT_THROW(Basis(BasisSpec::per_mode(0, 2)), std::invalid_argument);
    EXPECT_THROW(Basis(BasisSpec::per_mode(2, -1)), std::invalid_argument);
    EXPECT_THROW(Basis(BasisSpec::total_number(0)), std::invalid_argument);
}

TEST(Basis, IndexDecodeRoundTrip)
{
    for (const auto spec : {BasisSpec::per_mode(3, 2), BasisSpec::total_number(5)}) {
        const Basis b(spec);
        std::set<std::size_t> seen;
        for (std::size_t k = 0; k < b.dim(); ++k) {
            const auto idx = b.index(b.state(k));
            ASSERT_TRUE(idx.has_value());
            EXPECT_EQ(*idx, k);
            seen.insert(k);
        }
        EXPECT_EQ(seen.size(), b.dim());
    }
}

TEST(Basis, OrderingIsSpinMajorThenN1ThenN2)
{
    const Basis b(BasisSpec::per_mode(1, 1));
    const std::vector<BasisState> expected = {
        {Spin::Up, 0, 0},   {Spin::Up, 0, 1},   {Spin::Up, 1, 0},   {Spin::Up, 1, 1},
        {Spin::Down, 0, 0}, {Spin::Down, 0, 1}, {Spin::Down, 1, 0}, {Spin::Down, 1, 1},
    };
    EXPECT_EQ(b.states(), expected);
}

TEST(Basis, OutsideStatesHaveNoIndex)
{
    const Basis b(BasisSpec::total_number(3));
    EXPECT_FALSE(b.contains({Spin::Up, 2, 2}));
    EXPECT_FALSE(b.contains({Spin::Down, -1, 0}));
    EXPECT_TRUE(b.contains({Spin::Down, 3, 0}));
}

TEST(BosonOps, LoweringMatrixElement)
{
    const auto basis = make_basis(BasisSpec::per_mode(3, 3));
    const auto [a1, a1_dag] = boson_ops(basis, Mode::One);
    const auto i0 = *basis->index({Spin::Up, 0, 0});
    const auto i1 = *basis->index({Spin::Up, 1, 0});
    EXPECT_EQ(a1(static_cast<Eigen::Index>(i0), static_cast<Eigen::Index>(i1)), Complex(1.0));
    const auto i3 = *basis->index({Spin::Down, 3, 2});
    const auto i2 = *basis->index({Spin::Down, 2, 2});
    EXPECT_DOUBLE_EQ(a1(static_cast<Eigen::Index>(i2), static_cast<Eigen::Index>(i3)).real(), std::sqrt(3.0));
    EXPECT_DOUBLE_EQ(a1_dag(static_cast<Eigen::Index>(i3), static_cast<Eigen::Index>(i2)).real(), std::sqrt(3.0));
}

TEST(BosonOps, AdjointIsBitwiseConjugateTranspose)
{
    for (const auto spec : {BasisSpec::per_mode(4, 2), BasisSpec::total_number(6)}) {
        const auto basis = make_basis(spec);
        for (const Mode m : {Mode::One, Mode::Two}) {
            const auto [a, a_dag] = boson_ops(basis, m);
            EXPECT_TRUE(a_dag.entries() == a.entries().adjoint()) << to_string(spec);
        }
    }
}

TEST(BosonOps, TruncatedInteriorCommutator)
{
    for (const auto spec : {BasisSpec::per_mode(5, 3), BasisSpec::total_number(6)}) {
        const auto basis = make_basis(spec);
        for (const Mode m : {Mode::One, Mode::Two}) {
            const auto [a, a_dag] = boson_ops(basis, m);
            const OperatorMatrix pi = projector(basis, raising_interior(*basis, m));
            const OperatorMatrix defect = pi * (commutator(a, a_dag) - OperatorMatrix::identity(basis)) * pi;
            EXPECT_LE(max_entry(defect), 1e-14) << to_string(spec);
        }
    }
}

TEST(BosonOps, InteriorIsBelowTheCutoff)
{
    const Basis b(BasisSpec::per_mode(3, 2));
    const auto mask = raising_interior(b, Mode::One);
    for (std::size_t k = 0; k < b.dim(); ++k)
        EXPECT_EQ(mask[k], b.state(k).n1 <= 2);
}

TEST(BosonOps, DistinctModesCommuteExactly)
{
    const auto basis = make_basis(BasisSpec::per_mode(3, 4));
    const auto [a1, a1_dag] = boson_ops(basis, Mode::One);
    const auto [a2, a2_dag] = boson_ops(basis, Mode::Two);
    EXPECT_EQ(max_entry(commutator(a1, a2_dag)), 0.0);
    EXPECT_EQ(max_entry(commutator(a1, a2)), 0.0);
}

TEST(BosonOps, DistinctModesCommuteBelowTotalEdge)
{
    // a2^+ leaves a TotalNumber basis from the top layer, a1 a2^+ does not
    // pass through it, so the commutator survives only on that layer.
    const auto basis = make_basis(BasisSpec::total_number(5));
    const auto [a1, a1_dag] = boson_ops(basis, Mode::One);
    const auto [a2, a2_dag] = boson_ops(basis, Mode::Two);
    const auto interior = raising_interior(*basis, Mode::Two);
    EXPECT_EQ(max_entry(restrict_to(commutator(a1, a2_dag).entries(), interior)), 0.0);
    EXPECT_EQ(max_entry(commutator(a1, a2)), 0.0);
    EXPECT_GT(max_entry(commutator(a1, a2_dag)), 0.5);
}

TEST(BosonOps, ModesCommuteWithPauli)
{
    const auto basis = make_basis(BasisSpec::total_number(5));
    const auto [a1, a1_dag] = boson_ops(basis, Mode::One);
    const auto [a2, a2_dag] = boson_ops(basis, Mode::Two);
    const auto [sp, sm, s0] = pauli_ops(basis);
    for (const auto* boson : {&a1, &a1_dag, &a2, &a2_dag})
        for (const auto* spin : {&sp, &sm, &s0})
            EXPECT_LE(max_entry(commutator(*boson, *spin)), 1e-14);
}

TEST(PauliOps, Sigma0ConjugationFlipsLadder)
{
    const auto basis = make_basis(BasisSpec::per_mode(2, 2));
    const auto [sp, sm, s0] = pauli_ops(basis);
    // sigma0 is its own inverse
    EXPECT_EQ(max_entry(s0 * s0 - OperatorMatrix::identity(basis)), 0.0);
    EXPECT_EQ(max_entry(s0 * sp * s0 + sp), 0.0);
    EXPECT_EQ(max_entry(s0 * sm * s0 + sm), 0.0);
}

TEST(PauliOps, AnticommutatorIsIdentity)
{
    const auto basis = make_basis(BasisSpec::total_number(3));
    const auto [sp, sm, s0] = pauli_ops(basis);
    EXPECT_EQ(max_entry(sp * sm + sm * sp - OperatorMatrix::identity(basis)), 0.0);
    EXPECT_TRUE(sm.entries() == sp.entries().adjoint());
}

TEST(PauliOps, Sigma0SpectrumSplitsEvenly)
{
    const auto basis = make_basis(BasisSpec::per_mode(2, 3));
    const auto s0 = pauli_ops(basis).sigma0;
    int up = 0, down = 0;
    for (Eigen::Index k = 0; k < s0.dim(); ++k) {
        const double d = s0(k, k).real();
        up += d == 1.0;
        down += d == -1.0;
    }
    EXPECT_EQ(up, s0.dim() / 2);
    EXPECT_EQ(down, s0.dim() / 2);
}

TEST(OperatorMatrix, SparseViewMatchesDense)
{
    const auto basis = make_basis(BasisSpec::total_number(4));
    const auto [a2, a2_dag] = boson_ops(basis, Mode::Two);
    const OperatorMatrix m = a2_dag * a2_dag + pauli_ops(basis).sigma0;
    const auto t = m.triplets();
    std::size_t nonzero = 0;
    for (Eigen::Index i = 0; i < m.dim(); ++i)
        for (Eigen::Index j = 0; j < m.dim(); ++j)
            nonzero += m(i, j) != Complex{};
    EXPECT_EQ(t.size(), nonzero);
    for (const auto& e : t)
        EXPECT_EQ(e.value(), m(e.row(), e.col()));
    EXPECT_EQ(max_entry(Matrix(Matrix(m.sparse()) - m.entries())), 0.0);
}

TEST(OperatorMatrix, MismatchedBasesAreRejected)
{
    const auto a = OperatorMatrix::identity(make_basis(BasisSpec::per_mode(2, 2)));
    const auto b = OperatorMatrix::identity(make_basis(BasisSpec::per_mode(2, 3)));
    EXPECT_THROW((void)(a + b), std::invalid_argument);
    EXPECT_THROW((void)commutator(a, b), std::invalid_argument);
    EXPECT_THROW(OperatorMatrix(a.basis_ptr(), Matrix::Zero(3, 3)), std::invalid_argument);
}

TEST(OperatorMatrix, HintValidation)
{
    const auto basis = make_basis(BasisSpec::per_mode(2, 2));
    const auto [a1, a1_dag] = boson_ops(basis, Mode::One);
    EXPECT_TRUE((a1 + a1_dag).with_hint(Hint::Hermitian).validate_hint());
    EXPECT_FALSE(a1.with_hint(Hint::Hermitian).validate_hint());
    EXPECT_TRUE((a1 - a1_dag).with_hint(Hint::AntiHermitian).validate_hint());
    EXPECT_TRUE(OperatorMatrix::identity(basis).with_hint(Hint::Unitary).validate_hint());
}

TEST(OperatorMatrix, BulkMaskDropsTopLayers)
{
    const Basis pm(BasisSpec::per_mode(4, 3));
    const auto mask = bulk_mask(pm, 2);
    for (std::size_t k = 0; k < pm.dim(); ++k)
        EXPECT_EQ(mask[k], pm.state(k).n1 <= 2 && pm.state(k).n2 <= 1);
    const Basis tn(BasisSpec::total_number(5));
    const auto mask_tn = bulk_mask(tn, 2);
    for (std::size_t k = 0; k < tn.dim(); ++k)
        EXPECT_EQ(mask_tn[k], tn.state(k).n1 + tn.state(k).n2 <= 3);
}
