#pragma once

#include <Eigen/Dense>

#include "jtspec/models.hpp"
#include "jtspec/operator_matrix.hpp"

namespace jtspec {

enum class Branch { Plus, Minus };

/// Quantum numbers of the closed-form rotating-wave level: j is the total
/// boson number and 0 <= n <= 2j.
struct RwaLevel {
    int j = 0;
    int n = 0;
    Branch branch = Branch::Minus;
};

/// E = (j+1) w +- (1/2) sqrt(8 kappa^2 (n+1) + (w - 2 w0)^2), for real kappa.
double rwa_energy(const RwaLevel& level, const ModelParams& params);

/// Lowest `count` distinct values of rwa_energy over j <= j_max.
std::vector<double> rwa_lowest_levels(const ModelParams& params, std::size_t count, int j_max = 12);

/// Eigenpairs of one 2x2 block of the rotated Hamiltonian on
/// {|Up, n1, n2>, |Down, n1+1, n2>}:
///   [ w(n1+n2+1) + w0          sqrt(2) kappa sqrt(n1+1) ]
///   [ sqrt(2) kappa sqrt(n1+1)  w(n1+n2+2) - w0         ]
/// kappa may be complex (kappa = i gamma gives the non-Hermitian block).
/// Vectors hold (c1, c2) with unit Euclidean norm.
struct BlockSolution {
    Complex e_plus;
    Complex e_minus;
    Eigen::Vector2cd v_plus;
    Eigen::Vector2cd v_minus;
};

BlockSolution block_solve(int n1, int n2, const ModelParams& params);

/// Embeds c1 |Up, n1, n2> + c2 |Down, n1+1, n2> in the full basis. Requires
/// |c1|^2 + |c2|^2 = 1 and every component with nonzero amplitude inside
/// the truncation.
Vector assemble_eigenstate(int n1, int n2, Complex c1, Complex c2, const Basis& basis);

/// Two-parameter closed form that matches the published rotating-wave
/// column for w0 = 0: E(m) = (m+2) w - sqrt(w^2 + (m+2) kappa^2), with
/// m = 0 for the ground state and m = 1 for the first excited state.
double table_fit_energy(int level_index, const ModelParams& params);

}  // namespace jtspec
