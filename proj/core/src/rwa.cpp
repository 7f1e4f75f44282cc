#include "jtspec/rwa.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace jtspec {

namespace {

void require_real_kappa(const ModelParams& p, const char* what)
{
    if (!p.kappa_is_real())
        throw std::invalid_argument(std::string(what) + ": requires a real coupling");
}

Eigen::Vector2cd block_vector(Complex lambda, Complex d1, Complex d2, Complex b)
{
    // Both candidates solve the block equations; take the better conditioned.
    Eigen::Vector2cd from_row2(lambda - d2, b);
    Eigen::Vector2cd from_row1(b, lambda - d1);
    Eigen::Vector2cd v = from_row2.norm() >= from_row1.norm() ? from_row2 : from_row1;
    const double norm = v.norm();
    if (norm == 0.0)
        return Eigen::Vector2cd(1.0, 0.0);
    v /= norm;
    // Fix the phase: largest component real positive.
    const Complex lead = std::abs(v(0)) >= std::abs(v(1)) ? v(0) : v(1);
    return v * (std::abs(lead) / lead);
}

}  // namespace

double rwa_energy(const RwaLevel& level, const ModelParams& p)
{
    require_real_kappa(p, "rwa_energy");
    if (level.j < 0 || level.n < 0 || level.n > 2 * level.j)
        throw std::invalid_argument("rwa_energy: need j >= 0 and 0 <= n <= 2j, got j=" + std::to_string(level.j) +
                                    " n=" + std::to_string(level.n));
    const double k2 = p.kappa.real() * p.kappa.real();
    const double detuning = p.omega - 2.0 * p.omega0;
    const double half_split = 0.5 * std::sqrt(8.0 * k2 * (level.n + 1) + detuning * detuning);
    const double centre = (level.j + 1) * p.omega;
    return level.branch == Branch::Plus ? centre + half_split : centre - half_split;
}

std::vector<double> rwa_lowest_levels(const ModelParams& p, std::size_t count, int j_max)
{
    std::vector<double> all;
    for (int j = 0; j <= j_max; ++j)
        for (int n = 0; n <= 2 * j; ++n)
            for (const Branch b : {Branch::Minus, Branch::Plus})
                all.push_back(rwa_energy({j, n, b}, p));
    std::sort(all.begin(), all.end());

    std::vector<double> out;
    for (const double e : all) {
        if (out.size() == count)
            break;
        if (out.empty() || e - out.back() > 1e-6)
            out.push_back(e);
    }
    return out;
}

BlockSolution block_solve(int n1, int n2, const ModelParams& p)
{
    if (n1 < 0 || n2 < 0)
        throw std::invalid_argument("block_solve: occupations must be >= 0");
    p.validate();
    const Complex d1 = p.omega * (n1 + n2 + 1) + p.omega0;
    const Complex d2 = p.omega * (n1 + n2 + 2) - p.omega0;
    const Complex b = std::sqrt(2.0) * p.kappa * std::sqrt(static_cast<double>(n1 + 1));

    const Complex mean = 0.5 * (d1 + d2);
    const Complex half_diff = 0.5 * (d1 - d2);
    const Complex root = std::sqrt(half_diff * half_diff + b * b);

    BlockSolution out;
    out.e_plus = mean + root;
    out.e_minus = mean - root;
    out.v_plus = block_vector(out.e_plus, d1, d2, b);
    out.v_minus = block_vector(out.e_minus, d1, d2, b);
    return out;
}

Vector assemble_eigenstate(int n1, int n2, Complex c1, Complex c2, const Basis& basis)
{
    const double norm2 = std::norm(c1) + std::norm(c2);
    if (std::abs(norm2 - 1.0) > 1e-12)
        throw std::invalid_argument("assemble_eigenstate: |c1|^2 + |c2|^2 = " + std::to_string(norm2) + ", expected 1");

    Vector v = Vector::Zero(static_cast<Eigen::Index>(basis.dim()));
    auto place = [&](const BasisState& s, Complex c) {
        if (c == Complex{})
            return;
        const auto k = basis.index(s);
        if (!k)
            throw std::out_of_range("assemble_eigenstate: component (n1=" + std::to_string(s.n1) +
                                    ", n2=" + std::to_string(s.n2) + ") lies outside " +
                                    to_string(basis.spec()));
        v(static_cast<Eigen::Index>(*k)) = c;
    };
    place({Spin::Up, n1, n2}, c1);
    place({Spin::Down, n1 + 1, n2}, c2);
    return v;
}

double table_fit_energy(int level_index, const ModelParams& p)
{
    require_real_kappa(p, "table_fit_energy");
    if (level_index != 0 && level_index != 1)
        throw std::invalid_argument("table_fit_energy: level_index must be 0 or 1");
    if (p.omega0 != 0.0)
        throw std::invalid_argument("table_fit_energy: only defined for omega0 = 0");
    const double m = level_index + 2.0;
    const double k2 = p.kappa.real() * p.kappa.real();
    return m * p.omega - std::sqrt(p.omega * p.omega + m * k2);
}

}  // namespace jtspec
