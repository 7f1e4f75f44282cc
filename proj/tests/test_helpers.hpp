#pragma once

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include "jtspec/operator_matrix.hpp"

namespace jtspec::testing {

inline double max_entry(const Matrix& m)
{
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double max_entry(const OperatorMatrix& m)
{
    return max_entry(m.entries());
}

inline std::vector<double> sorted_real(const std::vector<Complex>& values)
{
    std::vector<double> out;
    for (const Complex& z : values)
        out.push_back(z.real());
    std::sort(out.begin(), out.end());
    return out;
}

inline double max_sorted_distance(std::vector<double> a, std::vector<double> b)
{
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a.size() != b.size())
        return 1e300;
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

inline Matrix random_matrix(std::mt19937_64& rng, Eigen::Index n)
{
    std::normal_distribution<double> g;
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = Complex(g(rng), g(rng));
    return m;
}

}  // namespace jtspec::testing
