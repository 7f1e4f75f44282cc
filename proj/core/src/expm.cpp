#include "jtspec/expm.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include <Eigen/LU>

namespace jtspec {

namespace {

// theta_m: largest 1-norm for which the degree-m approximant has backward
// error below 2^-53.
constexpr std::array<double, 5> kTheta = {1.495585217958292e-2, 2.539398330063230e-1, 9.504178996162932e-1,
                                          2.097847961257068e0, 5.371920351148152e0};

constexpr std::array<double, 4> kB3 = {120.0, 60.0, 12.0, 1.0};
constexpr std::array<double, 6> kB5 = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
constexpr std::array<double, 8> kB7 = {17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0, 56.0, 1.0};
constexpr std::array<double, 10> kB9 = {17643225600.0, 8821612800.0, 2075673600.0, 302702400.0, 30270240.0,
                                        2162160.0,     110880.0,     3960.0,       90.0,        1.0};
constexpr std::array<double, 14> kB13 = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                                         1187353796428800.0,  129060195264000.0,   10559470521600.0,
                                         670442572800.0,      33522128640.0,       1323241920.0,
                                         40840800.0,          960960.0,            16380.0,
                                         182.0,               1.0};

double one_norm(const Matrix& a)
{
    return a.cwiseAbs().colwise().sum().maxCoeff();
}

/// Odd (u) and even (v) parts of the degree-m numerator, for m < 13.
template <std::size_t N>
void pade_low(const Matrix& a, const std::array<double, N>& b, Matrix& u, Matrix& v)
{
    const Eigen::Index n = a.rows();
    const Matrix a2 = a * a;
    Matrix power = Matrix::Identity(n, n);
    Matrix odd = Matrix::Zero(n, n);
    Matrix even = Matrix::Zero(n, n);
    for (std::size_t k = 0; k + 1 < N; k += 2) {
        even += b[k] * power;
        odd += b[k + 1] * power;
        power = power * a2;
    }
    u = a * odd;
    v = even;
}

void pade13(const Matrix& a, Matrix& u, Matrix& v)
{
    const auto& b = kB13;
    const Eigen::Index n = a.rows();
    const Matrix id = Matrix::Identity(n, n);
    const Matrix a2 = a * a;
    const Matrix a4 = a2 * a2;
    const Matrix a6 = a4 * a2;
    const Matrix inner_u = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2);
    u = a * (inner_u + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
    v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
}

}  // namespace

Matrix expm(const Matrix& a)
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("expm: matrix must be square");
    const Eigen::Index n = a.rows();
    if (n == 0)
        return a;

    const double norm = one_norm(a);
    if (!std::isfinite(norm))
        throw std::invalid_argument("expm: non-finite matrix entries");

    Matrix u;
    Matrix v;
    int squarings = 0;
    if (norm <= kTheta[0]) {
        pade_low(a, kB3, u, v);
    } else if (norm <= kTheta[1]) {
        pade_low(a, kB5, u, v);
    } else if (norm <= kTheta[2]) {
        pade_low(a, kB7, u, v);
    } else if (norm <= kTheta[3]) {
        pade_low(a, kB9, u, v);
    } else {
        squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / kTheta[4]))));
        const Matrix scaled = a / std::ldexp(1.0, squarings);
        pade13(scaled, u, v);
    }

    Matrix result = Eigen::PartialPivLU<Matrix>(v - u).solve(v + u);
    for (int k = 0; k < squarings; ++k)
        result = result * result;
    return result;
}

OperatorMatrix expm(const OperatorMatrix& generator)
{
    const Hint hint = generator.hint() == Hint::AntiHermitian ? Hint::Unitary : Hint::General;
    return {generator.basis_ptr(), expm(generator.entries()), hint};
}

}  // namespace jtspec
