#pragma once

#include <array>

namespace jtspec::cli {

/// Published ground and first-excited energies of the E x e Jahn-Teller
/// model at omega = 1, omega0 = 0, rotating-wave and exact columns,
/// transcribed digit for digit (five decimals as printed).
struct PublishedRow {
    double kappa2;
    double rwa_ground;
    double exact_ground;
    double rwa_excited;
    double exact_excited;
};

inline constexpr std::array<PublishedRow, 9> kPublishedTable = {{
    {0.1, 0.90455, 0.90442, 1.85982, 1.82286},
    {0.2, 0.81678, 0.81595, 1.73508, 1.67515},
    {0.3, 0.73508, 0.73277, 1.62159, 1.54472},
    {0.4, 0.65835, 0.65371, 1.51676, 1.36373},
    {0.5, 0.58578, 0.57798, 1.41886, 1.31592},
    {0.6, 0.51676, 0.50498, 1.32667, 1.21248},
    {0.7, 0.45080, 0.43429, 1.23931, 1.11438},
    {0.8, 0.38754, 0.36557, 1.15609, 1.02070},
    {0.9, 0.32667, 0.29856, 1.07646, 0.93072},
}};

/// Agreement required between computed and published exact energies.
inline constexpr double kExactTolerance = 5e-3;
/// Agreement required between the fitted closed form and the published RWA column.
inline constexpr double kRwaFitTolerance = 1e-4;

/// Accepted window for the fitted residual exponent of the second-order transform.
inline constexpr double kSlopeLow = 2.7;
inline constexpr double kSlopeHigh = 3.3;

}  // namespace jtspec::cli
