#pragma once

#include <complex>
#include <numbers>

namespace vortex {

using cplx = std::complex<double>;

// Natural units hbar = c = 1 with energies in eV. Lengths cross the public
// boundary in nm and are converted with hbar*c.
namespace units {
inline constexpr double hbar_c = 197.3269804;       // eV nm
inline constexpr double electron_mass = 510998.95;  // eV
inline constexpr double alpha = 7.2973525693e-3;
inline constexpr double amu = 931.49410242e6;       // eV
inline constexpr double barn_per_nm2 = 1e10;
inline constexpr double pi = std::numbers::pi;

inline constexpr double nm_to_inv_ev(double nm) { return nm / hbar_c; }
inline constexpr double inv_ev_to_nm(double l) { return l * hbar_c; }
}  // namespace units

// Electron charge, negative. e^2 = 4 pi alpha.
inline double electron_charge() { return -std::sqrt(4.0 * units::pi * units::alpha); }

}  // namespace vortex
