#pragma once

#include "vortexlab/units.hpp"

namespace vortex::specfun {

inline constexpr int polynomial_cap = 60;

// ln(n!) from a table, 0 <= n <= 170.
double log_factorial(int n);

// Physicists' Hermite polynomial H_k(x).
double hermite(int k, double x);

// Generalized Laguerre polynomial L_n^a(x), a >= -1.
double assoc_laguerre(int n, double a, double x);

// Small Wigner d^l_{m,mp}(theta), z-y-z convention.
double wigner_d(int l, int m, int mp, double theta);

double bessel_j(int m, double x);
double bessel_i(int m, double x);

// Associated Legendre P_l^m(x) with the Condon-Shortley phase, 0 <= m <= l.
double assoc_legendre(int l, int m, double x);

cplx sph_harm(int l, int m, double theta, double phi);

// d/dtheta of Y_l^m.
cplx sph_harm_dtheta(int l, int m, double theta, double phi);

}  // namespace vortex::specfun
