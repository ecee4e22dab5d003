#pragma once

#include "vortexlab/atom.hpp"

namespace vortex {

struct TriangleGeometry {
    bool valid = false;
    double area = 0.0;  // eV^2
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
};

// Legs P_i_perp, k_perp, P_f_perp. alpha lies between P_f and P_i, beta
// between k and P_i, gamma between k and P_f.
TriangleGeometry triangle_decompose(double p_i_perp, double k_perp, double p_f_perp);

struct ResonanceRoot {
    double omega = 0.0;     // eV
    double jacobian = 0.0;  // |d(argument)/d omega|
    bool forbidden = true;
};

// Photon energy absorbed on resonance for a final CM momentum |P_f| at angle
// Theta to k.
ResonanceRoot absorption_resonant_omega(const TransitionSpec& t, double Pf_mag, double cos_theta);

// Incoming photon energy for scattering into (k_f, P_f). cos_t1: (k_i, k_f),
// cos_t2: (k_i, P_f), cos_t3: (k_f, P_f).
ResonanceRoot scattering_resonant_omega(const TransitionSpec& t, double kf_mag, double Pf_mag, double cos_t1,
                                        double cos_t2, double cos_t3);

}  // namespace vortex
