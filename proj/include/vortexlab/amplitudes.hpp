#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "vortexlab/atom.hpp"
#include "vortexlab/packets.hpp"

namespace vortex {

struct NumericsConfig {
    int n_theta = 64;   // photon polar nodes in the evolved amplitude
    int n_phi = 128;    // photon azimuthal nodes
    int n_pperp = 32;   // final CM momentum mesh
    int n_pz = 24;
    int n_phif = 64;
    int mc_samples = 200000;
    std::uint64_t seed = 1;
    double gamma_reg = 4e-7;  // eV
    int intermediate_n_max = 3;
    int mc_inner_theta = 12;
    int mc_inner_phi = 8;
    int workers = 1;
};

struct CollisionConfig {
    TransitionSpec transition;
    MassivePacketSpec cm;
    PhotonPacketSpec photon;
    CollisionGeometry geometry;
    NumericsConfig numerics;
};

// Checks every field; cm.mass must equal the atom total mass.
void validate(const CollisionConfig& cfg);
CollisionConfig with_consistent_mass(CollisionConfig cfg);

// Transferred OAM at b = 0.
int l0_of(const CollisionConfig& cfg);

// psi^(CM,ev)(P_f) in eV^{-3/2} (the t_f phase is dropped).
cplx evolved_cm_amplitude(const CollisionConfig& cfg, const Vector3d& Pf);

// Same amplitude through the cylindrical (k_z, gamma) parametrization of the
// transverse delta function. Independent check of the measure and prefactor.
cplx evolved_cm_amplitude_cylindrical(const CollisionConfig& cfg, const Vector3d& Pf, int n_kz = 160,
                                      int n_gamma = 160);

struct MeshSpec {
    int n_pperp = 32;
    int n_phi = 64;
    int n_pz = 20;
    double pperp_max = 0.0;  // eV; 0 = auto
    bool single_pz = false;  // slice at pz_value instead of the P_z integral
    double pz_value = 0.0;
    double pz_center = 0.0;     // used when pz_halfwidth > 0
    double pz_halfwidth = 0.0;  // eV; 0 = auto
};

MeshSpec default_mesh(const CollisionConfig& cfg);

struct EvolvedStateGrid {
    Eigen::ArrayXd p_perp, w_perp;  // Gauss-Legendre in P_perp (weights exclude the P_perp measure)
    Eigen::ArrayXd phi;             // uniform
    Eigen::ArrayXd p_z, w_z;        // Gauss-Legendre; w_z = 1 for a slice
    Eigen::ArrayXcd amp;            // index (i_perp * n_phi + j_phi) * n_pz + k_z
    double norm = 0.0;
    int n_pperp() const { return static_cast<int>(p_perp.size()); }
    int n_phi() const { return static_cast<int>(phi.size()); }
    int n_pz() const { return static_cast<int>(p_z.size()); }
    cplx at(int i, int j, int k) const { return amp[(i * n_phi() + j) * n_pz() + k]; }
};

EvolvedStateGrid evolved_state_grid(const CollisionConfig& cfg, const MeshSpec& mesh);

struct OamSpectrum {
    std::vector<int> ell;
    std::vector<double> probability;
    double mean = 0.0;
    double stddev = 0.0;
};

OamSpectrum oam_spectrum_of_state(const EvolvedStateGrid& grid);

struct OamEstimate : OamSpectrum {
    std::vector<double> asymptotic;  // small-argument form, same ell ordering, normalized
};

// Widths in nm.
OamEstimate oam_distribution_estimate(int l0, double b, double sigma_cm, double sigma_ph, int m_range);

struct ProbabilityResult {
    double value = 0.0;
    double error = 0.0;  // quadrature estimate or MC standard error
    std::vector<std::string> warnings;
};

// Integral of |psi^(CM,ev)|^2 over d^3P_f/(2 pi)^3. The error is the change
// against a rule with two thirds of the nodes in every direction.
ProbabilityResult absorption_probability(const CollisionConfig& cfg);

// Plane-wave T-matrix (second order + seagull), without the energy delta and
// the (2 pi)^4 -i prefactor. Momentum conservation is the caller's job.
cplx scattering_amplitude_pw(const CollisionConfig& cfg, const Vector3d& Pi, const Vector3d& ki, int lam_i,
                             const Vector3d& Pf, const Vector3d& kf, int lam_f);
// Individual pieces of the same amplitude, for diagnostics.
cplx scattering_amplitude_seagull(const CollisionConfig& cfg, const Vector3d& ki, int lam_i, const Vector3d& kf,
                                  int lam_f);

// Packet-folded amplitude into the plane-wave final state (P_f, k_f, lam_f),
// 1s -> 1s. `reference` routes the T-matrix through scattering_amplitude_pw.
cplx scattering_packet_amplitude(const CollisionConfig& cfg, const Vector3d& Pf, const Vector3d& kf, int lam_f,
                                 bool reference = false);

// Monte Carlo over (P_f, k_f) of the summed |amplitude|^2, 1s -> 1s.
ProbabilityResult scattering_probability(const CollisionConfig& cfg);

double cross_section(double probability, double luminosity_nm2);

}  // namespace vortex
