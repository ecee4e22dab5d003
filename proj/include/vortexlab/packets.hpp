#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "vortexlab/units.hpp"

namespace vortex {

using Eigen::Vector3d;

// Massive HG x LG packet. Widths in nm, mean_pz and mass in eV.
struct MassivePacketSpec {
    int k = 0;
    int n = 0;
    int l = 0;
    double sigma_perp = 20.0;
    double sigma_z = 20.0;
    double mean_pz = 0.0;
    double mass = units::amu;
};

// Paraxial-basis photon HG x LG packet with fixed helicity.
struct PhotonPacketSpec {
    int k_gamma = 0;
    int n_gamma = 0;
    int l_gamma = 0;
    int helicity = 1;
    double sigma_perp = 1000.0;
    double sigma_z = 10000.0;
    double mean_kz = 10.2;
};

// Transverse offset of the photon axis relative to the CM axis.
struct CollisionGeometry {
    double b = 0.0;      // nm
    double phi_b = 0.0;  // rad
};

struct SpectrumTable {
    Eigen::ArrayXd energies;
    Eigen::ArrayXd density;
};

void validate(const MassivePacketSpec& s);
void validate(const PhotonPacketSpec& s);

// Longitudinal HG factor in momentum space, sigma in 1/eV.
struct HgMomentum {
    HgMomentum(int k, double sigma, double mean);
    double operator()(double p) const;
    int k;
    double sigma, mean, norm;
};

// Transverse LG factor in momentum space without the azimuthal phase,
// (-1)^n i^{-|l|} included in `phase`. sigma in 1/eV.
struct LgMomentum {
    LgMomentum(int n, int l, double sigma);
    double radial(double p) const;
    cplx operator()(double p, double phi) const { return phase * radial(p) * std::polar(1.0, l * phi); }
    int n, l;
    double sigma, norm;
    cplx phase;
};

// Cached evaluator for the CM packet in momentum space (t = 0 unless set).
struct MassiveMomentumEval {
    explicit MassiveMomentumEval(const MassivePacketSpec& s);
    cplx operator()(const Vector3d& P) const;
    // without e^{i l phi}: used by the cylindrical parametrization
    cplx reduced(double p_perp, double p_z) const;
    MassivePacketSpec spec;
    HgMomentum hg;
    LgMomentum lg;
};

struct PhotonMomentumEval {
    explicit PhotonMomentumEval(const PhotonPacketSpec& s);
    cplx operator()(const Vector3d& k) const;
    cplx reduced(double k_perp, double k_z) const;
    PhotonPacketSpec spec;
    HgMomentum hg;
    LgMomentum lg;
};

// P in eV, t = c*t in nm. Normalized to int d^3P/(2pi)^3 |psi|^2 = 1.
cplx massive_packet_momentum(const MassivePacketSpec& spec, const Vector3d& P, double t = 0.0);
// r in nm, t = c*t in nm. Returns nm^{-3/2}.
cplx massive_packet_position(const MassivePacketSpec& spec, const Vector3d& r, double t = 0.0);
cplx photon_packet_momentum(const PhotonPacketSpec& spec, const Vector3d& k);

// Paraxial position-space densities used by the luminosity, nm^-1 and nm^-2.
double hg_position_density(int k, double sigma_nm, double z_nm);
double lg_position_density(int n, int l, double sigma_nm, double rho_nm);

double mean_photon_energy(const PhotonPacketSpec& spec);
SpectrumTable photon_spectrum(const PhotonPacketSpec& spec, const Eigen::ArrayXd& energies);

// (eps_z, eps_perp) in nm.
std::pair<double, double> emittance(const MassivePacketSpec& spec);
// rms transverse width after the packet travelled z_mean (nm).
double rms_width_at(const MassivePacketSpec& spec, double z_mean);

// Luminosity in 1/nm^2.
double luminosity(const MassivePacketSpec& cm, const PhotonPacketSpec& ph, const CollisionGeometry& g,
                  double rel_tol = 1e-6);

}  // namespace vortex
