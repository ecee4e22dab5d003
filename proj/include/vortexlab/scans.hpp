#pragma once

#include <string>
#include <vector>

#include "vortexlab/amplitudes.hpp"

namespace vortex {

struct ChannelPoint {
    BoundState final;
    double probability = 0.0;
    double error = 0.0;
    double cross_section = 0.0;  // barn
    int cm_ell = 0;              // final CM OAM (exact at b = 0)
};

struct ScanRow {
    double parameter = 0.0;
    double luminosity = 0.0;  // 1/nm^2
    std::vector<ChannelPoint> channels;
    bool has_scattering = false;
    double scattering = 0.0, scattering_error = 0.0, scattering_cross_section = 0.0;
    std::vector<std::string> warnings;
};

struct ScanResult {
    std::string parameter;  // column name including unit
    std::vector<ScanRow> rows;
};

// Photon energy at the absorption peak for a CM packet with mean momentum
// mean_pz (eV).
double resonance_energy(const TransitionSpec& t, double mean_pz = 0.0);
// 1/e half width of the photon spectrum, hbar c / sigma_z (eV).
double photon_bandwidth(const PhotonPacketSpec& ph);
// Sets photon.mean_kz so that the mean photon energy equals omega.
PhotonPacketSpec with_mean_energy(PhotonPacketSpec ph, double omega);
// Points every `spacing` bandwidths within +-half_width bandwidths of center.
std::vector<double> resonance_grid(double center, double bandwidth, double half_width = 5.0, double spacing = 0.25);

struct EnergyScanOptions {
    bool scattering = false;   // add the 1s -> 1s Monte Carlo column
    bool absorption = true;
};

ScanResult energy_scan(const CollisionConfig& cfg, const std::vector<double>& omegas,
                       const std::vector<BoundState>& channels, const EnergyScanOptions& opt = {});

// P and sigma versus l_gamma for the configured (dipole) channel.
ScanResult oam_transfer_scan(const CollisionConfig& cfg, const std::vector<int>& ell_gamma);

struct KickMapEntry {
    double b = 0.0;          // nm
    EvolvedStateGrid grid;   // slice at P_fz = <k_z>
    Eigen::ArrayXd density;  // |psi|^2 / max, same indexing as grid.amp
    OamSpectrum oam;
};

std::vector<KickMapEntry> kick_map(const CollisionConfig& cfg, const std::vector<double>& b_values);

ScanResult coherence_scan(const CollisionConfig& cfg, const std::vector<double>& sigma_cm);

struct ZScanRow {
    int Z = 1;
    double resonance = 0.0;  // eV
    double luminosity = 0.0;
    double sigma_full = 0.0, sigma_dipole = 0.0;  // barn at line center
    double p_full = 0.0, p_dipole = 0.0;
};

std::vector<ZScanRow> z_scan(const CollisionConfig& cfg, const std::vector<int>& Z_values);

// Indices of strict local maxima / minima of a sampled curve.
std::vector<int> local_maxima(const std::vector<double>& y, double rel_floor = 0.0);
std::vector<int> local_extrema(const std::vector<double>& y);

}  // namespace vortex
