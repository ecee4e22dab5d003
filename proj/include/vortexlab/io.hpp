#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "vortexlab/scans.hpp"

namespace vortex::io {

// Fixed "%.12e" formatting so files are byte-stable.
std::string format_number(double v);

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);
void write_json(const std::string& path, const nlohmann::json& j);

// One row per grid point; columns per channel.
void write_scan_csv(const std::string& path, const ScanResult& scan);
// p_perp_ev, phi_f_rad, p_z_ev, re, im, density
void write_grid_csv(const std::string& path, const EvolvedStateGrid& grid, const Eigen::ArrayXd& density);
// ell, probability
void write_oam_csv(const std::string& path, const OamSpectrum& s);

std::vector<std::string> collect_warnings(const ScanResult& scan);

}  // namespace vortex::io
