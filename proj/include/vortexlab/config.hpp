#pragma once

#include <map>
#include <string>
#include <vector>

#include "vortexlab/amplitudes.hpp"

namespace vortex {

// Flat "section.key" -> value view of a run configuration.
using ConfigMap = std::map<std::string, std::string>;

struct ScanSettings {
    std::string kind = "energy";  // energy | oam_transfer | coherence | z
    std::vector<double> values;   // empty = automatic grid where one exists
    double half_width = 5.0;      // bandwidths
    double spacing = 0.25;        // bandwidths
    std::vector<BoundState> channels;
    bool scattering = false;
    bool absorption = true;
    int m_range = 0;  // 0 = automatic
};

struct RunConfig {
    CollisionConfig collision;
    ScanSettings scan;
    std::string out_dir = "out";
    bool mean_omega_at_resonance = false;
    ConfigMap entries;  // resolved snapshot, including defaults
};

// Reads an INI file (sections atom, cm, photon, geometry, numerics, scan,
// output) or the "config" object of a meta.json written by a previous run.
ConfigMap read_config_file(const std::string& path);
ConfigMap parse_config_text(const std::string& text);
// KEY=VALUE overrides; unknown keys are rejected.
void apply_overrides(ConfigMap& map, const std::vector<std::string>& overrides);
// Schema check, defaults and conversion. Throws ConfigError naming the field.
RunConfig build_run_config(const ConfigMap& map);
std::string to_ini(const ConfigMap& map);
std::vector<std::string> known_keys();

}  // namespace vortex
