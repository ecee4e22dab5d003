#include "vortexlab/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vortexlab/errors.hpp"
#include "vortexlab/scans.hpp"

namespace vortex {

namespace {

enum class Kind { Int, UInt, Double, Bool, Text, State, DoubleList, StateList };

struct KeySpec {
    const char* key;
    Kind kind;
    const char* fallback;  // nullptr = required
};

// "" marks an optional key without a default.
const std::vector<KeySpec>& schema() {
    static const std::vector<KeySpec> s = {
        {"atom.Z", Kind::Int, nullptr},
        {"atom.A", Kind::Double, nullptr},
        {"atom.initial", Kind::State, "1 0 0"},
        {"atom.final", Kind::State, "2 1 1"},
        {"atom.dipole_mode", Kind::Bool, "false"},
        {"atom.numeric_only", Kind::Bool, "false"},
        {"atom.table", Kind::Text, "corrected"},
        {"cm.k", Kind::Int, "0"},
        {"cm.n", Kind::Int, "0"},
        {"cm.l", Kind::Int, "0"},
        {"cm.sigma_perp", Kind::Double, "20"},
        {"cm.sigma_z", Kind::Double, "20"},
        {"cm.mean_pz", Kind::Double, "0"},
        {"cm.mass", Kind::Double, ""},
        {"photon.k_gamma", Kind::Int, "0"},
        {"photon.n_gamma", Kind::Int, "0"},
        {"photon.l_gamma", Kind::Int, "0"},
        {"photon.helicity", Kind::Int, "1"},
        {"photon.sigma_perp", Kind::Double, "1000"},
        {"photon.sigma_z", Kind::Double, "10000"},
        {"photon.mean_kz", Kind::Double, "10.2"},
        {"photon.mean_omega", Kind::Text, ""},
        {"geometry.b", Kind::Double, "0"},
        {"geometry.phi_b", Kind::Double, "0"},
        {"numerics.n_theta", Kind::Int, "64"},
        {"numerics.n_phi", Kind::Int, "128"},
        {"numerics.n_pperp", Kind::Int, "32"},
        {"numerics.n_pz", Kind::Int, "24"},
        {"numerics.n_phif", Kind::Int, "64"},
        {"numerics.mc_samples", Kind::Int, "200000"},
        {"numerics.seed", Kind::UInt, "1"},
        {"numerics.gamma_reg", Kind::Text, "4e-7"},
        {"numerics.intermediate_n_max", Kind::Int, "3"},
        {"numerics.mc_inner_theta", Kind::Int, "12"},
        {"numerics.mc_inner_phi", Kind::Int, "8"},
        {"numerics.workers", Kind::Int, "0"},
        {"scan.kind", Kind::Text, "energy"},
        {"scan.values", Kind::DoubleList, ""},
        {"scan.half_width", Kind::Double, "5"},
        {"scan.spacing", Kind::Double, "0.25"},
        {"scan.channels", Kind::StateList, ""},
        {"scan.scattering", Kind::Bool, "false"},
        {"scan.absorption", Kind::Bool, "true"},
        {"scan.m_range", Kind::Int, "0"},
        {"output.dir", Kind::Text, "out"},
    };
    return s;
}

const KeySpec* find_key(const std::string& key) {
    for (const KeySpec& k : schema())
        if (key == k.key) return &k;
    return nullptr;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
    const std::string t = trim(v);
    double out = 0.0;
    const auto r = std::from_chars(t.data(), t.data() + t.size(), out);
    if (t.empty() || r.ec != std::errc() || r.ptr != t.data() + t.size() || !std::isfinite(out))
        throw ConfigError(key, "expected a number, got '" + v + "'");
    return out;
}

long long to_int(const std::string& key, const std::string& v) {
    const std::string t = trim(v);
    long long out = 0;
    const auto r = std::from_chars(t.data(), t.data() + t.size(), out);
    if (t.empty() || r.ec != std::errc() || r.ptr != t.data() + t.size())
        throw ConfigError(key, "expected an integer, got '" + v + "'");
    return out;
}

bool to_bool(const std::string& key, const std::string& v) {
    std::string t = trim(v);
    std::transform(t.begin(), t.end(), t.begin(), ::tolower);
    if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
    if (t == "false" || t == "0" || t == "no" || t == "off") return false;
    throw ConfigError(key, "expected true or false, got '" + v + "'");
}

BoundState to_state(const std::string& key, const std::string& v) {
    try {
        return parse_bound_state(trim(v));
    } catch (const std::exception& e) {
        throw ConfigError(key, e.what());
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!trim(item).empty()) out.push_back(trim(item));
    return out;
}

// Lists accept commas or whitespace as separators.
std::vector<double> to_double_list(const std::string& key, const std::string& v) {
    std::string t = v;
    std::replace(t.begin(), t.end(), ',', ' ');
    std::vector<double> out;
    for (const std::string& x : split(t, ' ')) out.push_back(to_double(key, x));
    return out;
}

std::vector<BoundState> to_state_list(const std::string& key, const std::string& v) {
    std::vector<BoundState> out;
    for (const std::string& x : split(v, ',')) out.push_back(to_state(key, x));
    return out;
}

void check_value(const KeySpec& k, const std::string& v) {
    switch (k.kind) {
        case Kind::Int: to_int(k.key, v); break;
        case Kind::UInt:
            if (to_int(k.key, v) < 0) throw ConfigError(k.key, "must be non-negative");
            break;
        case Kind::Double: to_double(k.key, v); break;
        case Kind::Bool: to_bool(k.key, v); break;
        case Kind::State: to_state(k.key, v); break;
        case Kind::DoubleList: to_double_list(k.key, v); break;
        case Kind::StateList: to_state_list(k.key, v); break;
        case Kind::Text: break;
    }
}

int as_int(const std::string& key, const std::string& v) {
    const long long x = to_int(key, v);
    if (x < -1000000000LL || x > 1000000000LL) throw ConfigError(key, "integer out of range");
    return static_cast<int>(x);
}

}  // namespace

std::vector<std::string> known_keys() {
    std::vector<std::string> out;
    for (const KeySpec& k : schema()) out.push_back(k.key);
    return out;
}

ConfigMap parse_config_text(const std::string& text) {
    // '#' comments are stripped here; the INI reader handles ';'
    // repeated keys are merged by the INI reader, so they are caught here
    std::stringstream in(text), cleaned;
    std::string line, section;
    std::set<std::string> seen;
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (!t.empty() && t[0] == '#') continue;
        cleaned << line << '\n';
        if (t.size() > 1 && t.front() == '[' && t.back() == ']') {
            section = trim(t.substr(1, t.size() - 2));
        } else if (const auto eq = t.find('='); !t.empty() && t[0] != ';' && eq != std::string::npos) {
            const std::string key = (section.empty() ? "" : section + ".") + trim(t.substr(0, eq));
            if (!seen.insert(key).second) throw ConfigError(key, "duplicate key");
        }
    }
    std::vector<CLI::ConfigItem> items;
    try {
        items = CLI::ConfigINI().from_config(cleaned);
    } catch (const CLI::Error& e) {
        throw ConfigError("config", std::string("parse error: ") + e.what());
    }
    ConfigMap map;
    for (const CLI::ConfigItem& it : items) {
        if (it.name == "++" || it.name == "--") continue;
        const std::string key = it.fullname();
        std::string value;
        for (size_t i = 0; i < it.inputs.size(); ++i) value += (i ? " " : "") + it.inputs[i];
        if (it.parents.empty()) throw ConfigError(key, "key outside a section");
        if (!find_key(key)) throw ConfigError(key, "unknown key");
        if (map.count(key)) throw ConfigError(key, "duplicate key");
        map[key] = value;
    }
    return map;
}

ConfigMap read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const std::string t = trim(text);
    if (!t.empty() && t[0] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(t);
        } catch (const std::exception& e) {
            throw ConfigError("config", std::string("invalid JSON: ") + e.what());
        }
        if (!j.contains("config") || !j["config"].is_object())
            throw ConfigError("config", "JSON file has no 'config' object");
        ConfigMap map;
        for (auto& [k, v] : j["config"].items()) {
            if (!find_key(k)) throw ConfigError(k, "unknown key");
            map[k] = v.is_string() ? v.get<std::string>() : v.dump();
        }
        return map;
    }
    return parse_config_text(text);
}

void apply_overrides(ConfigMap& map, const std::vector<std::string>& overrides) {
    for (const std::string& o : overrides) {
        const auto eq = o.find('=');
        if (eq == std::string::npos) throw ConfigError(o, "override must look like section.key=value");
        const std::string key = trim(o.substr(0, eq));
        if (!find_key(key)) throw ConfigError(key, "unknown key");
        map[key] = trim(o.substr(eq + 1));
    }
}

std::string to_ini(const ConfigMap& map) {
    std::string out, section;
    for (const KeySpec& k : schema()) {
        const auto it = map.find(k.key);
        if (it == map.end()) continue;
        const std::string key = k.key;
        const auto dot = key.find('.');
        const std::string sec = key.substr(0, dot);
        if (sec != section) {
            out += (section.empty() ? "" : "\n") + std::string("[") + sec + "]\n";
            section = sec;
        }
        std::string v = it->second;
        if (v.find(' ') != std::string::npos || v.empty()) v = "\"" + v + "\"";
        out += key.substr(dot + 1) + " = " + v + "\n";
    }
    return out;
}

RunConfig build_run_config(const ConfigMap& input) {
    ConfigMap map;
    for (const auto& [k, v] : input) {
        const KeySpec* ks = find_key(k);
        if (!ks) throw ConfigError(k, "unknown key");
        check_value(*ks, v);
        map[k] = v;
    }
    for (const KeySpec& k : schema()) {
        if (map.count(k.key)) continue;
        if (!k.fallback) throw ConfigError(k.key, "required field is missing");
        if (std::string(k.fallback).empty()) continue;
        map[k.key] = k.fallback;
    }
    auto get = [&](const char* key) -> const std::string& { return map.at(key); };
    auto has = [&](const char* key) { return map.count(key) > 0; };

    RunConfig rc;
    rc.entries = map;
    TransitionSpec& t = rc.collision.transition;
    t.atom.Z = as_int("atom.Z", get("atom.Z"));
    t.atom.A = to_double("atom.A", get("atom.A"));
    t.initial = to_state("atom.initial", get("atom.initial"));
    t.final = to_state("atom.final", get("atom.final"));
    t.dipole_mode = to_bool("atom.dipole_mode", get("atom.dipole_mode"));
    t.numeric_only = to_bool("atom.numeric_only", get("atom.numeric_only"));
    const std::string table = trim(get("atom.table"));
    if (table == "corrected") t.table = CurrentTable::corrected;
    else if (table == "as_printed") t.table = CurrentTable::as_printed;
    else throw ConfigError("atom.table", "expected corrected or as_printed");
    try {
        validate(t.atom);
    } catch (const std::exception& e) {
        throw ConfigError("atom", e.what());
    }

    MassivePacketSpec& cm = rc.collision.cm;
    cm.k = as_int("cm.k", get("cm.k"));
    cm.n = as_int("cm.n", get("cm.n"));
    cm.l = as_int("cm.l", get("cm.l"));
    cm.sigma_perp = to_double("cm.sigma_perp", get("cm.sigma_perp"));
    cm.sigma_z = to_double("cm.sigma_z", get("cm.sigma_z"));
    cm.mean_pz = to_double("cm.mean_pz", get("cm.mean_pz"));
    cm.mass = t.atom.total_mass();
    if (has("cm.mass")) {
        const double m = to_double("cm.mass", get("cm.mass"));
        if (std::abs(m - cm.mass) > 1e-9 * cm.mass)
            throw ConfigError("cm.mass", "must equal the atom total mass " + std::to_string(cm.mass) + " eV");
    }

    PhotonPacketSpec& ph = rc.collision.photon;
    ph.k_gamma = as_int("photon.k_gamma", get("photon.k_gamma"));
    ph.n_gamma = as_int("photon.n_gamma", get("photon.n_gamma"));
    ph.l_gamma = as_int("photon.l_gamma", get("photon.l_gamma"));
    ph.helicity = as_int("photon.helicity", get("photon.helicity"));
    ph.sigma_perp = to_double("photon.sigma_perp", get("photon.sigma_perp"));
    ph.sigma_z = to_double("photon.sigma_z", get("photon.sigma_z"));
    ph.mean_kz = to_double("photon.mean_kz", get("photon.mean_kz"));

    rc.collision.geometry.b = to_double("geometry.b", get("geometry.b"));
    rc.collision.geometry.phi_b = to_double("geometry.phi_b", get("geometry.phi_b"));

    NumericsConfig& n = rc.collision.numerics;
    n.n_theta = as_int("numerics.n_theta", get("numerics.n_theta"));
    n.n_phi = as_int("numerics.n_phi", get("numerics.n_phi"));
    n.n_pperp = as_int("numerics.n_pperp", get("numerics.n_pperp"));
    n.n_pz = as_int("numerics.n_pz", get("numerics.n_pz"));
    n.n_phif = as_int("numerics.n_phif", get("numerics.n_phif"));
    n.mc_samples = as_int("numerics.mc_samples", get("numerics.mc_samples"));
    n.seed = static_cast<std::uint64_t>(to_int("numerics.seed", get("numerics.seed")));
    const std::string gr = trim(get("numerics.gamma_reg"));
    if (gr == "radiative") {
        n.gamma_reg = radiative_width_to_ground(t.atom, {2, 1, 1}, t.dipole_mode);
    } else {
        n.gamma_reg = to_double("numerics.gamma_reg", gr);
    }
    n.intermediate_n_max = as_int("numerics.intermediate_n_max", get("numerics.intermediate_n_max"));
    n.mc_inner_theta = as_int("numerics.mc_inner_theta", get("numerics.mc_inner_theta"));
    n.mc_inner_phi = as_int("numerics.mc_inner_phi", get("numerics.mc_inner_phi"));
    n.workers = as_int("numerics.workers", get("numerics.workers"));
    if (n.workers < 0) throw ConfigError("numerics.workers", "must be >= 0 (0 = automatic)");

    ScanSettings& sc = rc.scan;
    sc.kind = trim(get("scan.kind"));
    static const std::vector<std::string> kinds = {"energy", "oam_transfer", "coherence", "z"};
    if (std::find(kinds.begin(), kinds.end(), sc.kind) == kinds.end())
        throw ConfigError("scan.kind", "expected energy, oam_transfer, coherence or z");
    if (has("scan.values")) sc.values = to_double_list("scan.values", get("scan.values"));
    sc.half_width = to_double("scan.half_width", get("scan.half_width"));
    sc.spacing = to_double("scan.spacing", get("scan.spacing"));
    if (!(sc.spacing > 0.0) || !(sc.half_width >= 0.0))
        throw ConfigError("scan.spacing", "spacing must be positive and half_width non-negative");
    if (has("scan.channels")) sc.channels = to_state_list("scan.channels", get("scan.channels"));
    else sc.channels = {t.final};
    sc.scattering = to_bool("scan.scattering", get("scan.scattering"));
    sc.absorption = to_bool("scan.absorption", get("scan.absorption"));
    sc.m_range = as_int("scan.m_range", get("scan.m_range"));
    rc.out_dir = trim(get("output.dir"));
    if (rc.out_dir.empty()) throw ConfigError("output.dir", "must not be empty");

    if (has("photon.mean_omega")) {
        const std::string mo = trim(get("photon.mean_omega"));
        if (mo == "resonance") {
            rc.mean_omega_at_resonance = true;
            try {
                ph = with_mean_energy(ph, resonance_energy(t, cm.mean_pz));
            } catch (const DomainError& e) {
                throw ConfigError("photon.mean_omega", e.what());
            }
        } else {
            const double w = to_double("photon.mean_omega", mo);
            const double s = units::nm_to_inv_ev(ph.sigma_perp);
            const double q = 2.0 * ph.n_gamma + std::abs(ph.l_gamma) + 1.0;
            if (!(w * w > q / (s * s))) throw ConfigError("photon.mean_omega", "below the transverse momentum spread");
            ph.mean_kz = std::sqrt(w * w - q / (s * s));
        }
    }

    // physics-level validation, reported against the collision sections
    CollisionConfig probe = rc.collision;
    if (probe.numerics.workers == 0) probe.numerics.workers = 1;
    try {
        validate(probe);
    } catch (const DomainError& e) {
        throw ConfigError("collision", e.what());
    } catch (const CapabilityError& e) {
        throw ConfigError("collision", e.what());
    }
    return rc;
}

}  // namespace vortex
