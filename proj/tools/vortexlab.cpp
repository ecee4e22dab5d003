#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vortexlab/config.hpp"
#include "vortexlab/errors.hpp"
#include "vortexlab/io.hpp"
#include "vortexlab/scans.hpp"

using namespace vortex;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const char* kVersion = "1.0.0";

struct Common {
    std::string config;
    std::vector<std::string> sets;
    int workers = 0;
    std::string out;
};

struct Run {
    RunConfig rc;
    fs::path dir;
    json meta;
    std::chrono::steady_clock::time_point start;
};

int resolve_workers(int flag, int from_config) {
    if (flag > 0) return flag;
    if (from_config > 0) return from_config;
    if (const char* env = std::getenv("VORTEXLAB_WORKERS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

Run prepare(const std::string& command, const Common& c) {
    if (c.config.empty()) throw ConfigError("--config", "a configuration file is required");
    ConfigMap map = read_config_file(c.config);
    apply_overrides(map, c.sets);
    Run r;
    r.rc = build_run_config(map);
    r.rc.collision.numerics.workers = resolve_workers(c.workers, r.rc.collision.numerics.workers);
    r.dir = c.out.empty() ? fs::path(r.rc.out_dir) : fs::path(c.out);
    fs::create_directories(r.dir);
    r.start = std::chrono::steady_clock::now();
    r.meta["command"] = command;
    r.meta["version"] = kVersion;
    r.meta["config"] = r.rc.entries;
    r.meta["config_ini"] = to_ini(r.rc.entries);
    r.meta["seed"] = r.rc.collision.numerics.seed;
    r.meta["gamma_reg_ev"] = r.rc.collision.numerics.gamma_reg;
    r.meta["photon_mean_kz_ev"] = r.rc.collision.photon.mean_kz;
    r.meta["workers"] = r.rc.collision.numerics.workers;
    r.meta["units"] = {{"energy", "eV"}, {"length", "nm"}, {"cross_section", "barn"}, {"luminosity", "1/nm^2"}};
    r.meta["files"] = json::array();
    r.meta["warnings"] = json::array();
    return r;
}

void finish(Run& r) {
    r.meta["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - r.start).count();
    io::write_json((r.dir / "meta.json").string(), r.meta);
    for (const auto& w : r.meta["warnings"]) std::cerr << "warning: " << w.get<std::string>() << '\n';
}

void add_file(Run& r, const std::string& name) { r.meta["files"].push_back(name); }

void add_warnings(Run& r, const std::vector<std::string>& w) {
    for (const auto& s : w) r.meta["warnings"].push_back(s);
}

std::vector<int> as_ints(const std::vector<double>& v, const char* what) {
    std::vector<int> out;
    for (double x : v) {
        if (x != std::round(x)) throw ConfigError("scan.values", std::string(what) + " must be integers");
        out.push_back(static_cast<int>(x));
    }
    return out;
}

std::vector<double> energy_grid(const RunConfig& rc, const BoundState& f) {
    if (!rc.scan.values.empty()) return rc.scan.values;
    TransitionSpec t = rc.collision.transition;
    t.final = f;
    return resonance_grid(resonance_energy(t, rc.collision.cm.mean_pz), photon_bandwidth(rc.collision.photon),
                          rc.scan.half_width, rc.scan.spacing);
}

std::string num_tag(double b) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", b);
    return buf;
}

void cmd_absorb(Run& r) {
    const RunConfig& rc = r.rc;
    const CollisionConfig& cfg = rc.collision;
    if (rc.scan.kind == "energy") {
        EnergyScanOptions opt;
        opt.scattering = rc.scan.scattering;
        opt.absorption = rc.scan.absorption;
        const ScanResult s = energy_scan(cfg, energy_grid(rc, rc.scan.channels.front()), rc.scan.channels, opt);
        io::write_scan_csv((r.dir / "energy_scan.csv").string(), s);
        add_file(r, "energy_scan.csv");
        add_warnings(r, io::collect_warnings(s));
    } else if (rc.scan.kind == "oam_transfer") {
        const std::vector<int> ells =
            rc.scan.values.empty() ? std::vector<int>{0, 1, 2, 3, 4} : as_ints(rc.scan.values, "l_gamma values");
        const ScanResult s = oam_transfer_scan(cfg, ells);
        io::write_scan_csv((r.dir / "oam_transfer.csv").string(), s);
        add_file(r, "oam_transfer.csv");
        add_warnings(r, io::collect_warnings(s));
    } else if (rc.scan.kind == "coherence") {
        if (rc.scan.values.empty()) throw ConfigError("scan.values", "coherence scan needs sigma_cm values (nm)");
        const ScanResult s = coherence_scan(cfg, rc.scan.values);
        io::write_scan_csv((r.dir / "coherence_scan.csv").string(), s);
        add_file(r, "coherence_scan.csv");
        add_warnings(r, io::collect_warnings(s));
    } else {
        std::vector<int> zs = rc.scan.values.empty() ? std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}
                                                     : as_ints(rc.scan.values, "Z values");
        const std::vector<ZScanRow> rows = z_scan(cfg, zs);
        std::vector<std::vector<double>> t;
        for (const ZScanRow& z : rows)
            t.push_back({double(z.Z), z.resonance, z.luminosity, z.p_full, z.p_dipole, z.sigma_full, z.sigma_dipole});
        io::write_csv((r.dir / "z_scan.csv").string(),
                      {"Z", "resonance_ev", "luminosity_nm^-2", "P_full", "P_dipole", "sigma_full_barn",
                       "sigma_dipole_barn"},
                      t);
        add_file(r, "z_scan.csv");
    }
}

void cmd_scatter(Run& r) {
    const RunConfig& rc = r.rc;
    EnergyScanOptions opt;
    opt.scattering = true;
    opt.absorption = rc.scan.absorption;
    const ScanResult s = energy_scan(rc.collision, energy_grid(rc, rc.scan.channels.front()), rc.scan.channels, opt);
    io::write_scan_csv((r.dir / "scatter_scan.csv").string(), s);
    add_file(r, "scatter_scan.csv");
    add_warnings(r, io::collect_warnings(s));
}

void cmd_oamdist(Run& r) {
    const CollisionConfig& cfg = r.rc.collision;
    const std::vector<double> bs = r.rc.scan.values.empty() ? std::vector<double>{cfg.geometry.b} : r.rc.scan.values;
    const int l0 = l0_of(cfg);
    std::vector<std::vector<double>> dist, stats;
    for (double b : bs) {
        int mr = r.rc.scan.m_range;
        if (mr == 0) mr = static_cast<int>(std::ceil(3.0 * (1.0 + b / cfg.cm.sigma_perp))) + 6;
        const OamEstimate e = oam_distribution_estimate(l0, b, cfg.cm.sigma_perp, cfg.photon.sigma_perp, mr);
        for (size_t i = 0; i < e.ell.size(); ++i) dist.push_back({b, double(e.ell[i]), e.probability[i], e.asymptotic[i]});
        stats.push_back({b, double(l0), e.mean, e.stddev});
    }
    io::write_csv((r.dir / "oamdist.csv").string(), {"b_nm", "ell", "probability", "asymptotic_probability"}, dist);
    io::write_csv((r.dir / "oamdist_stats.csv").string(), {"b_nm", "l0", "mean_ell", "stddev_ell"}, stats);
    add_file(r, "oamdist.csv");
    add_file(r, "oamdist_stats.csv");
}

void cmd_kickmap(Run& r) {
    const CollisionConfig& cfg = r.rc.collision;
    const std::vector<double> bs = r.rc.scan.values.empty() ? std::vector<double>{0.0, 10.0, 50.0} : r.rc.scan.values;
    const std::vector<KickMapEntry> maps = kick_map(cfg, bs);
    std::vector<std::vector<double>> oam;
    json stats = json::array();
    for (const KickMapEntry& e : maps) {
        const std::string name = "density_b" + num_tag(e.b) + "nm.csv";
        io::write_grid_csv((r.dir / name).string(), e.grid, e.density);
        add_file(r, name);
        for (size_t i = 0; i < e.oam.ell.size(); ++i) oam.push_back({e.b, double(e.oam.ell[i]), e.oam.probability[i]});
        stats.push_back({{"b_nm", e.b}, {"mean_ell", e.oam.mean}, {"stddev_ell", e.oam.stddev}});
    }
    io::write_csv((r.dir / "oam.csv").string(), {"b_nm", "ell", "probability"}, oam);
    add_file(r, "oam.csv");
    r.meta["oam_stats"] = stats;
}

void cmd_spectrum(Run& r) {
    const PhotonPacketSpec& ph = r.rc.collision.photon;
    std::vector<double> e = r.rc.scan.values;
    if (e.empty()) {
        const double w = mean_photon_energy(ph), bw = photon_bandwidth(ph);
        const double tr = units::hbar_c / ph.sigma_perp;
        const double lo = std::max(1e-6, w - 8.0 * bw - tr), hi = w + 8.0 * bw + 4.0 * tr * tr / w + tr;
        for (int i = 0; i <= 400; ++i) e.push_back(lo + (hi - lo) * i / 400.0);
    }
    const SpectrumTable s = photon_spectrum(ph, Eigen::Map<const Eigen::ArrayXd>(e.data(), e.size()));
    std::vector<std::vector<double>> rows;
    for (Eigen::Index i = 0; i < s.energies.size(); ++i) rows.push_back({s.energies[i], s.density[i]});
    io::write_csv((r.dir / "spectrum.csv").string(), {"energy_ev", "density"}, rows);
    add_file(r, "spectrum.csv");
}

void cmd_luminosity(Run& r) {
    const CollisionConfig& cfg = r.rc.collision;
    const std::vector<double> bs = r.rc.scan.values.empty() ? std::vector<double>{cfg.geometry.b} : r.rc.scan.values;
    std::vector<std::vector<double>> rows;
    for (double b : bs) {
        CollisionGeometry g = cfg.geometry;
        g.b = b;
        rows.push_back({b, luminosity(cfg.cm, cfg.photon, g)});
    }
    io::write_csv((r.dir / "luminosity.csv").string(), {"b_nm", "luminosity_nm^-2"}, rows);
    add_file(r, "luminosity.csv");
}

int cmd_validate(const Common& c) {
    if (c.config.empty()) throw ConfigError("--config", "a configuration file is required");
    ConfigMap map = read_config_file(c.config);
    apply_overrides(map, c.sets);
    const RunConfig rc = build_run_config(map);
    const CollisionConfig& cfg = rc.collision;
    const TransitionSpec& t = cfg.transition;
    const double w = mean_photon_energy(cfg.photon);
    const double parax = units::hbar_c / (cfg.photon.sigma_perp * w);
    std::printf("schema: ok\n");
    std::printf("transition: %s -> %s\n", to_string(t.initial).c_str(), to_string(t.final).c_str());
    std::printf("resonance_ev: %.6f\n", resonance_energy(t, cfg.cm.mean_pz));
    std::printf("mean_photon_energy_ev: %.6f\n", w);
    std::printf("bandwidth_ev: %.6f\n", photon_bandwidth(cfg.photon));
    std::printf("paraxiality: %.4f (%s)\n", parax, parax > 0.1 ? "nonparaxial" : "paraxial");
    std::printf("mass_ratio_M_over_m: %.3f\n", t.atom.M() / t.atom.m());
    std::printf("l0: %d\n", l0_of(cfg));
    std::printf("gamma_reg_ev: %.6e\n", cfg.numerics.gamma_reg);
    return 0;
}

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--config", c.config, "Configuration file (INI or meta.json)");
    sub->add_option("--set", c.sets, "Override, section.key=value (repeatable)");
    sub->add_option("--workers", c.workers, "Worker threads (default: VORTEXLAB_WORKERS or all cores)");
    sub->add_option("--out", c.out, "Output directory (default: output.dir)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Twisted-photon absorption and scattering by atomic wave packets"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    Common c;
    struct Entry {
        const char* name;
        const char* help;
        void (*fn)(Run&);
    };
    const std::vector<Entry> entries = {
        {"absorb", "Absorption scans (scan.kind = energy, oam_transfer, coherence, z)", cmd_absorb},
        {"scatter", "Scattering probability versus photon energy", cmd_scatter},
        {"oamdist", "Analytic estimate of the final CM OAM distribution", cmd_oamdist},
        {"kickmap", "Transverse density maps and OAM spectra of the evolved CM state", cmd_kickmap},
        {"spectrum", "Photon energy spectrum", cmd_spectrum},
        {"luminosity", "Luminosity versus impact parameter", cmd_luminosity},
    };
    std::vector<CLI::App*> subs;
    for (const Entry& e : entries) {
        CLI::App* s = app.add_subcommand(e.name, e.help);
        add_common(s, c);
        subs.push_back(s);
    }
    CLI::App* val = app.add_subcommand("validate", "Check a configuration without running integrals");
    add_common(val, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (val->parsed()) return cmd_validate(c);
        for (size_t i = 0; i < entries.size(); ++i) {
            if (!subs[i]->parsed()) continue;
            Run r = prepare(entries[i].name, c);
            entries[i].fn(r);
            finish(r);
            return 0;
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 2;
    } catch (const CapabilityError& e) {
        std::cerr << "unsupported request: " << e.what() << '\n';
        return 2;
    } catch (const NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << " (achieved tolerance " << e.achieved_tolerance << ")\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
