#include "vortexlab/scans.hpp"

#include <algorithm>
#include <cmath>

#include "vortexlab/errors.hpp"

namespace vortex {

double resonance_energy(const TransitionSpec& t, double mean_pz) {
    const double de = bound_energy(t.atom, t.final.n) - bound_energy(t.atom, t.initial.n);
    if (!(de > 0.0)) throw DomainError("resonance_energy: final level must lie above the initial one");
    const double mt = t.atom.total_mass();
    const double a = 1.0 - mean_pz / mt;
    return 2.0 * de / (a + std::sqrt(a * a - 2.0 * de / mt));
}

double photon_bandwidth(const PhotonPacketSpec& ph) {
    if (!(ph.sigma_z > 0.0)) throw DomainError("photon sigma_z must be positive");
    return units::hbar_c / ph.sigma_z;
}

PhotonPacketSpec with_mean_energy(PhotonPacketSpec ph, double omega) {
    const double s = units::nm_to_inv_ev(ph.sigma_perp);
    const double q = 2.0 * ph.n_gamma + std::abs(ph.l_gamma) + 1.0;
    const double kz2 = omega * omega - q / (s * s);
    if (!(kz2 > 0.0)) throw DomainError("mean photon energy below the transverse momentum spread");
    ph.mean_kz = std::sqrt(kz2);
    return ph;
}

std::vector<double> resonance_grid(double center, double bandwidth, double half_width, double spacing) {
    if (!(bandwidth > 0.0) || !(spacing > 0.0) || !(half_width >= 0.0))
        throw DomainError("resonance_grid: bandwidth, spacing and half width must be positive");
    const int n = static_cast<int>(std::floor(half_width / spacing + 1e-9));
    std::vector<double> out;
    for (int i = -n; i <= n; ++i) out.push_back(center + i * spacing * bandwidth);
    return out;
}

namespace {

void require_monotone(const std::vector<double>& v, const char* what) {
    for (size_t i = 1; i < v.size(); ++i)
        if (!(v[i] > v[i - 1])) throw DomainError(std::string(what) + " must be strictly increasing");
    if (v.empty()) throw DomainError(std::string(what) + " must not be empty");
}

ChannelPoint channel_point(const CollisionConfig& cfg, double lum) {
    ChannelPoint c;
    c.final = cfg.transition.final;
    const ProbabilityResult p = absorption_probability(cfg);
    c.probability = p.value;
    c.error = p.error;
    c.cross_section = cross_section(p.value, lum);
    c.cm_ell = l0_of(cfg);
    return c;
}

void append(std::vector<std::string>& to, const std::vector<std::string>& from, const std::string& tag) {
    for (const auto& w : from) to.push_back(tag + ": " + w);
}

}  // namespace

ScanResult energy_scan(const CollisionConfig& cfg, const std::vector<double>& omegas,
                       const std::vector<BoundState>& channels, const EnergyScanOptions& opt) {
    validate(cfg);
    require_monotone(omegas, "photon energy grid");
    if (opt.absorption && channels.empty()) throw DomainError("energy_scan needs at least one channel");
    ScanResult out;
    out.parameter = "omega_ev";
    for (double w : omegas) {
        CollisionConfig c = cfg;
        c.photon = with_mean_energy(cfg.photon, w);
        ScanRow row;
        row.parameter = w;
        row.luminosity = luminosity(c.cm, c.photon, c.geometry);
        if (opt.absorption)
            for (const BoundState& f : channels) {
                CollisionConfig cc = c;
                cc.transition.final = f;
                const ProbabilityResult p = absorption_probability(cc);
                ChannelPoint pt;
                pt.final = f;
                pt.probability = p.value;
                pt.error = p.error;
                pt.cross_section = cross_section(p.value, row.luminosity);
                pt.cm_ell = l0_of(cc);
                row.channels.push_back(pt);
                append(row.warnings, p.warnings, to_string(f));
            }
        if (opt.scattering) {
            CollisionConfig cs = c;
            cs.transition.final = cs.transition.initial;
            const ProbabilityResult p = scattering_probability(cs);
            row.has_scattering = true;
            row.scattering = p.value;
            row.scattering_error = p.error;
            row.scattering_cross_section = cross_section(p.value, row.luminosity);
            append(row.warnings, p.warnings, "scattering");
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

ScanResult oam_transfer_scan(const CollisionConfig& cfg, const std::vector<int>& ell_gamma) {
    validate(cfg);
    if (ell_gamma.empty()) throw DomainError("oam_transfer_scan needs at least one l_gamma");
    ScanResult out;
    out.parameter = "l_gamma";
    int prev = ell_gamma.front() - 1;
    for (int l : ell_gamma) {
        if (l <= prev) throw DomainError("l_gamma values must be strictly increasing");
        prev = l;
        CollisionConfig c = cfg;
        c.photon.l_gamma = l;
        c.photon = with_mean_energy(c.photon, mean_photon_energy(cfg.photon));
        ScanRow row;
        row.parameter = l;
        row.luminosity = luminosity(c.cm, c.photon, c.geometry);
        row.channels.push_back(channel_point(c, row.luminosity));
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::vector<KickMapEntry> kick_map(const CollisionConfig& cfg, const std::vector<double>& b_values) {
    validate(cfg);
    std::vector<KickMapEntry> out;
    for (double b : b_values) {
        CollisionConfig c = cfg;
        c.geometry.b = b;
        MeshSpec m = default_mesh(c);
        m.n_phi = std::max(64, m.n_phi);
        m.single_pz = true;
        m.pz_value = cfg.cm.mean_pz + cfg.photon.mean_kz;
        KickMapEntry e;
        e.b = b;
        e.grid = evolved_state_grid(c, m);
        e.density = e.grid.amp.abs2();
        const double mx = e.density.maxCoeff();
        if (!(mx > 0.0)) throw NumericError("kick map: the evolved state vanishes on the slice", 0.0);
        e.density /= mx;
        e.oam = oam_spectrum_of_state(e.grid);
        out.push_back(std::move(e));
    }
    return out;
}

ScanResult coherence_scan(const CollisionConfig& cfg, const std::vector<double>& sigma_cm) {
    validate(cfg);
    require_monotone(sigma_cm, "sigma_cm grid");
    ScanResult out;
    out.parameter = "sigma_cm_perp_nm";
    for (double s : sigma_cm) {
        CollisionConfig c = cfg;
        c.cm.sigma_perp = s;
        ScanRow row;
        row.parameter = s;
        row.luminosity = luminosity(c.cm, c.photon, c.geometry);
        const ProbabilityResult p = absorption_probability(c);
        ChannelPoint pt;
        pt.final = c.transition.final;
        pt.probability = p.value;
        pt.error = p.error;
        pt.cross_section = cross_section(p.value, row.luminosity);
        pt.cm_ell = l0_of(c);
        row.channels.push_back(pt);
        append(row.warnings, p.warnings, to_string(pt.final));
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::vector<ZScanRow> z_scan(const CollisionConfig& cfg, const std::vector<int>& Z_values) {
    std::vector<ZScanRow> out;
    for (int Z : Z_values) {
        CollisionConfig c = cfg;
        c.transition.atom.Z = Z;
        c.transition.atom.A = 2.0 * Z;
        c = with_consistent_mass(c);
        ZScanRow row;
        row.Z = Z;
        row.resonance = resonance_energy(c.transition, c.cm.mean_pz);
        c.photon = with_mean_energy(c.photon, row.resonance);
        validate(c);
        row.luminosity = luminosity(c.cm, c.photon, c.geometry);
        c.transition.dipole_mode = false;
        row.p_full = absorption_probability(c).value;
        c.transition.dipole_mode = true;
        row.p_dipole = absorption_probability(c).value;
        row.sigma_full = cross_section(row.p_full, row.luminosity);
        row.sigma_dipole = cross_section(row.p_dipole, row.luminosity);
        out.push_back(row);
    }
    return out;
}

std::vector<int> local_maxima(const std::vector<double>& y, double rel_floor) {
    std::vector<int> out;
    if (y.size() < 3) return out;
    const double mx = *std::max_element(y.begin(), y.end());
    for (size_t i = 1; i + 1 < y.size(); ++i)
        if (y[i] > y[i - 1] && y[i] > y[i + 1] && y[i] >= rel_floor * mx) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> local_extrema(const std::vector<double>& y) {
    std::vector<int> out;
    for (size_t i = 1; i + 1 < y.size(); ++i) {
        const double a = y[i] - y[i - 1], b = y[i + 1] - y[i];
        if ((a > 0.0 && b < 0.0) || (a < 0.0 && b > 0.0)) out.push_back(static_cast<int>(i));
    }
    return out;
}

}  // namespace vortex
