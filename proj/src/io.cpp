#include "vortexlab/io.hpp"

#include <cstdio>
#include <fstream>

#include "vortexlab/errors.hpp"

namespace vortex::io {

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12e", v);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

std::string label(const BoundState& s) { return std::to_string(s.n) + std::to_string(s.l) + "m" + std::to_string(s.m); }

}  // namespace

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    std::ofstream out = open_out(path);
    for (size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
    for (const auto& r : rows) {
        if (r.size() != header.size()) throw std::logic_error("csv row width differs from header");
        for (size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << format_number(r[i]);
        out << '\n';
    }
}

void write_json(const std::string& path, const nlohmann::json& j) {
    std::ofstream out = open_out(path);
    out << j.dump(2) << '\n';
}

void write_scan_csv(const std::string& path, const ScanResult& scan) {
    std::vector<std::string> header{scan.parameter, "luminosity_nm^-2"};
    if (scan.rows.empty()) throw DomainError("empty scan");
    const ScanRow& first = scan.rows.front();
    for (const ChannelPoint& c : first.channels) {
        const std::string l = label(c.final);
        header.push_back("P_" + l);
        header.push_back("P_err_" + l);
        header.push_back("sigma_" + l + "_barn");
        header.push_back("cm_ell_" + l);
    }
    if (first.has_scattering) {
        header.push_back("P_scatt");
        header.push_back("P_scatt_err");
        header.push_back("sigma_scatt_barn");
    }
    std::vector<std::vector<double>> rows;
    for (const ScanRow& r : scan.rows) {
        std::vector<double> v{r.parameter, r.luminosity};
        for (const ChannelPoint& c : r.channels) {
            v.push_back(c.probability);
            v.push_back(c.error);
            v.push_back(c.cross_section);
            v.push_back(c.cm_ell);
        }
        if (r.has_scattering) {
            v.push_back(r.scattering);
            v.push_back(r.scattering_error);
            v.push_back(r.scattering_cross_section);
        }
        rows.push_back(std::move(v));
    }
    write_csv(path, header, rows);
}

void write_grid_csv(const std::string& path, const EvolvedStateGrid& g, const Eigen::ArrayXd& density) {
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < g.n_pperp(); ++i)
        for (int j = 0; j < g.n_phi(); ++j)
            for (int k = 0; k < g.n_pz(); ++k) {
                const int idx = (i * g.n_phi() + j) * g.n_pz() + k;
                const cplx a = g.amp[idx];
                rows.push_back({g.p_perp[i], g.phi[j], g.p_z[k], a.real(), a.imag(), density[idx]});
            }
    write_csv(path, {"p_perp_ev", "phi_f_rad", "p_z_ev", "re", "im", "density"}, rows);
}

void write_oam_csv(const std::string& path, const OamSpectrum& s) {
    std::vector<std::vector<double>> rows;
    for (size_t i = 0; i < s.ell.size(); ++i) rows.push_back({double(s.ell[i]), s.probability[i]});
    write_csv(path, {"ell", "probability"}, rows);
}

std::vector<std::string> collect_warnings(const ScanResult& scan) {
    std::vector<std::string> out;
    for (const ScanRow& r : scan.rows)
        for (const std::string& w : r.warnings) out.push_back(format_number(r.parameter) + ": " + w);
    return out;
}

}  // namespace vortex::io
