#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "vortexlab/errors.hpp"
#include "vortexlab/io.hpp"

using namespace vortex;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path d = fs::temp_directory_path() / "vortexlab_test_io";
    fs::create_directories(d);
    return d / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("number formatting") {
    CHECK(io::format_number(1.0) == "1.000000000000e+00");
    CHECK(io::format_number(-2.5e-8) == "-2.500000000000e-08");
    CHECK(io::format_number(0.0) == "0.000000000000e+00");
    CHECK(std::stod(io::format_number(0.1)) == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("plain CSV") {
    const fs::path p = scratch("plain.csv");
    io::write_csv(p.string(), {"a_ev", "b_nm"}, {{1.0, 2.0}, {3.0, -4.0}});
    CHECK(slurp(p) ==
          "a_ev,b_nm\n1.000000000000e+00,2.000000000000e+00\n3.000000000000e+00,-4.000000000000e+00\n");
    CHECK_THROWS(io::write_csv(p.string(), {"a"}, {{1.0, 2.0}}));
    CHECK_THROWS(io::write_csv((scratch("nodir") / "x" / "y.csv").string(), {"a"}, {}));
}

TEST_CASE("scan CSV columns") {
    ScanResult s;
    s.parameter = "omega_ev";
    for (int i = 0; i < 2; ++i) {
        ScanRow r;
        r.parameter = 10.0 + i;
        r.luminosity = 1e-6;
        ChannelPoint a;
        a.final = {2, 1, 1};
        a.probability = 1e-8;
        a.error = 1e-11;
        a.cross_section = 1e9;
        a.cm_ell = 1;
        r.channels = {a};
        r.has_scattering = true;
        r.scattering = 2e-8;
        r.scattering_error = 1e-10;
        r.scattering_cross_section = 2e9;
        r.warnings = {"w" + std::to_string(i)};
        s.rows.push_back(r);
    }
    const fs::path p = scratch("scan.csv");
    io::write_scan_csv(p.string(), s);
    std::istringstream in(slurp(p));
    std::string header, line;
    std::getline(in, header);
    CHECK(header ==
          "omega_ev,luminosity_nm^-2,P_21m1,P_err_21m1,sigma_21m1_barn,cm_ell_21m1,P_scatt,P_scatt_err,sigma_scatt_barn");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == 8);
    }
    CHECK(rows == 2);
    const auto w = io::collect_warnings(s);
    REQUIRE(w.size() == 2);
    CHECK(w[1] == "1.100000000000e+01: w1");
    CHECK_THROWS_AS(io::write_scan_csv(p.string(), ScanResult{}), DomainError);
}

TEST_CASE("grid, OAM and JSON writers") {
    EvolvedStateGrid g;
    g.p_perp = Eigen::ArrayXd::LinSpaced(2, 1.0, 2.0);
    g.w_perp = Eigen::ArrayXd::Ones(2);
    g.phi = Eigen::ArrayXd::LinSpaced(3, 0.0, 2.0);
    g.p_z = Eigen::ArrayXd::Constant(1, 5.0);
    g.w_z = Eigen::ArrayXd::Ones(1);
    g.amp = Eigen::ArrayXcd::Constant(6, cplx(1.0, -1.0));
    const fs::path p = scratch("grid.csv");
    io::write_grid_csv(p.string(), g, g.amp.abs2());
    const std::string text = slurp(p);
    CHECK(text.rfind("p_perp_ev,phi_f_rad,p_z_ev,re,im,density\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 7);
    CHECK(text.find("-1.000000000000e+00,2.000000000000e+00\n") != std::string::npos);

    OamSpectrum s;
    s.ell = {0, 1};
    s.probability = {0.25, 0.75};
    io::write_oam_csv(scratch("oam.csv").string(), s);
    CHECK(slurp(scratch("oam.csv")) ==
          "ell,probability\n0.000000000000e+00,2.500000000000e-01\n1.000000000000e+00,7.500000000000e-01\n");

    nlohmann::json j = {{"seed", 7}, {"units", {{"energy", "eV"}}}};
    io::write_json(scratch("m.json").string(), j);
    CHECK(nlohmann::json::parse(slurp(scratch("m.json"))) == j);
}
