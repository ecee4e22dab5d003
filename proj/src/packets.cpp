#include "vortexlab/packets.hpp"

#include <algorithm>
#include <cmath>

#include "vortexlab/errors.hpp"
#include "vortexlab/quadrature.hpp"
#include "vortexlab/specfun.hpp"

namespace vortex {

using units::hbar_c;
using units::pi;
namespace sf = specfun;

void validate(const MassivePacketSpec& s) {
    if (!(s.sigma_perp > 0) || !(s.sigma_z > 0)) throw DomainError("massive packet: widths must be positive");
    if (!(s.mass > 0)) throw DomainError("massive packet: mass must be positive");
    if (s.k < 0 || s.n < 0) throw DomainError("massive packet: negative HG/LG index");
}

void validate(const PhotonPacketSpec& s) {
    if (!(s.sigma_perp > 0) || !(s.sigma_z > 0)) throw DomainError("photon packet: widths must be positive");
    if (std::abs(s.helicity) != 1) throw DomainError("photon packet: helicity must be +1 or -1");
    if (s.k_gamma < 0 || s.n_gamma < 0) throw DomainError("photon packet: negative HG/LG index");
}

HgMomentum::HgMomentum(int k_, double sigma_, double mean_) : k(k_), sigma(sigma_), mean(mean_) {
    norm = std::exp(0.5 * (std::log(2 * pi * sigma) - k * std::log(2.0) - sf::log_factorial(k) -
                           0.5 * std::log(pi)));
}

double HgMomentum::operator()(double p) const {
    const double x = sigma * (p - mean);
    return norm * sf::hermite(k, x) * std::exp(-0.5 * x * x);
}

LgMomentum::LgMomentum(int n_, int l_, double sigma_) : n(n_), l(l_), sigma(sigma_) {
    const int al = std::abs(l);
    norm = 2.0 * std::sqrt(pi * std::exp(sf::log_factorial(n) - sf::log_factorial(n + al))) * sigma;
    // (-1)^n i^{-|l|}
    const cplx i_pow[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    phase = (n % 2 ? -1.0 : 1.0) * i_pow[al % 4];
}

double LgMomentum::radial(double p) const {
    const int al = std::abs(l);
    const double x = p * sigma;
    const double x2 = x * x;
    return norm * std::pow(x, al) * std::exp(-0.5 * x2) * sf::assoc_laguerre(n, al, x2);
}

MassiveMomentumEval::MassiveMomentumEval(const MassivePacketSpec& s)
    : spec(s),
      hg(s.k, units::nm_to_inv_ev(s.sigma_z), s.mean_pz),
      lg(s.n, s.l, units::nm_to_inv_ev(s.sigma_perp)) {}

cplx MassiveMomentumEval::operator()(const Vector3d& P) const {
    const double pp = std::hypot(P.x(), P.y());
    const double phi = std::atan2(P.y(), P.x());
    return hg(P.z()) * lg(pp, phi);
}

cplx MassiveMomentumEval::reduced(double p_perp, double p_z) const {
    return hg(p_z) * lg.phase * lg.radial(p_perp);
}

PhotonMomentumEval::PhotonMomentumEval(const PhotonPacketSpec& s)
    : spec(s),
      hg(s.k_gamma, units::nm_to_inv_ev(s.sigma_z), s.mean_kz),
      lg(s.n_gamma, s.l_gamma, units::nm_to_inv_ev(s.sigma_perp)) {}

cplx PhotonMomentumEval::operator()(const Vector3d& k) const {
    const double kp = std::hypot(k.x(), k.y());
    const double phi = std::atan2(k.y(), k.x());
    return hg(k.z()) * lg.phase * lg.radial(kp) * std::polar(1.0, (spec.l_gamma + spec.helicity) * phi);
}

cplx PhotonMomentumEval::reduced(double k_perp, double k_z) const {
    return hg(k_z) * lg.phase * lg.radial(k_perp);
}

cplx massive_packet_momentum(const MassivePacketSpec& spec, const Vector3d& P, double t) {
    validate(spec);
    const MassiveMomentumEval ev(spec);
    const double t_ev = units::nm_to_inv_ev(t);
    return ev(P) * std::polar(1.0, -t_ev * P.squaredNorm() / (2 * spec.mass));
}

cplx massive_packet_position(const MassivePacketSpec& spec, const Vector3d& r, double t) {
    validate(spec);
    const double mu = spec.mass / hbar_c;  // 1/nm
    const double p = spec.mean_pz / hbar_c;
    const double u = spec.mean_pz / spec.mass;
    const cplx I{0, 1};

    const double tdz = mu * spec.sigma_z * spec.sigma_z;
    const double sz = spec.sigma_z * std::sqrt(1 + t * t / (tdz * tdz));
    const double zc = r.z() - u * t;
    const double k = spec.k;
    const cplx i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const double hg_norm = std::exp(-0.5 * (k * std::log(2.0) + sf::log_factorial(spec.k) + 0.5 * std::log(pi) +
                                            std::log(sz)));
    const cplx hg = i_pow[spec.k % 4] * hg_norm * sf::hermite(spec.k, zc / sz) *
                    std::exp(-I * t * p * p / (2 * mu) + I * p * r.z() - I * (k + 0.5) * std::atan(t / tdz) -
                             zc * zc / (2 * sz * sz) * (1.0 - I * t / tdz));

    const int al = std::abs(spec.l);
    const double tdp = mu * spec.sigma_perp * spec.sigma_perp;
    const double sp = spec.sigma_perp * std::sqrt(1 + t * t / (tdp * tdp));
    const double rho = std::hypot(r.x(), r.y());
    const double phi = std::atan2(r.y(), r.x());
    const double x = rho / sp;
    const double lg_norm =
        std::exp(0.5 * (sf::log_factorial(spec.n) - sf::log_factorial(spec.n + al)) - 0.5 * std::log(pi)) / sp;
    const cplx lg = lg_norm * std::pow(x, al) * sf::assoc_laguerre(spec.n, al, x * x) *
                    std::exp(I * double(spec.l) * phi - I * double(2 * spec.n + al + 1) * std::atan(t / tdp) -
                             x * x / 2.0 * (1.0 - I * t / tdp));
    return hg * lg;
}

cplx photon_packet_momentum(const PhotonPacketSpec& spec, const Vector3d& k) {
    validate(spec);
    return PhotonMomentumEval(spec)(k);
}

double hg_position_density(int k, double sigma, double z) {
    const double x = z / sigma;
    const double h = sf::hermite(k, x);
    return h * h * std::exp(-x * x - k * std::log(2.0) - sf::log_factorial(k) - 0.5 * std::log(pi)) / sigma;
}

double lg_position_density(int n, int l, double sigma, double rho) {
    const int al = std::abs(l);
    const double x2 = rho * rho / (sigma * sigma);
    const double L = sf::assoc_laguerre(n, al, x2);
    return std::exp(sf::log_factorial(n) - sf::log_factorial(n + al) - x2) / pi * std::pow(x2, al) * L * L /
           (sigma * sigma);
}

double mean_photon_energy(const PhotonPacketSpec& spec) {
    validate(spec);
    const double s = units::nm_to_inv_ev(spec.sigma_perp);
    const double q = 2.0 * spec.n_gamma + std::abs(spec.l_gamma) + 1.0;
    return std::sqrt(spec.mean_kz * spec.mean_kz + q / (s * s));
}

SpectrumTable photon_spectrum(const PhotonPacketSpec& spec, const Eigen::ArrayXd& energies) {
    validate(spec);
    if (energies.size() == 0) throw DomainError("photon_spectrum: empty energy grid");
    for (Eigen::Index i = 1; i < energies.size(); ++i)
        if (!(energies[i] > energies[i - 1])) throw DomainError("photon_spectrum: grid must be increasing");
    const PhotonMomentumEval ev(spec);
    const double s = units::nm_to_inv_ev(spec.sigma_perp);
    const double q = 2.0 * spec.n_gamma + std::abs(spec.l_gamma) + 2.0;
    SpectrumTable out{energies, Eigen::ArrayXd::Zero(energies.size())};
    for (Eigen::Index i = 0; i < energies.size(); ++i) {
        const double w = energies[i];
        if (w <= 0) continue;
        const double cut = std::min(pi, 12.0 * std::sqrt(q) / (s * w));
        const quad::Rule r = quad::composite_legendre(16, 48, 0.0, cut);
        double acc = 0.0;
        for (Eigen::Index j = 0; j < r.x.size(); ++j) {
            const double th = r.x[j];
            const double a = ev.hg(w * std::cos(th)) * ev.lg.radial(w * std::sin(th));
            acc += r.w[j] * std::sin(th) * a * a;
        }
        out.density[i] = 2 * pi * w * w * acc;
    }
    const double mx = out.density.maxCoeff();
    if (mx > 0) out.density /= mx;
    return out;
}

std::pair<double, double> emittance(const MassivePacketSpec& spec) {
    validate(spec);
    const double lc = hbar_c / spec.mass;
    const double q = 2.0 * spec.n + std::abs(spec.l) + 1.0;
    return {lc * (spec.k + 0.5), lc * std::sqrt(q * q - 1.0)};
}

double rms_width_at(const MassivePacketSpec& spec, double z_mean) {
    validate(spec);
    if (!(spec.mean_pz > 0)) throw DomainError("rms_width_at: mean_pz must be positive");
    if (z_mean < 0) throw DomainError("rms_width_at: z_mean must be non-negative");
    const double q = 2.0 * spec.n + std::abs(spec.l) + 1.0;
    const double rho0 = spec.sigma_perp * std::sqrt(q);
    const double zr = spec.mean_pz / hbar_c * spec.sigma_perp * spec.sigma_perp;
    if (z_mean > 10.0 * zr) return z_mean / rho0 * (hbar_c / spec.mean_pz) * q;
    return rho0 * std::sqrt(1.0 + z_mean * z_mean / (zr * zr));
}

namespace {

// density without its gaussian factor exp(-rho^2/sigma^2)
double lg_density_poly(int n, int l, double sigma, double rho2) {
    const int al = std::abs(l);
    const double x2 = rho2 / (sigma * sigma);
    const double L = sf::assoc_laguerre(n, al, x2);
    return std::exp(sf::log_factorial(n) - sf::log_factorial(n + al)) / pi * std::pow(x2, al) * L * L /
           (sigma * sigma);
}

}  // namespace

double luminosity(const MassivePacketSpec& cm, const PhotonPacketSpec& ph, const CollisionGeometry& g,
                  double rel_tol) {
    validate(cm);
    validate(ph);
    if (g.b < 0) throw DomainError("luminosity: negative impact parameter");
    const double u = cm.mean_pz / cm.mass;
    const double v = std::abs(u - 1.0);
    const double mu = cm.mass / hbar_c;
    const double tdz = mu * cm.sigma_z * cm.sigma_z;
    const double tdp = mu * cm.sigma_perp * cm.sigma_perp;
    const double tdg = ph.mean_kz / hbar_c * ph.sigma_perp * ph.sigma_perp;
    const Vector3d bvec(g.b * std::cos(g.phi_b), g.b * std::sin(g.phi_b), 0.0);

    const int ngh = std::min(150, 40 + 4 * (cm.n + ph.n_gamma) + std::abs(cm.l) + std::abs(ph.l_gamma));
    const quad::Rule& gh = quad::gauss_hermite(ngh);

    auto transverse = [&](double t) {
        const double s1 = cm.sigma_perp * std::sqrt(1 + t * t / (tdp * tdp));
        const double s2 = ph.sigma_perp * std::sqrt(1 + t * t / (tdg * tdg));
        const double s = 1.0 / std::sqrt(1 / (s1 * s1) + 1 / (s2 * s2));
        const Vector3d c = bvec * (s * s / (s2 * s2));
        const double pref = std::exp(-g.b * g.b / (s1 * s1 + s2 * s2)) * s * s;
        if (pref == 0.0) return 0.0;
        double acc = 0.0;
        for (int i = 0; i < ngh; ++i)
            for (int j = 0; j < ngh; ++j) {
                const Vector3d rho = c + s * Vector3d(gh.x[i], gh.x[j], 0.0);
                acc += gh.w[i] * gh.w[j] * lg_density_poly(cm.n, cm.l, s1, rho.squaredNorm()) *
                       lg_density_poly(ph.n_gamma, ph.l_gamma, s2, (rho - bvec).squaredNorm());
            }
        return pref * acc;
    };

    const double wg = ph.sigma_z * std::sqrt(2.0 * ph.k_gamma + 1.0);
    auto longitudinal = [&](double t) {
        const double sz = cm.sigma_z * std::sqrt(1 + t * t / (tdz * tdz));
        const double wc = sz * std::sqrt(2.0 * cm.k + 1.0);
        const double zc = u * t, zg = t;
        const double lo = std::max(zc - 9 * wc, zg - 9 * wg);
        const double hi = std::min(zc + 9 * wc, zg + 9 * wg);
        if (hi <= lo) return 0.0;
        auto f = [&](double z) {
            return hg_position_density(cm.k, sz, z - zc) * hg_position_density(ph.k_gamma, ph.sigma_z, z - zg);
        };
        return quad::simpson(f, lo, hi, 0.1 * rel_tol, 0.0, 30);
    };

    double tmax = 9.0 * (wg + cm.sigma_z * std::sqrt(2.0 * cm.k + 1.0)) / v;
    for (int it = 0; it < 3; ++it) {
        const double sz = cm.sigma_z * std::sqrt(1 + tmax * tmax / (tdz * tdz));
        tmax = 9.0 * (wg + sz * std::sqrt(2.0 * cm.k + 1.0)) / v;
    }
    auto integrand = [&](double t) {
        const double z = longitudinal(t);
        return z == 0.0 ? 0.0 : z * transverse(t);
    };
    return v * quad::simpson(integrand, -tmax, tmax, rel_tol, 0.0, 30);
}

}  // namespace vortex
