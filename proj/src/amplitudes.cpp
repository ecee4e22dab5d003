#include "vortexlab/amplitudes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "detail.hpp"
#include "vortexlab/errors.hpp"
#include "vortexlab/kinematics.hpp"
#include "vortexlab/parallel.hpp"
#include "vortexlab/quadrature.hpp"
#include "vortexlab/specfun.hpp"

namespace vortex {

using namespace specfun;

using detail::AngleRange;

void validate(const CollisionConfig& cfg) {
    const TransitionSpec& t = cfg.transition;
    validate(t.atom);
    validate(t.initial);
    validate(t.final);
    validate(cfg.cm);
    validate(cfg.photon);
    const double mt = t.atom.total_mass();
    if (std::abs(cfg.cm.mass - mt) > 1e-12 * mt)
        throw DomainError("cm.mass must equal the atom total mass (" + std::to_string(mt) + " eV)");
    if (!(cfg.geometry.b >= 0.0) || !std::isfinite(cfg.geometry.b)) throw DomainError("geometry.b must be >= 0");
    if (!std::isfinite(cfg.geometry.phi_b)) throw DomainError("geometry.phi_b must be finite");
    const NumericsConfig& n = cfg.numerics;
    if (n.n_theta < 4 || n.n_phi < 4) throw DomainError("numerics.n_theta and n_phi must be >= 4");
    if (n.n_pperp < 4 || n.n_pz < 1) throw DomainError("numerics.n_pperp must be >= 4 and n_pz >= 1");
    if (n.n_phif < 8) throw DomainError("numerics.n_phif must be >= 8");
    if (n.mc_samples < 1) throw DomainError("numerics.mc_samples must be >= 1");
    if (!(n.gamma_reg >= 0.0)) throw DomainError("numerics.gamma_reg must be >= 0");
    if (n.intermediate_n_max < 2 || n.intermediate_n_max > 3)
        throw CapabilityError("numerics.intermediate_n_max must be 2 or 3");
    if (n.mc_inner_theta < 2 || n.mc_inner_phi < 2) throw DomainError("numerics.mc_inner_* must be >= 2");
    if (n.workers < 1) throw DomainError("numerics.workers must be >= 1");
}

CollisionConfig with_consistent_mass(CollisionConfig cfg) {
    cfg.cm.mass = cfg.transition.atom.total_mass();
    return cfg;
}

int l0_of(const CollisionConfig& cfg) {
    return cfg.photon.l_gamma + cfg.photon.helicity + cfg.cm.l + cfg.transition.initial.m - cfg.transition.final.m;
}

namespace {

const double kTwoPi = 2.0 * units::pi;

cplx dot3(const Vector3cd& a, const Vector3d& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// Evaluates the integrand of the evolved CM amplitude. Everything that does
// not depend on P_f is prepared once.
struct AbsorptionKernel {
    explicit AbsorptionKernel(const CollisionConfig& c)
        : cfg(c), t(c.transition), cm(c.cm), ph(c.photon) {
        const AtomSpec& a = t.atom;
        m = a.m();
        M = a.M();
        mt = a.total_mass();
        a0 = a.a0();
        b1 = a.beta_electron();
        b3 = a.beta_nucleus();
        Z = a.Z;
        lam = c.photon.helicity;
        mi = t.initial.m;
        mf = t.final.m;
        lf = t.final.l;
        de = detail::transition_gap(t);
        closed_path = !t.numeric_only && t.initial.n == 1 && closed::available(t.final);
        const double b = units::nm_to_inv_ev(c.geometry.b);
        bx = b * std::cos(c.geometry.phi_b);
        by = b * std::sin(c.geometry.phi_b);
        for (int s = -1; s <= 1; ++s) chi[s + 1] = spherical_basis(s);
        cm_r = detail::lg_support(c.cm.n, c.cm.l) / units::nm_to_inv_ev(c.cm.sigma_perp);
        cm_rz = detail::hg_support(c.cm.k) / units::nm_to_inv_ev(c.cm.sigma_z);
        kb = detail::kperp_b(c.photon, std::max(de, c.photon.mean_kz), b);
    }

    // Rotated current at |k| = w for precomputed Wigner factors.
    cplx current_fast(double w, double dl, double d0, cplx pk) const {
        const double x1 = t.dipole_mode ? 0.0 : a0 * b1 * w;
        const double x3 = t.dipole_mode ? 0.0 : a0 * b3 * w;
        cplx out = 0.0;
        if (lf >= 1 && dl != 0.0) {
            const BoundState fr{t.final.n, lf, lam};
            out += dl * (-closed::j_dipole(fr, x1, a0, lam, t.table) / m -
                         double(Z) * closed::j_dipole(fr, x3, a0, lam, t.table) / M);
        }
        if (d0 != 0.0) {
            const BoundState f0{t.final.n, lf, 0};
            out += d0 * pk *
                   (-closed::form_factor(f0, x1, t.table) + double(Z) * closed::form_factor(f0, x3, t.table)) / mt;
        }
        return out;
    }

    // psi_CM(P_f - k) psi_gamma(k) J e^{i(mi-mf)phi_k} e^{-i k.b}
    cplx core(const Vector3d& k, const Vector3d& Pf, double phi_k, double dl, double d0, cplx pk,
              bool fast = true) const {
        const cplx pc = cm(Vector3d(Pf - k));
        if (pc == 0.0) return 0.0;
        const cplx pg = ph(k);
        if (pg == 0.0) return 0.0;
        const double w = k.norm();
        const cplx J = (fast && closed_path) ? current_fast(w, dl, d0, pk) : rotated_current(t, k, lam, Pf);
        const double arg = (mi - mf) * phi_k - (k.x() * bx + k.y() * by);
        return pc * pg * J * std::polar(1.0, arg);
    }

    AngleRange theta_range(const Vector3d& Pf, double w0) const {
        AngleRange r = detail::photon_cone(cfg.photon, w0);
        auto acos_c = [](double c) { return std::acos(std::clamp(c, -1.0, 1.0)); };
        const double pp = std::hypot(Pf.x(), Pf.y());
        if (r.hi <= 0.5 * units::pi) {
            const double s_lo = (pp - cm_r) / w0, s_hi = (pp + cm_r) / w0;
            if (s_lo > 0.0) r.lo = std::max(r.lo, std::asin(std::min(1.0, s_lo)));
            if (s_hi < 1.0) r.hi = std::min(r.hi, std::asin(s_hi));
        }
        const double kz_hi = Pf.z() - cfg.cm.mean_pz + cm_rz, kz_lo = Pf.z() - cfg.cm.mean_pz - cm_rz;
        r.lo = std::max(r.lo, acos_c(kz_hi / w0));
        r.hi = std::min(r.hi, acos_c(kz_lo / w0));
        return r;
    }

    cplx amplitude(const Vector3d& Pf, int n_theta, int n_phi) const {
        if (!(de > 0.0)) return 0.0;
        n_theta = detail::phase_resolved_nodes(n_theta, kb, 0.5, 12);
        n_phi = detail::phase_resolved_nodes(n_phi, kb, 1.0, 16);
        const double pmag = Pf.norm();
        const ResonanceRoot r0 = absorption_resonant_omega(t, pmag, 0.0);
        if (r0.forbidden) return 0.0;
        const AngleRange tr = theta_range(Pf, r0.omega);
        if (tr.empty()) return 0.0;
        const quad::Rule g = quad::gauss_legendre(n_theta, tr.lo, tr.hi);
        const double phi_f = (Pf.x() != 0.0 || Pf.y() != 0.0) ? std::atan2(Pf.y(), Pf.x()) : 0.0;
        std::array<cplx, 3> chiP;
        for (int s = 0; s < 3; ++s) chiP[s] = dot3(chi[s], Pf);
        const double dphi = kTwoPi / n_phi;
        cplx sum = 0.0;
        for (int j = 0; j < g.x.size(); ++j) {
            const double th = g.x[j], st = std::sin(th), ct = std::cos(th);
            std::array<double, 3> d1;
            for (int s = -1; s <= 1; ++s) d1[s + 1] = wigner_d(1, s, lam, th);
            const double dl = (closed_path && lf >= 1) ? wigner_d(lf, mf, lam, th) : 0.0;
            const double d0 = closed_path ? wigner_d(lf, mf, 0, th) : 0.0;
            cplx ring = 0.0;
            for (int q = 0; q < n_phi; ++q) {
                const double phi = phi_f + dphi * (q + 0.5);
                const double cp = std::cos(phi), sp = std::sin(phi);
                const Vector3d khat(st * cp, st * sp, ct);
                const double cosT = pmag > 0.0 ? Pf.dot(khat) / pmag : 0.0;
                const ResonanceRoot rr = absorption_resonant_omega(t, pmag, cosT);
                if (rr.forbidden) continue;
                const double w = rr.omega;
                cplx pk = 0.0;
                if (closed_path)
                    for (int s = -1; s <= 1; ++s) pk += d1[s + 1] * std::polar(1.0, -s * phi) * chiP[s + 1];
                const cplx c = core(w * khat, Pf, phi, dl, d0, pk);
                if (c == 0.0) continue;
                ring += w * w / (std::sqrt(2.0 * w) * rr.jacobian) * c;
            }
            sum += g.w[j] * st * dphi * ring;
        }
        return cplx(0.0, -1.0) * electron_charge() / (kTwoPi * kTwoPi) * sum;
    }

    // Energy constraint in cylindrical variables at fixed k_z and gamma.
    cplx amplitude_cylindrical(const Vector3d& Pf, int n_kz, int n_gamma) const {
        if (!(de > 0.0)) return 0.0;
        const double pfz = Pf.z(), pfp = std::hypot(Pf.x(), Pf.y());
        const double phi_f = pfp > 0.0 ? std::atan2(Pf.y(), Pf.x()) : 0.0;
        const double u = mt - pfz;
        const double kz_max = 2.0 * mt * de / (u + std::sqrt(u * u + 2.0 * mt * de));
        const ResonanceRoot r0 = absorption_resonant_omega(t, Pf.norm(), 0.0);
        if (r0.forbidden) return 0.0;
        const AngleRange cone = detail::photon_cone(cfg.photon, r0.omega);
        double kz_low = cone.hi < 0.5 * units::pi ? r0.omega * std::cos(cone.hi) : -r0.omega;
        kz_low = std::max(kz_low, pfz - cfg.cm.mean_pz - cm_rz);
        if (!(kz_low < kz_max)) return 0.0;
        const double span = kz_max - kz_low;
        const quad::Rule g = quad::gauss_legendre(n_kz, 0.0, 1.0);
        const double dg = kTwoPi / n_gamma;
        cplx sum = 0.0;
        for (int j = 0; j < g.x.size(); ++j) {
            const double s = g.x[j];
            const double kz = kz_max - s * s * span;
            const double dkz = 2.0 * s * span;
            const double base = kz * kz - 2.0 * pfz * kz;
            auto energy = [&](double kp, double c) {
                const double w = std::hypot(kp, kz);
                return kp * kp + base + 2.0 * mt * (w - de) - 2.0 * kp * pfp * c;
            };
            for (int q = 0; q < n_gamma; ++q) {
                const double gam = -units::pi + dg * (q + 0.5);
                const double c = std::cos(gam);
                if (!(energy(0.0, c) < 0.0)) continue;
                // E is convex and increasing past its minimum: bracket, then Newton.
                double lo = 0.0, hi = std::sqrt(std::max(0.0, de * de - kz * kz)) + 1e-6;
                while (energy(hi, c) <= 0.0) hi *= 2.0;
                double kp = hi;
                for (int it = 0; it < 200; ++it) {
                    const double w = std::hypot(kp, kz);
                    const double e = energy(kp, c);
                    if (e > 0.0) hi = kp; else lo = kp;
                    const double de_dk = 2.0 * kp - 2.0 * pfp * c + 2.0 * mt * kp / w;
                    double next = kp - e / de_dk;
                    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
                    const bool done = std::abs(next - kp) <= 1e-15 * kp || hi - lo <= 1e-15 * hi;
                    kp = next;
                    if (done) break;
                }
                const double w = std::hypot(kp, kz);
                const double deriv = std::abs(2.0 * kp - 2.0 * pfp * c + 2.0 * mt * kp / w);
                const double phi = phi_f + gam;
                const Vector3d k(kp * std::cos(phi), kp * std::sin(phi), kz);
                const cplx val = core(k, Pf, phi, 0.0, 0.0, 0.0, false);
                sum += g.w[j] * dkz * dg * 2.0 * mt * kp / (std::sqrt(2.0 * w) * deriv) * val;
            }
        }
        return cplx(0.0, -1.0) * electron_charge() / (kTwoPi * kTwoPi) * sum;
    }

    const CollisionConfig& cfg;
    const TransitionSpec& t;
    MassiveMomentumEval cm;
    PhotonMomentumEval ph;
    double m, M, mt, a0, b1, b3, de, bx, by, cm_r, cm_rz, kb = 0.0;
    int Z, lam, mi, mf, lf;
    bool closed_path;
    std::array<Vector3cd, 3> chi;
};

struct Ranges {
    double pperp_max, pz_center, pz_halfwidth;
};

Ranges auto_ranges(const CollisionConfig& cfg) {
    const double pad = 4.5;
    const double sc = units::nm_to_inv_ev(cfg.cm.sigma_perp), scz = units::nm_to_inv_ev(cfg.cm.sigma_z);
    const double sg = units::nm_to_inv_ev(cfg.photon.sigma_perp), sgz = units::nm_to_inv_ev(cfg.photon.sigma_z);
    const double qc = 2 * cfg.cm.n + std::abs(cfg.cm.l) + 1, qg = 2 * cfg.photon.n_gamma + std::abs(cfg.photon.l_gamma) + 1;
    Ranges r;
    r.pperp_max = (std::sqrt(2.0 * qc) + pad) / sc + (std::sqrt(2.0 * qg) + pad) / sg;
    r.pz_center = cfg.cm.mean_pz + cfg.photon.mean_kz;
    const double w = std::max(cfg.photon.mean_kz, 1e-12);
    const AngleRange cone = detail::photon_cone(cfg.photon, w);
    const double th = std::min(cone.hi, 0.5 * units::pi);
    r.pz_halfwidth = (std::sqrt(2.0 * cfg.cm.k + 1.0) + pad) / scz +
                     (std::sqrt(2.0 * cfg.photon.k_gamma + 1.0) + pad) / sgz + 0.5 * th * th * w;
    return r;
}

void check_config(const CollisionConfig& cfg) {
    validate(cfg);
    if (cfg.photon.helicity != 1 && cfg.photon.helicity != -1) throw DomainError("photon helicity must be +1 or -1");
}

// Sum of |psi|^2 over a tensor mesh; at b = 0 the azimuth is trivial.
double mesh_probability(const AbsorptionKernel& K, const CollisionConfig& cfg, const Ranges& rg, int n_perp,
                        int n_phi, int n_pz, int workers) {
    const quad::Rule gp = quad::gauss_legendre(n_perp, 0.0, rg.pperp_max);
    const quad::Rule gz = quad::gauss_legendre(n_pz, rg.pz_center - rg.pz_halfwidth, rg.pz_center + rg.pz_halfwidth);
    const bool axial = cfg.geometry.b == 0.0;
    const int nphi = axial ? 1 : n_phi;
    const int total = n_perp * nphi * n_pz;
    std::vector<double> vals(total, 0.0);
    const int nt = cfg.numerics.n_theta, np = cfg.numerics.n_phi;
    parallel_for(total, workers, [&](int idx) {
        const int k = idx % n_pz, j = (idx / n_pz) % nphi, i = idx / (n_pz * nphi);
        const double phi = kTwoPi * j / nphi;
        const double p = gp.x[i];
        const Vector3d Pf(p * std::cos(phi), p * std::sin(phi), gz.x[k]);
        const double dphi = kTwoPi / nphi;
        vals[idx] = gp.w[i] * p * dphi * gz.w[k] * std::norm(K.amplitude(Pf, nt, np));
    });
    double s = 0.0;
    for (double v : vals) s += v;
    return s / std::pow(kTwoPi, 3);
}

// x^n / n!
double leading_term(int n, double x) {
    if (n == 0) return 1.0;
    if (x == 0.0) return 0.0;
    return std::exp(n * std::log(x) - log_factorial(n));
}

}  // namespace

cplx evolved_cm_amplitude(const CollisionConfig& cfg, const Vector3d& Pf) {
    check_config(cfg);
    AbsorptionKernel K(cfg);
    return K.amplitude(Pf, cfg.numerics.n_theta, cfg.numerics.n_phi);
}

cplx evolved_cm_amplitude_cylindrical(const CollisionConfig& cfg, const Vector3d& Pf, int n_kz, int n_gamma) {
    check_config(cfg);
    if (n_kz < 4 || n_gamma < 4) throw DomainError("cylindrical quadrature needs at least 4 nodes per axis");
    AbsorptionKernel K(cfg);
    return K.amplitude_cylindrical(Pf, n_kz, n_gamma);
}

MeshSpec default_mesh(const CollisionConfig& cfg) {
    MeshSpec m;
    m.n_pperp = cfg.numerics.n_pperp + 4 * cfg.cm.n;
    m.n_phi = cfg.numerics.n_phif;
    m.n_pz = cfg.numerics.n_pz + 4 * cfg.cm.k;
    const Ranges r = auto_ranges(cfg);
    m.pperp_max = r.pperp_max;
    m.pz_center = r.pz_center;
    m.pz_halfwidth = r.pz_halfwidth;
    return m;
}

EvolvedStateGrid evolved_state_grid(const CollisionConfig& cfg, const MeshSpec& mesh) {
    check_config(cfg);
    if (mesh.n_pperp < 2 || mesh.n_phi < 1 || (!mesh.single_pz && mesh.n_pz < 1))
        throw DomainError("mesh needs n_pperp >= 2, n_phi >= 1, n_pz >= 1");
    const Ranges r = auto_ranges(cfg);
    const double pmax = mesh.pperp_max > 0.0 ? mesh.pperp_max : r.pperp_max;
    EvolvedStateGrid g;
    const quad::Rule gp = quad::gauss_legendre(mesh.n_pperp, 0.0, pmax);
    g.p_perp = gp.x;
    g.w_perp = gp.w;
    g.phi = Eigen::ArrayXd(mesh.n_phi);
    for (int j = 0; j < mesh.n_phi; ++j) g.phi[j] = kTwoPi * j / mesh.n_phi;
    if (mesh.single_pz) {
        g.p_z = Eigen::ArrayXd::Constant(1, mesh.pz_value);
        g.w_z = Eigen::ArrayXd::Ones(1);
    } else {
        const double c = mesh.pz_halfwidth > 0.0 ? mesh.pz_center : r.pz_center;
        const double h = mesh.pz_halfwidth > 0.0 ? mesh.pz_halfwidth : r.pz_halfwidth;
        const quad::Rule gz = quad::gauss_legendre(mesh.n_pz, c - h, c + h);
        g.p_z = gz.x;
        g.w_z = gz.w;
    }
    const int np = g.n_pperp(), nf = g.n_phi(), nz = g.n_pz();
    g.amp = Eigen::ArrayXcd::Zero(np * nf * nz);
    AbsorptionKernel K(cfg);
    const int nt = cfg.numerics.n_theta, nph = cfg.numerics.n_phi;
    parallel_for(np * nf * nz, cfg.numerics.workers, [&](int idx) {
        const int k = idx % nz, j = (idx / nz) % nf, i = idx / (nz * nf);
        const double p = g.p_perp[i], phi = g.phi[j];
        g.amp[idx] = K.amplitude(Vector3d(p * std::cos(phi), p * std::sin(phi), g.p_z[k]), nt, nph);
    });
    double s = 0.0;
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < nf; ++j)
            for (int k = 0; k < nz; ++k) s += g.w_perp[i] * g.p_perp[i] * g.w_z[k] * std::norm(g.at(i, j, k));
    g.norm = s * (kTwoPi / nf) / std::pow(kTwoPi, 3);
    return g;
}

OamSpectrum oam_spectrum_of_state(const EvolvedStateGrid& grid) {
    const int np = grid.n_pperp(), nf = grid.n_phi(), nz = grid.n_pz();
    if (nf < 64) throw DomainError("OAM spectrum needs at least 64 azimuthal nodes");
    std::vector<double> power(nf, 0.0);
    Eigen::ArrayXcd ring(nf);
    for (int i = 0; i < np; ++i)
        for (int k = 0; k < nz; ++k) {
            for (int j = 0; j < nf; ++j) ring[j] = grid.at(i, j, k);
            const double w = grid.p_perp[i] * grid.w_perp[i] * grid.w_z[k];
            for (int q = 0; q < nf; ++q) {
                cplx c = 0.0;
                for (int j = 0; j < nf; ++j) c += ring[j] * std::polar(1.0, -kTwoPi * double(q) * j / nf);
                power[q] += w * std::norm(c / double(nf));
            }
        }
    double total = 0.0;
    for (double v : power) total += v;
    if (!(total > 0.0)) throw NumericError("OAM spectrum: the state vanishes on the mesh", 0.0);
    OamSpectrum out;
    // harmonics q and q - nf are aliases; map to ell in [-nf/2, nf/2)
    double edge = 0.0;
    for (int e = -nf / 2; e < nf / 2; ++e) {
        const int q = ((e % nf) + nf) % nf;
        const double p = power[q] / total;
        out.ell.push_back(e);
        out.probability.push_back(p);
        if (std::abs(e) >= nf / 2 - 2) edge += p;
    }
    if (edge > 1e-6) throw NumericError("OAM spectrum aliased: raise the azimuthal node count", edge);
    for (size_t i = 0; i < out.ell.size(); ++i) out.mean += out.ell[i] * out.probability[i];
    for (size_t i = 0; i < out.ell.size(); ++i)
        out.stddev += (out.ell[i] - out.mean) * (out.ell[i] - out.mean) * out.probability[i];
    out.stddev = std::sqrt(out.stddev);
    return out;
}

OamEstimate oam_distribution_estimate(int l0, double b, double sigma_cm, double sigma_ph, int m_range) {
    if (!(b >= 0.0) || !(sigma_cm > 0.0) || !(sigma_ph > 0.0)) throw DomainError("need b >= 0 and positive widths");
    if (m_range < 3.0 * (1.0 + b / sigma_cm))
        throw DomainError("m_range must be at least 3 (1 + b / sigma_cm)");
    OamEstimate out;
    const double xb = b / sigma_ph, xs = sigma_cm / sigma_ph;
    double tot = 0.0, tot_a = 0.0;
    for (int m = -m_range; m <= m_range; ++m) {
        const int l = l0 + m;
        const double a = bessel_j(m, xb) * bessel_i(l, xs);
        const double asym = leading_term(std::abs(m), 0.5 * xb) * leading_term(std::abs(l), 0.5 * xs);
        const double pa = asym * asym;
        out.ell.push_back(l);
        out.probability.push_back(a * a);
        out.asymptotic.push_back(pa);
        tot += a * a;
        tot_a += pa;
    }
    if (!(tot > 0.0)) throw NumericError("OAM estimate vanishes", 0.0);
    for (double& p : out.probability) p /= tot;
    if (tot_a > 0.0)
        for (double& p : out.asymptotic) p /= tot_a;
    for (size_t i = 0; i < out.ell.size(); ++i) out.mean += out.ell[i] * out.probability[i];
    for (size_t i = 0; i < out.ell.size(); ++i)
        out.stddev += (out.ell[i] - out.mean) * (out.ell[i] - out.mean) * out.probability[i];
    out.stddev = std::sqrt(out.stddev);
    return out;
}

ProbabilityResult absorption_probability(const CollisionConfig& cfg) {
    check_config(cfg);
    AbsorptionKernel K(cfg);
    const MeshSpec ms = default_mesh(cfg);
    const Ranges rg{ms.pperp_max, ms.pz_center, ms.pz_halfwidth};
    const int w = cfg.numerics.workers;
    auto coarse = [](int n) { return std::max(2, (2 * n + 2) / 3); };
    ProbabilityResult r;
    r.value = mesh_probability(K, cfg, rg, ms.n_pperp, ms.n_phi, ms.n_pz, w);
    const double c = mesh_probability(K, cfg, rg, coarse(ms.n_pperp), coarse(ms.n_phi), coarse(ms.n_pz), w);
    r.error = std::abs(r.value - c);
    if (r.error > 1e-2 * std::abs(r.value))
        r.warnings.push_back("absorption probability: mesh refinement changed the result by " +
                             std::to_string(r.error / std::max(std::abs(r.value), 1e-300)) + " (relative)");
    return r;
}

double cross_section(double probability, double luminosity_nm2) {
    if (!(luminosity_nm2 > 0.0)) throw DomainError("luminosity must be positive");
    return probability / luminosity_nm2 * units::barn_per_nm2;
}

}  // namespace vortex
