#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "detail.hpp"
#include "vortexlab/amplitudes.hpp"
#include "vortexlab/errors.hpp"
#include "vortexlab/kinematics.hpp"
#include "vortexlab/parallel.hpp"
#include "vortexlab/quadrature.hpp"
#include "vortexlab/specfun.hpp"

namespace vortex {

using namespace specfun;

namespace {

const double kTwoPi = 2.0 * units::pi;

struct Level {
    int n, l;
};

std::vector<Level> intermediate_levels(int n_max) {
    std::vector<Level> out;
    for (int n = 1; n <= n_max; ++n)
        for (int l = 0; l < n; ++l) out.push_back({n, l});
    return out;
}

double e_squared() { return 4.0 * units::pi * units::alpha; }

bool is_ground(const BoundState& s) { return s.n == 1; }

// <f| e^{i q . r_e beta1} + Z^2 (m/M) e^{i q . r beta3} |1s> for f = nlm
cplx seagull_form(const TransitionSpec& t, const BoundState& f, const Vector3d& q) {
    const AtomSpec& a = t.atom;
    const double qn = q.norm();
    const double th = qn > 0.0 ? std::acos(std::clamp(q.z() / qn, -1.0, 1.0)) : 0.0;
    const double ph = qn > 0.0 ? std::atan2(q.y(), q.x()) : 0.0;
    const double x1 = a.a0() * a.beta_electron() * qn, x3 = a.a0() * a.beta_nucleus() * qn;
    const BoundState f0{f.n, f.l, 0};
    const double z2 = double(a.Z) * a.Z * a.m() / a.M();
    const cplx ff = closed::form_factor(f0, x1, t.table) + z2 * closed::form_factor(f0, x3, t.table);
    return std::polar(1.0, -f.m * ph) * wigner_d(f.l, f.m, 0, th) * ff;
}

void require_ground_initial(const TransitionSpec& t) {
    if (!is_ground(t.initial)) throw CapabilityError("scattering is implemented from the 1s state only");
    if (!closed::available(t.final)) throw CapabilityError("scattering final state must have n <= 3");
}

}  // namespace

cplx scattering_amplitude_seagull(const CollisionConfig& cfg, const Vector3d& ki, int lam_i, const Vector3d& kf,
                                  int lam_f) {
    const TransitionSpec& t = cfg.transition;
    require_ground_initial(t);
    const double wi = ki.norm(), wf = kf.norm();
    const Vector3cd ei = helicity_vector(ki, lam_i), ef = helicity_vector(kf, lam_f);
    const cplx eie = ef.dot(ei);  // ei . ef^*
    return e_squared() / (2.0 * t.atom.m() * std::sqrt(wi * wf)) * eie * seagull_form(t, t.final, ki - kf);
}

cplx scattering_amplitude_pw(const CollisionConfig& cfg, const Vector3d& Pi, const Vector3d& ki, int lam_i,
                             const Vector3d& Pf, const Vector3d& kf, int lam_f) {
    const TransitionSpec& t = cfg.transition;
    require_ground_initial(t);
    const AtomSpec& a = t.atom;
    const double mt = a.total_mass();
    const double wi = ki.norm(), wf = kf.norm();
    if (!(wi > 0.0) || !(wf > 0.0)) throw DomainError("photon momenta must be nonzero");
    const Vector3cd ei = helicity_vector(ki, lam_i), ef = helicity_vector(kf, lam_f);
    const double gam = cfg.numerics.gamma_reg;
    const double ei_n = bound_energy(a, t.initial.n);
    const Vector3d Pn1 = Pi + ki, Pn2 = Pi - kf;
    cplx sum = 0.0;
    for (const Level& lv : intermediate_levels(cfg.numerics.intermediate_n_max)) {
        const double en = bound_energy(a, lv.n);
        const cplx d1(ei_n - en + wi + (Pi.squaredNorm() - Pn1.squaredNorm()) / (2.0 * mt), 0.5 * gam);
        const double d2 = ei_n - en + (Pi.squaredNorm() - Pn2.squaredNorm()) / (2.0 * mt) - wf;
        for (int m = -lv.l; m <= lv.l; ++m) {
            const BoundState bn{lv.n, lv.l, m};
            // absorb k_i then emit k_f
            const cplx va = current_dot(t, t.initial, bn, ki, ei, Pn1);
            const cplx ve = current_dot(t, bn, t.final, -kf, ef.conjugate(), Pf);
            // emit k_f then absorb k_i
            const cplx ue = current_dot(t, t.initial, bn, -kf, ef.conjugate(), Pn2);
            const cplx ua = current_dot(t, bn, t.final, ki, ei, Pf);
            sum += va * ve / d1 + ue * ua / d2;
        }
    }
    return e_squared() / (2.0 * std::sqrt(wi * wf)) * sum + scattering_amplitude_seagull(cfg, ki, lam_i, kf, lam_f);
}

namespace {

// Angular part of e . J_{n<-1s}(k) for every intermediate (n, l, m):
// W = g[+] A_+(w) + g[-] A_-(w) + g0 (e . P) B(w).
struct VertexAngles {
    struct Entry {
        cplx gp, gm, g0;
    };
    std::vector<Entry> e;  // flattened over levels and m
};

struct LevelRadial {
    cplx ap, am, b;
};

struct ScatterKernel {
    explicit ScatterKernel(const CollisionConfig& c) : cfg(c), t(c.transition), cm(c.cm), ph(c.photon) {
        const AtomSpec& a = t.atom;
        levels = intermediate_levels(c.numerics.intermediate_n_max);
        for (const Level& lv : levels) energies.push_back(bound_energy(a, lv.n));
        m = a.m();
        M = a.M();
        mt = a.total_mass();
        a0 = a.a0();
        Z = a.Z;
        const double b = units::nm_to_inv_ev(c.geometry.b);
        bx = b * std::cos(c.geometry.phi_b);
        by = b * std::sin(c.geometry.phi_b);
        e1 = bound_energy(a, 1);
    }

    VertexAngles angles(const Vector3d& u, const Vector3cd& pol) const {
        const double th = std::acos(std::clamp(u.z(), -1.0, 1.0));
        const double phi = std::atan2(u.y(), u.x());
        const cplx cp = helicity_vector(u, 1).dot(pol), cmn = helicity_vector(u, -1).dot(pol);
        VertexAngles v;
        for (const Level& lv : levels)
            for (int mm = -lv.l; mm <= lv.l; ++mm) {
                const cplx ph = std::polar(1.0, -mm * phi);
                VertexAngles::Entry en;
                en.gp = lv.l >= 1 ? ph * cp * wigner_d(lv.l, mm, 1, th) : 0.0;
                en.gm = lv.l >= 1 ? ph * cmn * wigner_d(lv.l, mm, -1, th) : 0.0;
                en.g0 = ph * wigner_d(lv.l, mm, 0, th);
                v.e.push_back(en);
            }
        return v;
    }

    std::vector<LevelRadial> radial(double w) const {
        const double x1 = t.dipole_mode ? 0.0 : a0 * t.atom.beta_electron() * w;
        const double x3 = t.dipole_mode ? 0.0 : a0 * t.atom.beta_nucleus() * w;
        std::vector<LevelRadial> out;
        for (const Level& lv : levels) {
            LevelRadial r{0.0, 0.0, 0.0};
            if (lv.l >= 1) {
                for (int lam : {1, -1}) {
                    const BoundState fr{lv.n, lv.l, lam};
                    const cplx v = -closed::j_dipole(fr, x1, a0, lam, t.table) / m -
                                   double(Z) * closed::j_dipole(fr, x3, a0, lam, t.table) / M;
                    (lam == 1 ? r.ap : r.am) = v;
                }
            }
            const BoundState f0{lv.n, lv.l, 0};
            r.b = (-closed::form_factor(f0, x1, t.table) + double(Z) * closed::form_factor(f0, x3, t.table)) / mt;
            out.push_back(r);
        }
        return out;
    }

    // W_{n l m} for all entries.
    void eval(const VertexAngles& va, const std::vector<LevelRadial>& rad, cplx eP, std::vector<cplx>& out) const {
        out.resize(va.e.size());
        size_t idx = 0;
        for (size_t s = 0; s < levels.size(); ++s)
            for (int mm = -levels[s].l; mm <= levels[s].l; ++mm, ++idx) {
                const auto& g = va.e[idx];
                out[idx] = g.gp * rad[s].ap + g.gm * rad[s].am + g.g0 * eP * rad[s].b;
            }
    }

    const CollisionConfig& cfg;
    const TransitionSpec& t;
    MassiveMomentumEval cm;
    PhotonMomentumEval ph;
    std::vector<Level> levels;
    std::vector<double> energies;
    double m, M, mt, a0, bx, by, e1;
    int Z;
};

struct InnerNode {
    Vector3d u;
    double weight;  // w_theta sin(theta) dphi
    Vector3cd ei;
    VertexAngles absorb;   // (k_i, e_i)
    VertexAngles reverse;  // (-k_i, e_i^*)
};

cplx dotc(const Vector3cd& a, const Vector3d& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

struct SampleResult {
    double sum = 0.0, sum2 = 0.0;
};

// Packet-folded scattering amplitude into (P_f, k_f, lam_f): inner
// quadrature over the incoming photon direction with the energy delta
// resolved in omega_i.
struct PacketScatter {
    explicit PacketScatter(const CollisionConfig& c) : cfg(c), K(c) {
        const NumericsConfig& nc = c.numerics;
        lam_i = c.photon.helicity;
        wbar = mean_photon_energy(c.photon);
        const detail::AngleRange cone = detail::photon_cone(c.photon, wbar);
        const double kb = detail::kperp_b(c.photon, wbar, units::nm_to_inv_ev(c.geometry.b));
        const int n_th = detail::phase_resolved_nodes(nc.mc_inner_theta, kb, 0.5, 12);
        const int n_ph = detail::phase_resolved_nodes(nc.mc_inner_phi, kb, 1.0, 16);
        const quad::Rule gt = quad::gauss_legendre(n_th, cone.lo, cone.hi);
        const double dphi = kTwoPi / n_ph;
        for (int j = 0; j < gt.x.size(); ++j)
            for (int q = 0; q < n_ph; ++q) {
                const double th = gt.x[j], phi = dphi * (q + 0.5);
                InnerNode nd;
                nd.u = Vector3d(std::sin(th) * std::cos(phi), std::sin(th) * std::sin(phi), std::cos(th));
                nd.weight = gt.w[j] * std::sin(th) * dphi;
                nd.ei = helicity_vector(nd.u, lam_i);
                nd.absorb = K.angles(nd.u, nd.ei);
                nd.reverse = K.angles(-nd.u, nd.ei.conjugate());
                nodes.push_back(std::move(nd));
            }
    }

    // reference = true evaluates the plane-wave T-matrix through scattering_amplitude_pw
    cplx amplitude(const Vector3d& Pf, const Vector3d& kf, int lam_f, bool reference = false) const {
        const TransitionSpec& t = cfg.transition;
        const double wf = kf.norm();
        const Vector3d uf = kf / wf;
        const double pfn = Pf.norm();
        const double gam = cfg.numerics.gamma_reg;
        const double mt = K.mt;
        const std::vector<LevelRadial> rad_f = K.radial(wf);
        // absorb-first denominators depend on final variables only
        std::vector<cplx> d1(K.levels.size());
        for (size_t lv = 0; lv < K.levels.size(); ++lv)
            d1[lv] = cplx(K.e1 - K.energies[lv] + wf - (2.0 * Pf.dot(kf) + wf * wf) / (2.0 * mt), 0.5 * gam);
        const Vector3cd ef = helicity_vector(uf, lam_f);
        const VertexAngles vf = K.angles(uf, ef);
        std::vector<cplx> w_kf, w_node, w_rev, w_fwd;
        K.eval(vf, rad_f, dotc(ef, Pf), w_kf);  // W(k_f, e_f, P_f)
        const VertexAngles vrev = K.angles(-uf, ef.conjugate());
        const double e2 = e_squared();
        cplx amp = 0.0;
        for (const InnerNode& nd : nodes) {
            const double c1 = nd.u.dot(uf);
            const double c2 = pfn > 0.0 ? nd.u.dot(Pf) / pfn : 0.0;
            const double c3 = pfn > 0.0 ? uf.dot(Pf) / pfn : 0.0;
            const ResonanceRoot rr = scattering_resonant_omega(t, wf, pfn, c1, c2, c3);
            if (rr.forbidden) continue;
            const double wi = rr.omega;
            const Vector3d ki = wi * nd.u;
            const Vector3d Pi = Pf + kf - ki;
            const cplx pc = K.cm(Pi);
            if (pc == 0.0) continue;
            const cplx pg = K.ph(ki);
            if (pg == 0.0) continue;
            cplx T;
            if (reference) {
                T = scattering_amplitude_pw(cfg, Pi, ki, lam_i, Pf, kf, lam_f);
            } else {
                const std::vector<LevelRadial> rad_i = K.radial(wi);
                K.eval(nd.absorb, rad_i, dotc(nd.ei, Pi), w_node);             // W(k_i, e_i, P_i + k_i)
                K.eval(nd.reverse, rad_i, dotc(nd.ei.conjugate(), Pf), w_rev);  // W(-k_i, e_i^*, P_f)
                const Vector3d Pn2 = Pi - kf;
                K.eval(vrev, rad_f, dotc(ef.conjugate(), Pn2), w_fwd);  // W(-k_f, e_f^*, P_i - k_f)
                cplx tsum = 0.0;
                size_t idx = 0;
                for (size_t lv = 0; lv < K.levels.size(); ++lv) {
                    const double d2 = K.e1 - K.energies[lv] + (2.0 * Pi.dot(kf) - wf * wf) / (2.0 * mt) - wf;
                    cplx part1 = 0.0, part2 = 0.0;
                    for (int mm = -K.levels[lv].l; mm <= K.levels[lv].l; ++mm, ++idx) {
                        part1 += w_node[idx] * std::conj(w_kf[idx]);
                        part2 += w_fwd[idx] * std::conj(w_rev[idx]);
                    }
                    tsum += part1 / d1[lv] + part2 / d2;
                }
                const cplx eie = ef.dot(nd.ei);
                const double qn = (ki - kf).norm();
                const double z2w = double(K.Z) * K.Z * K.m / K.M;
                const double x1 = K.a0 * t.atom.beta_electron() * qn, x3 = K.a0 * t.atom.beta_nucleus() * qn;
                const BoundState g{1, 0, 0};
                const double ff =
                    std::real(closed::form_factor(g, x1, t.table) + z2w * closed::form_factor(g, x3, t.table));
                T = e2 / (2.0 * std::sqrt(wi * wf)) * (tsum + eie * ff / K.m);
            }
            const cplx bphase = std::polar(1.0, -(ki.x() * K.bx + ki.y() * K.by));
            amp += nd.weight * wi * wi / rr.jacobian * pc * pg * bphase * T;
        }
        return amp * cplx(0.0, -1.0) / (kTwoPi * kTwoPi);
    }

    const CollisionConfig& cfg;
    ScatterKernel K;
    std::vector<InnerNode> nodes;
    int lam_i = 1;
    double wbar = 0.0;
};

void require_scattering_config(const CollisionConfig& cfg) {
    validate(cfg);
    const TransitionSpec& t = cfg.transition;
    if (!is_ground(t.initial) || !is_ground(t.final))
        throw CapabilityError("packet scattering probability is implemented for 1s -> 1s only");
}

}  // namespace

cplx scattering_packet_amplitude(const CollisionConfig& cfg, const Vector3d& Pf, const Vector3d& kf, int lam_f,
                                 bool reference) {
    require_scattering_config(cfg);
    if (!(kf.norm() > 0.0)) throw DomainError("k_f must be nonzero");
    if (lam_f != 1 && lam_f != -1) throw DomainError("helicity must be +1 or -1");
    return PacketScatter(cfg).amplitude(Pf, kf, lam_f, reference);
}

ProbabilityResult scattering_probability(const CollisionConfig& cfg) {
    require_scattering_config(cfg);
    const NumericsConfig& nc = cfg.numerics;
    const PacketScatter S(cfg);
    const ScatterKernel& K = S.K;
    const double wbar = S.wbar;

    // proposal
    const double sc = units::nm_to_inv_ev(cfg.cm.sigma_perp), scz = units::nm_to_inv_ev(cfg.cm.sigma_z);
    const double sg = units::nm_to_inv_ev(cfg.photon.sigma_perp), sgz = units::nm_to_inv_ev(cfg.photon.sigma_z);
    const double qc = 2 * cfg.cm.n + std::abs(cfg.cm.l) + 1, qg = 2 * cfg.photon.n_gamma + std::abs(cfg.photon.l_gamma) + 1;
    const double s_perp = 1.3 * std::hypot(std::sqrt(qc / 2.0) / sc, std::sqrt(qg / 2.0) / sg);
    const double s_z = 1.3 * std::hypot(std::sqrt((2.0 * cfg.cm.k + 1.0) / 2.0) / scz,
                                        std::sqrt((2.0 * cfg.photon.k_gamma + 1.0) / 2.0) / sgz);
    const double s_w = 1.3 * std::sqrt((2.0 * cfg.photon.k_gamma + 1.0) / 2.0) / sgz;
    const Vector3d p_mean0(0.0, 0.0, cfg.cm.mean_pz + cfg.photon.mean_kz);
    const double gam = nc.gamma_reg;
    const double pref_norm = 1.0 / std::pow(kTwoPi, 6);

    const int batch = 2048;
    const int n_batches = (nc.mc_samples + batch - 1) / batch;
    std::vector<SampleResult> res(n_batches);

    parallel_for(n_batches, nc.workers, [&](int bi) {
        std::mt19937_64 rng(stream_seed(nc.seed, bi));
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        std::normal_distribution<double> nrm(0.0, 1.0);
        const int count = std::min(batch, nc.mc_samples - bi * batch);
        SampleResult acc;
        for (int s = 0; s < count; ++s) {
            // direction of k_f
            const double cth = 2.0 * uni(rng) - 1.0, phf = kTwoPi * uni(rng);
            const double sth = std::sqrt(std::max(0.0, 1.0 - cth * cth));
            const Vector3d uf(sth * std::cos(phf), sth * std::sin(phf), cth);
            const Vector3d mu = p_mean0 - wbar * uf;
            const double z1 = nrm(rng), z2 = nrm(rng), z3 = nrm(rng);
            const Vector3d Pf = mu + Vector3d(s_perp * z1, s_perp * z2, s_z * z3);
            double log_pdf_p = -0.5 * (z1 * z1 + z2 * z2 + z3 * z3) - 1.5 * std::log(kTwoPi) -
                               std::log(s_perp * s_perp * s_z);
            // resonance pole in omega_f of the absorb-first denominator
            const double mt = K.mt;
            const double a = 1.0 - Pf.dot(uf) / mt;
            double pole = 0.0;
            double best = 1e300;
            for (size_t lv = 0; lv < K.levels.size(); ++lv) {
                const double dlt = K.energies[lv] - K.e1;
                if (dlt <= 0.0) continue;
                const double disc = mt * mt * a * a - 2.0 * mt * dlt;
                if (disc < 0.0) continue;
                const double p = 2.0 * mt * dlt / (mt * a + std::sqrt(disc));
                if (std::abs(p - wbar) < best) {
                    best = std::abs(p - wbar);
                    pole = p;
                }
            }
            const bool use_cauchy = best < 12.0 * s_w;
            if (use_cauchy && !(gam > 0.0)) throw DomainError("scattering near a resonance needs gamma_reg > 0");
            double wf;
            if (!use_cauchy || uni(rng) < 0.5) wf = wbar + s_w * nrm(rng);
            else wf = pole + 0.5 * gam * std::tan(units::pi * (uni(rng) - 0.5));
            const double zg = (wf - wbar) / s_w;
            double pdf_w = std::exp(-0.5 * zg * zg) / (std::sqrt(kTwoPi) * s_w);
            if (use_cauchy) {
                const double hw = 0.5 * gam, dw = wf - pole;
                pdf_w = 0.5 * pdf_w + 0.5 * hw / (units::pi * (dw * dw + hw * hw));
            }
            const double pdf = std::exp(log_pdf_p) * pdf_w / (4.0 * units::pi);
            double f = 0.0;
            if (wf > 0.0) {
                const Vector3d kf = wf * uf;
                for (int lam_f : {1, -1}) f += std::norm(S.amplitude(Pf, kf, lam_f));
                f *= wf * wf * pref_norm;
            }
            const double v = f / pdf;
            acc.sum += v;
            acc.sum2 += v * v;
        }
        res[bi] = acc;
    });

    double s1 = 0.0, s2 = 0.0;
    for (const SampleResult& r : res) {
        s1 += r.sum;
        s2 += r.sum2;
    }
    const double n = nc.mc_samples;
    ProbabilityResult out;
    out.value = s1 / n;
    out.error = std::sqrt(std::max(0.0, s2 / n - out.value * out.value) / n);
    if (out.error > 0.1 * std::abs(out.value))
        out.warnings.push_back("scattering probability: Monte Carlo error above 10 percent; raise mc_samples");
    return out;
}

}  // namespace vortex
