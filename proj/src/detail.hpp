#pragma once

#include <cmath>
#include <cstdlib>

#include "vortexlab/atom.hpp"
#include "vortexlab/packets.hpp"

namespace vortex::detail {

// Amplitude support of LG / HG profiles in units of 1/sigma.
inline double lg_support(int n, int l, double pad = 7.5) { return std::sqrt(2.0 * (2 * n + std::abs(l) + 1)) + pad; }
inline double hg_support(int k, double pad = 7.5) { return std::sqrt(2.0 * k + 1.0) + pad; }

struct AngleRange {
    double lo = 0.0, hi = 0.0;
    bool empty() const { return !(hi > lo); }
};

// Polar-angle window holding the photon packet at energy omega.
inline AngleRange photon_cone(const PhotonPacketSpec& ph, double omega) {
    const double sp = units::nm_to_inv_ev(ph.sigma_perp), sz = units::nm_to_inv_ev(ph.sigma_z);
    const double s = lg_support(ph.n_gamma, ph.l_gamma) / (sp * omega);
    const double th_lg = s < 1.0 ? std::asin(s) : units::pi;
    const double dz = hg_support(ph.k_gamma) / sz;
    auto acos_c = [](double c) { return std::acos(std::max(-1.0, std::min(1.0, c))); };
    AngleRange r;
    r.lo = acos_c((ph.mean_kz + dz) / omega);
    const double th_hg = acos_c((ph.mean_kz - dz) / omega);
    r.hi = th_hg <= 0.5 * units::pi ? std::min(th_hg, th_lg) : th_hg;
    return r;
}

// Angular node count that still resolves the impact-parameter phase
// e^{-i k_perp . b} across a span of `phase` radians.
inline int phase_resolved_nodes(int base, double phase, double per_rad, int pad) {
    if (!(phase > 0.0)) return base;
    return std::max(base, static_cast<int>(std::ceil(per_rad * phase)) + pad);
}

// Largest transverse photon momentum times b.
inline double kperp_b(const PhotonPacketSpec& ph, double omega, double b_inv_ev) {
    const AngleRange c = photon_cone(ph, omega);
    return omega * std::sin(std::min(c.hi, 0.5 * units::pi)) * b_inv_ev;
}

inline double transition_gap(const TransitionSpec& t) {
    return bound_energy(t.atom, t.final.n) - bound_energy(t.atom, t.initial.n);
}

}  // namespace vortex::detail
