#include <doctest.h>

#include <cmath>

#include "vortexlab/amplitudes.hpp"
#include "vortexlab/errors.hpp"
#include "vortexlab/scans.hpp"

using namespace vortex;

namespace {

CollisionConfig rayleigh() {
    CollisionConfig c;
    c.transition.atom = {1, 1.00794};
    c.transition.initial = {1, 0, 0};
    c.transition.final = {1, 0, 0};
    c.cm.sigma_perp = 20;
    c.cm.sigma_z = 20;
    c.photon.sigma_perp = 1000;
    c.photon.sigma_z = 10000;
    c = with_consistent_mass(c);
    TransitionSpec t2p = c.transition;
    t2p.final = {2, 1, 1};
    c.photon = with_mean_energy(c.photon, resonance_energy(t2p));
    return c;
}

// elastic kinematics with the atom at rest: returns k_f along direction (theta, phi)
Vector3d elastic_kf(const CollisionConfig& c, double w, double th, double ph) {
    const double mt = c.transition.atom.total_mass();
    const Vector3d u(std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th));
    // w = wf + (w zhat - wf u)^2 / 2 mt
    double wf = w;
    for (int i = 0; i < 50; ++i) wf = w - (Vector3d(0, 0, w) - wf * u).squaredNorm() / (2 * mt);
    return wf * u;
}

}  // namespace

TEST_CASE("seagull forward amplitude has unit overlap") {
    auto c = rayleigh();
    const double w = 10.2;
    const Vector3d k(0, 0, w);
    const double e2 = 4 * units::pi * units::alpha;
    const auto& a = c.transition.atom;
    const cplx sg = scattering_amplitude_seagull(c, k, 1, k, 1);
    CHECK(std::abs(sg - e2 / (2 * a.m() * w) * (1.0 + a.m() / a.M())) < 1e-14 * std::abs(sg));
    // opposite helicities do not couple forward
    CHECK(std::abs(scattering_amplitude_seagull(c, k, 1, k, -1)) < 1e-16 * std::abs(sg));
}

TEST_CASE("second-order term against the oscillator-strength sum") {
    // dipole limit: (T - T_seagull) / T_seagull = -sum_n f_n dE_n^2 / (dE_n^2 - w^2) with the
    // hydrogen 1s -> np oscillator strengths f_2p = 0.4162, f_3p = 0.0791
    auto c = rayleigh();
    c.transition.dipole_mode = true;
    c.numerics.gamma_reg = 0.0;
    const auto& a = c.transition.atom;
    const double d2 = bound_energy(a, 2) - bound_energy(a, 1), d3 = bound_energy(a, 3) - bound_energy(a, 1);
    for (double w : {0.01, 3.0, 9.2, 11.2, 13.0}) {
        const Vector3d ki(0, 0, w);
        const Vector3d kf = elastic_kf(c, w, 1.1, 0.4);
        for (int lf : {1, -1}) {
            const cplx T = scattering_amplitude_pw(c, Vector3d::Zero(), ki, 1, ki - kf, kf, lf);
            const cplx S = scattering_amplitude_seagull(c, ki, 1, kf, lf);
            const double expect =
                -(0.4162 * d2 * d2 / (d2 * d2 - w * w) + 0.0791 * d3 * d3 / (d3 * d3 - w * w));
            const cplx r = (T - S) / S;
            CHECK(std::abs(r.real() - expect) < 2e-3 * std::max(1.0, std::abs(expect)));
            CHECK(std::abs(r.imag()) < 1e-6);
        }
    }
}

TEST_CASE("resonant term dominates the seagull near resonance") {
    auto c = rayleigh();
    c.numerics.gamma_reg = 4e-7;
    TransitionSpec t2p = c.transition;
    t2p.final = {2, 1, 1};
    const double w = resonance_energy(t2p);
    const Vector3d ki(0, 0, w);
    const Vector3d kf = elastic_kf(c, w, 0.9, 0.0);
    const cplx T = scattering_amplitude_pw(c, Vector3d::Zero(), ki, 1, ki - kf, kf, 1);
    const cplx S = scattering_amplitude_seagull(c, ki, 1, kf, 1);
    CHECK(std::abs(T - S) > 1e3 * std::abs(S));
    // truncation: n_max = 2 differs from 3 only by the off-resonant 3p share near the 2p line
    auto c2 = c;
    c2.numerics.intermediate_n_max = 2;
    const cplx T2 = scattering_amplitude_pw(c2, Vector3d::Zero(), ki, 1, ki - kf, kf, 1);
    CHECK(std::abs(T2 - T) < 1e-4 * std::abs(T));
}

TEST_CASE("packet amplitude: fast kernel equals the plane-wave T-matrix route") {
    auto c = rayleigh();
    c.numerics.gamma_reg = 4e-7;
    c.geometry = {15.0, 0.4};
    const double w = mean_photon_energy(c.photon);
    for (double th : {0.3, 1.4, 2.6}) {
        const Vector3d u(std::sin(th), 0.0, std::cos(th));
        for (double dw : {-0.03, 0.0, 0.02}) {
            const Vector3d kf = (w + dw) * u;
            const Vector3d Pf = Vector3d(0, 0, c.photon.mean_kz) - kf + Vector3d(3.0, -2.0, 4.0);
            for (int lf : {1, -1}) {
                const cplx fast = scattering_packet_amplitude(c, Pf, kf, lf);
                const cplx ref = scattering_packet_amplitude(c, Pf, kf, lf, true);
                CHECK(std::abs(fast - ref) < 1e-7 * std::abs(ref) + 1e-300);
            }
        }
    }
}

TEST_CASE("Monte Carlo estimator") {
    auto c = rayleigh();
    c.numerics.gamma_reg = 4e-7;
    c.numerics.mc_samples = 2048;
    c.numerics.seed = 42;
    const auto a = scattering_probability(c);
    const auto b = scattering_probability(c);
    CHECK(a.value == b.value);
    CHECK(a.error == b.error);
    c.numerics.workers = 3;
    c.numerics.mc_samples = 4 * 2048 + 17;
    const auto p3 = scattering_probability(c);
    c.numerics.workers = 1;
    const auto p1 = scattering_probability(c);
    CHECK(p3.value == p1.value);

    // error ~ 1/sqrt(N) over a decade
    c.numerics.mc_samples = 2048;
    const auto small = scattering_probability(c);
    c.numerics.mc_samples = 20480;
    const auto big = scattering_probability(c);
    const double ratio = small.error / big.error;
    CHECK(ratio > std::sqrt(10.0) / 1.5);
    CHECK(ratio < std::sqrt(10.0) * 1.5);
    CHECK(std::abs(small.value - big.value) < 3 * std::hypot(small.error, big.error));

    c.numerics.seed = 43;
    c.numerics.mc_samples = 2048;
    CHECK(scattering_probability(c).value != small.value);

    // no overlap
    auto far = c;
    far.geometry.b = 20.0 * (c.cm.sigma_perp + c.photon.sigma_perp);
    far.numerics.mc_samples = 256;
    const auto z = scattering_probability(far);
    CHECK(z.value <= 3 * z.error + 1e-30);
    CHECK(z.value < 1e-12 * small.value);
}

TEST_CASE("capability limits") {
    auto c = rayleigh();
    c.numerics.gamma_reg = 4e-7;
    c.transition.final = {2, 0, 0};
    CHECK_THROWS_AS(scattering_probability(c), CapabilityError);
    c.transition.initial = {2, 0, 0};
    c.transition.final = {1, 0, 0};
    CHECK_THROWS_AS(scattering_amplitude_seagull(c, {0, 0, 1}, 1, {0, 1, 0}, 1), CapabilityError);
    auto z = rayleigh();
    z.numerics.gamma_reg = 0.0;
    CHECK_THROWS_AS(scattering_probability(z), DomainError);
}
