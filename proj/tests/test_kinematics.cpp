#include <doctest.h>

#include <cmath>
#include <random>

#include "vortexlab/atom.hpp"
#include "vortexlab/kinematics.hpp"
#include "vortexlab/quadrature.hpp"

using namespace vortex;
using units::pi;

namespace {

TransitionSpec h_transition(BoundState f) {
    TransitionSpec t;
    t.atom = {1, 1.0};
    t.final = f;
    return t;
}

double de_of(const TransitionSpec& t) { return bound_energy(t.atom, t.final.n) - bound_energy(t.atom, t.initial.n); }

// energy balance of absorption with P_i = P_f - k
double absorption_residual(const TransitionSpec& t, double w, const Vector3d& Pf, const Vector3d& khat) {
    const double mt = t.atom.total_mass();
    const Vector3d Pi = Pf - w * khat;
    return w + Pi.squaredNorm() / (2 * mt) - de_of(t) - Pf.squaredNorm() / (2 * mt);
}

// energy balance of scattering with P_i = P_f + k_f - k_i
double scattering_residual(const TransitionSpec& t, double wi, const Vector3d& ki_hat, const Vector3d& kf,
                           const Vector3d& Pf) {
    const double mt = t.atom.total_mass();
    const Vector3d Pi = Pf + kf - wi * ki_hat;
    return wi + Pi.squaredNorm() / (2 * mt) - kf.norm() - de_of(t) - Pf.squaredNorm() / (2 * mt);
}

Vector3d unit(double th, double ph) {
    return {std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th)};
}

}  // namespace

TEST_CASE("triangle decomposition") {
    auto g = triangle_decompose(3, 4, 5);
    REQUIRE(g.valid);
    CHECK(std::abs(g.area - 6.0) < 1e-12);
    CHECK(std::abs(g.alpha - std::acos(0.6)) < 1e-12);
    CHECK_FALSE(triangle_decompose(1, 1, 3).valid);
    CHECK_FALSE(triangle_decompose(1, 2, 3).valid);

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    int seen = 0;
    while (seen < 1000) {
        const double a = u(rng), b = u(rng), c = u(rng);
        const auto t = triangle_decompose(a, b, c);
        if (!t.valid) continue;
        ++seen;
        CHECK(std::abs(t.alpha + t.beta + t.gamma - pi) < 1e-12);
        CHECK(std::abs(0.5 * c * a * std::sin(t.alpha) - t.area) < 1e-12 * t.area + 1e-13);
        CHECK(std::abs(0.5 * b * a * std::sin(t.beta) - t.area) < 1e-12 * t.area + 1e-13);
        CHECK(std::abs(0.5 * c * b * std::sin(t.gamma) - t.area) < 1e-12 * t.area + 1e-13);
        CHECK(std::abs(b * b - (a * a + c * c - 2 * a * c * std::cos(t.alpha))) < 1e-10 * (a * a + b * b + c * c));
        // both terms close the vector triangle P_i + k = P_f
        const double pf = 0.4;
        for (int s : {1, -1}) {
            const Vector3d Pi = a * unit(pi / 2, pf - s * t.alpha), k = b * unit(pi / 2, pf + s * t.gamma);
            CHECK((Pi + k - c * unit(pi / 2, pf)).norm() < 1e-10 * c);
        }
    }
}

TEST_CASE("cylindrical decomposition reproduces the transverse delta") {
    // int d^2P_i d^2k G(k - k0) delta^2(P_i + k - P_f) = 1 for a normalized gaussian G.
    // With a^2 = (u1 + u2)/2 + (u2 - u1)/2 cos t, a da / (2 Delta) = dt.
    const double c = 2.0, phi_f = 0.3, s = 0.15;
    const Vector3d k0(0.9, 1.1, 0.0);
    auto G = [&](const Vector3d& k) { return std::exp(-(k - k0).squaredNorm() / (2 * s * s)) / (2 * pi * s * s); };
    const auto rb = quad::composite_legendre(16, 40, 0.0, k0.norm() + 10 * s);
    const auto rt = quad::gauss_legendre(200, 0.0, pi);
    double total = 0;
    for (int i = 0; i < rb.x.size(); ++i) {
        const double b = rb.x[i];
        const double u1 = (c - b) * (c - b), u2 = (c + b) * (c + b);
        double inner = 0;
        for (int j = 0; j < rt.x.size(); ++j) {
            const double a = std::sqrt(0.5 * (u1 + u2) + 0.5 * (u2 - u1) * std::cos(rt.x[j]));
            const auto g = triangle_decompose(a, b, c);
            if (!g.valid) continue;
            for (int sg : {1, -1}) inner += rt.w[j] * G(b * unit(pi / 2, phi_f + sg * g.gamma));
        }
        total += rb.w[i] * b * inner;
    }
    CHECK(std::abs(total - 1.0) < 1e-3);
}

TEST_CASE("absorption resonance root") {
    const auto t = h_transition({2, 1, 1});
    const double mt = t.atom.total_mass(), de = de_of(t);
    const auto r0 = absorption_resonant_omega(t, 0.0, 1.0);
    REQUIRE_FALSE(r0.forbidden);
    CHECK(std::abs(r0.omega - (std::sqrt(mt * mt + 2 * mt * de) - mt)) < 1e-6);
    CHECK(std::abs(r0.omega - (de - de * de / (2 * mt))) < 1e-12);
    CHECK(std::abs(r0.jacobian - 1.0) < 1e-7);

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> uc(-1.0, 1.0), up(0.0, 5e4);
    for (int i = 0; i < 2000; ++i) {
        const double P = up(rng), ct = uc(rng);
        const auto r = absorption_resonant_omega(t, P, ct);
        REQUIRE_FALSE(r.forbidden);
        const Vector3d khat = unit(std::acos(ct), 0.0);
        CHECK(std::abs(absorption_residual(t, r.omega, {0, 0, P}, khat)) < 1e-10);
        CHECK(r.jacobian > 0);
    }
    // monotone in cos Theta
    for (double P : {0.0, 1e3, 3e4}) {
        double prev = -1;
        for (int i = 0; i <= 200; ++i) {
            const double w = absorption_resonant_omega(t, P, -1.0 + 2.0 * i / 200).omega;
            if (P > 0) CHECK(w > prev);
            prev = w;
        }
    }
    // no change of the electronic state: no positive root
    const auto el = absorption_resonant_omega(h_transition({1, 0, 0}), 100.0, 0.5);
    CHECK(el.forbidden);
    CHECK(el.omega == 0.0);
}

TEST_CASE("scattering resonance root") {
    const auto el = h_transition({1, 0, 0});
    // forward elastic: photon passes through
    const double kf = 10.2, P = 3000.0;
    const auto f = scattering_resonant_omega(el, kf, P, 1.0, 1.0, 1.0);
    REQUIRE_FALSE(f.forbidden);
    CHECK(std::abs(f.omega - kf) < 1e-10);
    CHECK(std::abs(scattering_residual(el, f.omega, {0, 0, 1}, {0, 0, kf}, {0, 0, P})) < 1e-10);

    // Rayleigh backscatter: bisection oracle
    const Vector3d kfv(0, 0, -kf), Pf(0, 0, 2 * kf);
    const auto r = scattering_resonant_omega(el, kf, Pf.norm(), -1.0, 1.0, -1.0);
    REQUIRE_FALSE(r.forbidden);
    double lo = 0.5 * kf, hi = 2 * kf;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (scattering_residual(el, lo, {0, 0, 1}, kfv, Pf) * scattering_residual(el, mid, {0, 0, 1}, kfv, Pf) <= 0)
            hi = mid;
        else
            lo = mid;
    }
    CHECK(std::abs(r.omega - 0.5 * (lo + hi)) < 1e-10);

    // random admissible samples: positive jacobian, zero residual
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const auto inel = h_transition({2, 0, 0});
    int counted = 0;
    for (int i = 0; i < 10000; ++i) {
        const auto& t = (i % 2) ? el : inel;
        const Vector3d ki_hat = unit(std::acos(2 * u(rng) - 1), 2 * pi * u(rng));
        const Vector3d kf_v = (1.0 + 15.0 * u(rng)) * unit(std::acos(2 * u(rng) - 1), 2 * pi * u(rng));
        const Vector3d Pf_v = 2e4 * u(rng) * unit(std::acos(2 * u(rng) - 1), 2 * pi * u(rng));
        const double c1 = ki_hat.dot(kf_v) / kf_v.norm();
        const double c2 = Pf_v.norm() > 0 ? ki_hat.dot(Pf_v) / Pf_v.norm() : 1.0;
        const double c3 = Pf_v.norm() > 0 ? kf_v.dot(Pf_v) / (kf_v.norm() * Pf_v.norm()) : 1.0;
        const auto s = scattering_resonant_omega(t, kf_v.norm(), Pf_v.norm(), c1, c2, c3);
        if (s.forbidden) continue;
        ++counted;
        CHECK(s.jacobian > 0);
        CHECK(std::abs(scattering_residual(t, s.omega, ki_hat, kf_v, Pf_v)) < 1e-10);
    }
    CHECK(counted > 9000);
}
