#include "vortexlab/kinematics.hpp"

#include <algorithm>
#include <cmath>

#include "vortexlab/errors.hpp"

namespace vortex {

TriangleGeometry triangle_decompose(double p_i_perp, double k_perp, double p_f_perp) {
    if (p_i_perp < 0.0 || k_perp < 0.0 || p_f_perp < 0.0) throw DomainError("triangle legs must be >= 0");
    TriangleGeometry g;
    const double a = p_i_perp, b = k_perp, c = p_f_perp;
    if (!(c < a + b && a < c + b && b < a + c)) return g;
    // Heron in the cancellation-free ordering
    double s[3] = {a, b, c};
    std::sort(s, s + 3, [](double x, double y) { return x > y; });
    const double x = s[0], y = s[1], z = s[2];
    const double h = (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z));
    if (!(h > 0.0)) return g;
    g.valid = true;
    g.area = 0.25 * std::sqrt(h);
    g.alpha = std::atan2(4.0 * g.area, c * c + a * a - b * b);
    g.beta = std::atan2(4.0 * g.area, a * a + b * b - c * c);
    g.gamma = std::atan2(4.0 * g.area, c * c + b * b - a * a);
    return g;
}

ResonanceRoot absorption_resonant_omega(const TransitionSpec& t, double Pf_mag, double cos_theta) {
    const double mt = t.atom.total_mass();
    const double de = bound_energy(t.atom, t.final.n) - bound_energy(t.atom, t.initial.n);
    ResonanceRoot r;
    const double A = mt - Pf_mag * cos_theta;
    const double disc = A * A + 2.0 * mt * de;
    if (de <= 0.0 || disc < 0.0) return r;
    const double sq = std::sqrt(disc);
    if (!(A + sq > 0.0)) return r;
    r.omega = 2.0 * mt * de / (A + sq);
    r.jacobian = std::abs((r.omega + A) / mt);
    r.forbidden = !(r.omega > 0.0);
    return r;
}

ResonanceRoot scattering_resonant_omega(const TransitionSpec& t, double kf_mag, double Pf_mag, double cos_t1,
                                        double cos_t2, double cos_t3) {
    const double mt = t.atom.total_mass();
    const double de = bound_energy(t.atom, t.final.n) - bound_energy(t.atom, t.initial.n);
    ResonanceRoot r;
    const double B = mt - Pf_mag * cos_t2 - kf_mag * cos_t1;
    const double C = 2.0 * mt * (de + kf_mag) - 2.0 * Pf_mag * kf_mag * cos_t3 - kf_mag * kf_mag;
    const double disc = B * B + C;
    if (disc < 0.0) return r;
    const double sq = std::sqrt(disc);
    if (!(B + sq > 0.0)) return r;
    r.omega = C / (B + sq);
    r.jacobian = std::abs((r.omega + B) / mt);
    r.forbidden = !(r.omega > 0.0);
    return r;
}

}  // namespace vortex
