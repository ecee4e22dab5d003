#include "vortexlab/atom.hpp"

#include <cmath>
#include <sstream>

#include "vortexlab/errors.hpp"
#include "vortexlab/quadrature.hpp"
#include "vortexlab/specfun.hpp"

namespace vortex {

using specfun::wigner_d;

void validate(const AtomSpec& a) {
    if (a.Z < 1) throw DomainError("atom.Z must be >= 1");
    if (!(a.A > 0.0)) throw DomainError("atom.A must be positive");
}

void validate(const BoundState& s) {
    if (s.n < 1) throw DomainError("bound state: n must be >= 1");
    if (s.l < 0 || s.l >= s.n) throw DomainError("bound state: need 0 <= l < n");
    if (std::abs(s.m) > s.l) throw DomainError("bound state: need |m| <= l");
}

BoundState parse_bound_state(const std::string& text) {
    std::istringstream in(text);
    BoundState s;
    std::string rest;
    if (!(in >> s.n >> s.l >> s.m) || (in >> rest)) throw DomainError("bound state must read \"n l m\", got \"" + text + "\"");
    validate(s);
    return s;
}

std::string to_string(const BoundState& s) {
    static const char* letters = "spdfghi";
    std::ostringstream out;
    out << s.n << (s.l < 7 ? letters[s.l] : '?') << "(m=" << s.m << ")";
    return out.str();
}

double bound_energy(const AtomSpec& atom, int n) {
    if (n < 1) throw DomainError("bound_energy: n must be >= 1");
    const double za = atom.Z * units::alpha;
    return -za * za * atom.reduced_mass() / (2.0 * n * n);
}

namespace {

double radial_norm(const AtomSpec& atom, int n, int l) {
    const double s = 2.0 / (n * atom.a0());
    return std::sqrt(s * s * s / (2.0 * n)) *
           std::exp(0.5 * (specfun::log_factorial(n - l - 1) - specfun::log_factorial(n + l)));
}

void check_nl(int n, int l) {
    if (n < 1 || l < 0 || l >= n) throw DomainError("radial wave function: need n >= 1 and 0 <= l < n");
}

// Theta part of Y_l^m (Y = Theta(theta) e^{i m phi}) and its derivative.
struct Angular {
    double value, deriv;
};

Angular angular(int l, int m, double theta) {
    return {std::real(specfun::sph_harm(l, m, theta, 0.0)), std::real(specfun::sph_harm_dtheta(l, m, theta, 0.0))};
}

// Raw current integral in the frame with k along z, without the P factor for
// nu in {2,4}. Magnetic numbers are rotated-frame projections.
cplx raw_integral(const AtomSpec& atom, const BoundState& bi, const BoundState& bf, int nu, double k, int lambda,
                  bool dipole, double rel_tol) {
    const bool momentum_op = (nu == 1 || nu == 3);
    if (momentum_op ? bf.m != bi.m + lambda : bf.m != bi.m) return 0.0;
    const double beta = (nu <= 2) ? atom.beta_electron() : atom.beta_nucleus();
    const double q = dipole ? 0.0 : beta * k;
    const int nmax = std::max(bi.n, bf.n);
    // e^{-r(1/n_i + 1/n_f)/a0} at 40 n^2 a0 is below e^{-80}
    const double rmax = 40.0 * nmax * nmax * atom.a0();
    const int lsum = bi.l + bf.l;

    auto theta_integral = [&](double r) -> cplx {
        const int nt = std::min(400, 16 + lsum + static_cast<int>(std::ceil(0.6 * std::abs(q) * r)));
        const quad::Rule& g = quad::gauss_legendre(nt);
        const double rf = radial_wavefunction(atom, bf.n, bf.l, r);
        const double ri = radial_wavefunction(atom, bi.n, bi.l, r);
        const double dri = momentum_op ? radial_derivative(atom, bi.n, bi.l, r) : 0.0;
        cplx acc = 0.0;
        for (int j = 0; j < nt; ++j) {
            const double th = 0.5 * units::pi * (g.x[j] + 1.0);
            const double s = std::sin(th), c = std::cos(th);
            const Angular af = angular(bf.l, bf.m, th);
            const Angular ai = angular(bi.l, bi.m, th);
            const cplx ph = std::polar(1.0, q * r * c);
            double val;
            if (momentum_op) {
                val = s * dri * ai.value + c / r * ri * ai.deriv - lambda * bi.m / (r * s) * ri * ai.value;
            } else {
                val = ri * ai.value;
            }
            acc += g.w[j] * s * af.value * rf * val * ph;
        }
        return 0.5 * units::pi * acc * r * r;
    };
    cplx total = 0.0;
    // panels at multiples of the orbit size keep the adaptive scale meaningful
    const double edges[] = {0.0, 0.5 * nmax * atom.a0(), 2.0 * nmax * atom.a0(), 6.0 * nmax * atom.a0(),
                            15.0 * nmax * atom.a0(), rmax};
    // absolute floor: overlaps are O(1), momentum matrix elements O(1/a0)
    const double floor = 1e-15 * (momentum_op ? 1.0 / atom.a0() : 1.0);
    double scale = 0.0;
    for (int p = 0; p + 1 < 6; ++p) {
        auto e = quad::integrate(theta_integral, edges[p], edges[p + 1], rel_tol,
                                 std::max(floor, rel_tol * scale * 1e-2));
        total += e.value;
        scale = std::max(scale, std::abs(e.value));
    }
    total *= 2.0 * units::pi;
    if (momentum_op) total *= cplx(0.0, lambda / std::sqrt(2.0));
    return total;
}

cplx dot(const Vector3cd& a, const Vector3d& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

bool is_ground(const BoundState& s) { return s.n == 1; }

}  // namespace

double radial_wavefunction(const AtomSpec& atom, int n, int l, double r) {
    check_nl(n, l);
    const double rho = 2.0 * r / (n * atom.a0());
    return radial_norm(atom, n, l) * std::exp(-0.5 * rho) * std::pow(rho, l) *
           specfun::assoc_laguerre(n - l - 1, 2 * l + 1, rho);
}

double radial_derivative(const AtomSpec& atom, int n, int l, double r) {
    check_nl(n, l);
    const double s = 2.0 / (n * atom.a0());
    const double rho = s * r;
    const double L = specfun::assoc_laguerre(n - l - 1, 2 * l + 1, rho);
    const double dL = (n - l - 1 >= 1) ? -specfun::assoc_laguerre(n - l - 2, 2 * l + 2, rho) : 0.0;
    const double rl = std::pow(rho, l);
    const double drl = (l > 0) ? l * std::pow(rho, l - 1) : 0.0;
    return radial_norm(atom, n, l) * s * std::exp(-0.5 * rho) * (-0.5 * rl * L + drl * L + rl * dL);
}

cplx bound_wavefunction(const AtomSpec& atom, const BoundState& s, double r_nm, double theta, double phi) {
    validate(s);
    if (r_nm < 0.0) throw DomainError("bound_wavefunction: r must be >= 0");
    const double r = units::nm_to_inv_ev(r_nm);
    // eV^{3/2} -> nm^{-3/2}
    const double conv = std::pow(units::hbar_c, -1.5);
    return conv * radial_wavefunction(atom, s.n, s.l, r) * specfun::sph_harm(s.l, s.m, theta, phi);
}

Vector3cd spherical_basis(int sigma) {
    const double h = 1.0 / std::sqrt(2.0);
    switch (sigma) {
        case 1: return Vector3cd(cplx(-h, 0), cplx(0, -h), 0.0);
        case -1: return Vector3cd(cplx(h, 0), cplx(0, -h), 0.0);
        case 0: return Vector3cd(0.0, 0.0, 1.0);
        default: throw DomainError("spherical_basis: sigma must be -1, 0 or 1");
    }
}

Vector3cd helicity_vector(const Vector3d& k, int lambda) {
    if (lambda != 1 && lambda != -1) throw DomainError("helicity must be +1 or -1");
    const double kn = k.norm();
    if (!(kn > 0.0)) throw DomainError("helicity_vector: |k| must be positive");
    const double theta = std::acos(std::clamp(k.z() / kn, -1.0, 1.0));
    const double phi = std::atan2(k.y(), k.x());
    Vector3cd e = Vector3cd::Zero();
    for (int s = -1; s <= 1; ++s) e += wigner_d(1, s, lambda, theta) * std::polar(1.0, -s * phi) * spherical_basis(s);
    return e;
}

namespace closed {

bool available(const BoundState& f) { return f.n >= 1 && f.n <= 3; }

cplx j_dipole(const BoundState& f, double x, double a0, int lambda, CurrentTable table) {
    if (f.m != lambda || f.l == 0) return 0.0;
    const double x2 = x * x;
    const cplx I(0.0, 1.0);
    const bool printed = table == CurrentTable::as_printed;
    if (f.n == 2 && f.l == 1) {
        const double d = 9.0 + 4.0 * x2;
        return printed ? -16.0 * I * double(lambda + f.m) / (a0 * d * d) : 16.0 * std::sqrt(2.0) * I / (a0 * d * d);
    }
    if (f.n == 3 && f.l == 1) {
        const double d = 16.0 + 9.0 * x2;
        return printed ? -48.0 * I * (8.0 + 9.0 * x2) * double(lambda + f.m) / (a0 * d * d * d)
                       : 48.0 * std::sqrt(2.0) * I * (8.0 + 9.0 * x2) / (a0 * d * d * d);
    }
    if (f.n == 3 && f.l == 2) {
        const double d = 16.0 + 9.0 * x2;
        const double kb = x / a0;
        return printed ? 288.0 * kb * double(lambda + f.m) / (d * d) : -288.0 * std::sqrt(2.0) * kb / (d * d * d);
    }
    throw CapabilityError("no closed-form current for final state " + to_string(f));
}

cplx form_factor(const BoundState& f, double x, CurrentTable table) {
    if (f.m != 0) return 0.0;
    const double x2 = x * x;
    const cplx I(0.0, 1.0);
    const double s2 = std::sqrt(2.0);
    if (f.n == 1) return 16.0 / ((4.0 + x2) * (4.0 + x2));
    if (f.n == 2) {
        const double d3 = std::pow(9.0 + 4.0 * x2, 3);
        return f.l == 0 ? cplx(256.0 * s2 * x2 / d3) : 384.0 * s2 * I * x / d3;
    }
    if (f.n == 3) {
        const double d4 = std::pow(16.0 + 9.0 * x2, 4);
        if (f.l == 0) {
            const double c = table == CurrentTable::as_printed ? s2 : std::sqrt(3.0);
            return 432.0 * c * x2 * (16.0 + 27.0 * x2) / d4;
        }
        if (f.l == 1) return 864.0 * s2 * I * x * (16.0 + 27.0 * x2) / d4;
        return -6912.0 * std::sqrt(6.0) * x2 / d4;
    }
    throw CapabilityError("no closed-form current for final state " + to_string(f));
}

}  // namespace closed

cplx transition_current_numeric(const TransitionSpec& t, int nu, double k, int lambda, const Vector3d& Pf,
                                double rel_tol) {
    validate(t.atom);
    validate(t.initial);
    validate(t.final);
    if (nu < 1 || nu > 4) throw DomainError("current index nu must be in 1..4");
    if (lambda != 1 && lambda != -1) throw DomainError("helicity must be +1 or -1");
    if (k < 0.0) throw DomainError("k must be >= 0");
    cplx v = raw_integral(t.atom, t.initial, t.final, nu, k, lambda, t.dipole_mode, rel_tol);
    if (nu == 2 || nu == 4) v *= dot(spherical_basis(lambda), Pf);
    return v;
}

cplx transition_current_closed(const TransitionSpec& t, int nu, double k, int lambda, const Vector3d& Pf) {
    validate(t.atom);
    validate(t.initial);
    validate(t.final);
    if (nu < 1 || nu > 4) throw DomainError("current index nu must be in 1..4");
    if (lambda != 1 && lambda != -1) throw DomainError("helicity must be +1 or -1");
    if (!is_ground(t.initial) || !closed::available(t.final))
        throw CapabilityError("closed-form currents exist only from 1s to n <= 3");
    const double beta = (nu <= 2) ? t.atom.beta_electron() : t.atom.beta_nucleus();
    const double x = t.dipole_mode ? 0.0 : t.atom.a0() * beta * k;
    if (nu == 1 || nu == 3) return closed::j_dipole(t.final, x, t.atom.a0(), lambda, t.table);
    return closed::form_factor(t.final, x, t.table) * dot(spherical_basis(lambda), Pf);
}

cplx transition_current(const TransitionSpec& t, int nu, double k, int lambda, const Vector3d& Pf) {
    if (!t.numeric_only && is_ground(t.initial) && closed::available(t.final))
        return transition_current_closed(t, nu, k, lambda, Pf);
    return transition_current_numeric(t, nu, k, lambda, Pf);
}

cplx rotated_current(const TransitionSpec& t, const Vector3d& kvec, int lambda, const Vector3d& Pf) {
    const double k = kvec.norm();
    if (!(k > 0.0)) throw DomainError("rotated_current: |k| must be positive");
    const double theta = std::acos(std::clamp(kvec.z() / k, -1.0, 1.0));
    const cplx pk = dot(helicity_vector(kvec, lambda), Pf);
    const AtomSpec& a = t.atom;
    const double m = a.m(), M = a.M(), mt = a.total_mass();
    const int Z = a.Z;
    const BoundState& bi = t.initial;
    const BoundState& bf = t.final;

    if (!t.numeric_only && is_ground(bi) && closed::available(bf)) {
        const double x1 = t.dipole_mode ? 0.0 : a.a0() * a.beta_electron() * k;
        const double x3 = t.dipole_mode ? 0.0 : a.a0() * a.beta_nucleus() * k;
        cplx out = 0.0;
        if (bf.l >= 1) {
            const BoundState fr{bf.n, bf.l, lambda};
            const cplx j1 = closed::j_dipole(fr, x1, a.a0(), lambda, t.table);
            const cplx j3 = closed::j_dipole(fr, x3, a.a0(), lambda, t.table);
            out += wigner_d(bf.l, bf.m, lambda, theta) * (-j1 / m - double(Z) * j3 / M);
        }
        const BoundState f0{bf.n, bf.l, 0};
        const cplx f1 = closed::form_factor(f0, x1, t.table);
        const cplx f3 = closed::form_factor(f0, x3, t.table);
        out += wigner_d(bf.l, bf.m, 0, theta) * pk * (-f1 + double(Z) * f3) / mt;
        return out;
    }

    cplx out = 0.0;
    for (int mi = -bi.l; mi <= bi.l; ++mi) {
        const double di = wigner_d(bi.l, bi.m, mi, theta);
        if (di == 0.0) continue;
        const BoundState ri{bi.n, bi.l, mi};
        // momentum-operator currents: m_f' = m_i' + lambda
        const int mf1 = mi + lambda;
        if (std::abs(mf1) <= bf.l) {
            const double df = wigner_d(bf.l, bf.m, mf1, theta);
            if (df != 0.0) {
                const BoundState rf{bf.n, bf.l, mf1};
                const cplx j1 = raw_integral(a, ri, rf, 1, k, lambda, t.dipole_mode, 1e-10);
                const cplx j3 = raw_integral(a, ri, rf, 3, k, lambda, t.dipole_mode, 1e-10);
                out += di * df * (-j1 / m - double(Z) * j3 / M);
            }
        }
        if (std::abs(mi) <= bf.l) {
            const double df = wigner_d(bf.l, bf.m, mi, theta);
            if (df != 0.0) {
                const BoundState rf{bf.n, bf.l, mi};
                const cplx j2 = raw_integral(a, ri, rf, 2, k, lambda, t.dipole_mode, 1e-10);
                const cplx j4 = raw_integral(a, ri, rf, 4, k, lambda, t.dipole_mode, 1e-10);
                out += di * df * pk * (-j2 + double(Z) * j4) / mt;
            }
        }
    }
    return out;
}

cplx current_dot(const TransitionSpec& base, const BoundState& from, const BoundState& to, const Vector3d& kvec,
                 const Vector3cd& e, const Vector3d& P) {
    TransitionSpec t = base;
    if (is_ground(to) && !is_ground(from)) {
        // [e . J_{to<-from}(k)]^* = e^* . J_{from<-to}(-k) for transverse e
        return std::conj(current_dot(base, to, from, -kvec, e.conjugate(), P));
    }
    t.initial = from;
    t.final = to;
    const double phi = std::atan2(kvec.y(), kvec.x());
    const cplx phase = std::polar(1.0, (from.m - to.m) * phi);
    cplx out = 0.0;
    for (int lam : {1, -1}) {
        const cplx c = helicity_vector(kvec, lam).dot(e);  // conjugates the first argument
        if (std::abs(c) < 1e-15) continue;
        out += c * rotated_current(t, kvec, lam, P);
    }
    return phase * out;
}

double radiative_width_to_ground(const AtomSpec& atom, const BoundState& s, bool dipole_mode) {
    validate(atom);
    validate(s);
    if (s.n == 1) return 0.0;
    const double de = bound_energy(atom, s.n) - bound_energy(atom, 1);
    const double mt = atom.total_mass();
    // de = w + w^2 / (2 M_t), atom initially at rest
    const double w = 2.0 * de / (1.0 + std::sqrt(1.0 + 2.0 * de / mt));
    const double jac = 1.0 + w / mt;
    TransitionSpec t;
    t.atom = atom;
    t.initial = {1, 0, 0};
    t.final = s;
    t.dipole_mode = dipole_mode;
    const quad::Rule g = quad::gauss_legendre(48, 0.0, units::pi);
    double acc = 0.0;
    for (int j = 0; j < g.x.size(); ++j) {
        const double th = g.x[j];
        const Vector3d kv(w * std::sin(th), 0.0, w * std::cos(th));
        for (int lam : {1, -1}) acc += g.w[j] * std::sin(th) * std::norm(rotated_current(t, kv, lam, Vector3d::Zero()));
    }
    const double e2 = 4.0 * units::pi * units::alpha;
    return e2 * w / (8.0 * units::pi * units::pi) * 2.0 * units::pi * acc / jac;
}

}  // namespace vortex
