#pragma once

#include <string>

#include <Eigen/Core>

#include "vortexlab/units.hpp"

namespace vortex {

using Eigen::Vector3cd;
using Eigen::Vector3d;

struct AtomSpec {
    int Z = 1;
    double A = 1.0;

    double m() const { return units::electron_mass; }
    double M() const { return A * units::amu; }
    double total_mass() const { return m() + M(); }
    double reduced_mass() const { return m() * M() / (m() + M()); }
    // Bohr radius in 1/eV and nm
    double a0() const { return 1.0 / (reduced_mass() * Z * units::alpha); }
    double a0_nm() const { return units::inv_ev_to_nm(a0()); }
    double beta_electron() const { return M() / total_mass(); }
    double beta_nucleus() const { return -m() / total_mass(); }
};

struct BoundState {
    int n = 1;
    int l = 0;
    int m = 0;
    bool operator==(const BoundState&) const = default;
};

// Which closed-form current table to use. `as_printed` reproduces the
// published table verbatim, including its normalization slips.
enum class CurrentTable { corrected, as_printed };

struct TransitionSpec {
    AtomSpec atom;
    BoundState initial{1, 0, 0};
    BoundState final{2, 1, 1};
    bool dipole_mode = false;    // e^{ik.r} -> 1 inside the currents
    bool numeric_only = false;   // skip closed forms (cross-validation)
    CurrentTable table = CurrentTable::corrected;
};

void validate(const AtomSpec& a);
void validate(const BoundState& s);
BoundState parse_bound_state(const std::string& text);
std::string to_string(const BoundState& s);

double bound_energy(const AtomSpec& atom, int n);

// R_nl(r) and dR/dr with r in 1/eV.
double radial_wavefunction(const AtomSpec& atom, int n, int l, double r);
double radial_derivative(const AtomSpec& atom, int n, int l, double r);

// psi_nlm at (r [nm], theta, phi), in nm^{-3/2}.
cplx bound_wavefunction(const AtomSpec& atom, const BoundState& s, double r_nm, double theta, double phi);

// Spherical basis chi_sigma and the helicity vector e_lambda(k).
Vector3cd spherical_basis(int sigma);
Vector3cd helicity_vector(const Vector3d& k, int lambda);

// Current j^(nu) in the frame with k along z; initial/final magnetic numbers
// are rotated-frame projections. For nu in {2,4} the factor chi_lambda . Pf
// is applied, with Pf expressed in that frame. k in eV, result in eV (nu=1,3)
// or eV (nu=2,4, through Pf).
cplx transition_current_numeric(const TransitionSpec& t, int nu, double k, int lambda, const Vector3d& Pf,
                                double rel_tol = 1e-10);
cplx transition_current_closed(const TransitionSpec& t, int nu, double k, int lambda, const Vector3d& Pf);
cplx transition_current(const TransitionSpec& t, int nu, double k, int lambda, const Vector3d& Pf);

// Full rotated current J_lambda(k, Pf) in the lab frame, without the
// e^{i(m_i - m_f) phi_k} phase.
cplx rotated_current(const TransitionSpec& t, const Vector3d& kvec, int lambda, const Vector3d& Pf);

// e . J_{to <- from}(k, P) for an arbitrary polarization vector transverse to
// k, including the azimuthal phase. Uses closed forms whenever one end is 1s.
cplx current_dot(const TransitionSpec& base, const BoundState& from, const BoundState& to, const Vector3d& kvec,
                 const Vector3cd& e, const Vector3d& P);

// Partial radiative width of `s` into the ground state, by angular quadrature
// of the emission current (eV).
double radiative_width_to_ground(const AtomSpec& atom, const BoundState& s, bool dipole_mode = false);

namespace closed {
// Coefficient of delta_{m_f, lambda} in j^(1,3) (eV) and the form factor
// coefficient of delta_{m_f,0} in j^(2,4); x = a0 * beta * k.
bool available(const BoundState& f);
cplx j_dipole(const BoundState& f, double x, double a0, int lambda, CurrentTable table);
cplx form_factor(const BoundState& f, double x, CurrentTable table);
}  // namespace closed

}  // namespace vortex
