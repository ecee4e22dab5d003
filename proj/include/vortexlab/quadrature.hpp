#pragma once

#include <cmath>
#include <vector>

#include <Eigen/Core>

#include "vortexlab/errors.hpp"

namespace vortex::quad {

struct Rule {
    Eigen::ArrayXd x;
    Eigen::ArrayXd w;
};

// Gauss-Legendre on [-1, 1]; cached, thread safe.
const Rule& gauss_legendre(int n);
// Gauss-Legendre mapped to [a, b].
Rule gauss_legendre(int n, double a, double b);
// Gauss-Hermite for weight exp(-x^2); Golub-Welsch.
const Rule& gauss_hermite(int n);
// Composite Gauss-Legendre: `panels` equal panels of order n on [a, b].
Rule composite_legendre(int n, int panels, double a, double b);

template <class T>
struct Estimate {
    T value;
    double error;
};

namespace detail {
inline const double gk_xk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline const double gk_wk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline const double gk_wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
auto gk15(F& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    auto fc = f(c);
    auto k = fc * gk_wk[7];
    auto g = fc * gk_wg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * gk_xk[j];
        auto s = f(c - dx) + f(c + dx);
        k += s * gk_wk[j];
        if (j % 2 == 1) g += s * gk_wg[j / 2];
    }
    return Estimate<decltype(k)>{k * h, std::abs(k * h - g * h)};
}

template <class F, class T>
Estimate<T> gk_recurse(F& f, double a, double b, Estimate<T> whole, double abs_tol, int depth) {
    if (whole.error <= abs_tol || depth <= 0) return whole;
    const double c = 0.5 * (a + b);
    auto left = gk15(f, a, c);
    auto right = gk15(f, c, b);
    auto l = gk_recurse(f, a, c, left, 0.5 * abs_tol, depth - 1);
    auto r = gk_recurse(f, c, b, right, 0.5 * abs_tol, depth - 1);
    return {l.value + r.value, l.error + r.error};
}
}  // namespace detail

// Adaptive Gauss-Kronrod (7/15) bisection. T may be real or complex.
// The absolute target is max(abs_tol, rel_tol * |coarse estimate|).
template <class F>
auto integrate(F f, double a, double b, double rel_tol, double abs_tol = 0.0, int max_depth = 30) {
    auto coarse = detail::gk15(f, a, b);
    // refine the scale once on a 4-panel pass so that near-cancelling coarse values do not set it
    double scale = std::abs(coarse.value);
    {
        const double h = (b - a) / 4;
        double s = 0.0;
        decltype(coarse.value) acc{};
        for (int i = 0; i < 4; ++i) {
            auto e = detail::gk15(f, a + i * h, a + (i + 1) * h);
            acc += e.value;
            s += std::abs(e.value);
        }
        scale = std::max(std::abs(acc), 1e-3 * s);
    }
    const double target = std::max(abs_tol, rel_tol * scale);
    auto r = detail::gk_recurse(f, a, b, coarse, target, max_depth);
    if (r.error > 10 * target && r.error > abs_tol)
        throw NumericError("adaptive quadrature did not converge", r.error / std::max(scale, 1e-300));
    return r;
}

// Adaptive Simpson on [a, b].
template <class F>
double simpson(F f, double a, double b, double rel_tol, double abs_tol = 0.0, int max_depth = 40) {
    struct Rec {
        F& f;
        double run(double a, double b, double fa, double fm, double fb, double whole, double tol, int depth) {
            const double m = 0.5 * (a + b);
            const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
            const double flm = f(lm), frm = f(rm);
            const double left = (m - a) / 6 * (fa + 4 * flm + fm);
            const double right = (b - m) / 6 * (fm + 4 * frm + fb);
            const double diff = left + right - whole;
            if (depth <= 0 || std::abs(diff) <= 15 * tol) return left + right + diff / 15;
            return run(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
                   run(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
        }
    };
    Rec rec{f};
    // seed with a coarse composite pass to fix the tolerance scale
    const int seed = 16;
    const double h = (b - a) / seed;
    std::vector<double> fx(seed + 1), fm(seed);
    double coarse = 0.0;
    for (int i = 0; i <= seed; ++i) fx[i] = f(a + i * h);
    for (int i = 0; i < seed; ++i) {
        fm[i] = f(a + (i + 0.5) * h);
        coarse += h / 6 * (fx[i] + 4 * fm[i] + fx[i + 1]);
    }
    const double tol = std::max(abs_tol, rel_tol * std::abs(coarse));
    double total = 0.0;
    for (int i = 0; i < seed; ++i) {
        const double lo = a + i * h, hi = lo + h;
        const double whole = h / 6 * (fx[i] + 4 * fm[i] + fx[i + 1]);
        total += rec.run(lo, hi, fx[i], fm[i], fx[i + 1], whole, tol / seed, max_depth);
    }
    return total;
}

}  // namespace vortex::quad
