#include "vortexlab/specfun.hpp"

#include <array>
#include <cmath>
#include <string>

#include "vortexlab/errors.hpp"

namespace vortex::specfun {

namespace {

const std::array<double, 171>& log_factorial_table() {
    static const std::array<double, 171> table = [] {
        std::array<double, 171> t{};
        for (int n = 0; n <= 170; ++n) t[n] = std::lgamma(n + 1.0);
        return t;
    }();
    return table;
}

double bessel_j_series(int m, double x) {
    const double h = 0.5 * x;
    const double h2 = h * h;
    double term = std::exp(m * std::log(h) - log_factorial(m));
    double sum = term;
    for (int k = 0; k < 500; ++k) {
        term *= -h2 / ((k + 1.0) * (k + 1.0 + m));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

// Miller backward recurrence normalized by J0 + 2 sum J_2k = 1.
double bessel_j_miller(int m, double x) {
    const double top = std::max<double>(m, x);
    int start = static_cast<int>(top + 20.0 + std::sqrt(160.0 * top));
    start += start % 2;
    double jp = 0.0, j = 1e-300, result = 0.0, norm = 0.0;
    for (int k = start; k > 0; --k) {
        const double jm = 2.0 * k / x * j - jp;
        jp = j;
        j = jm;
        if (std::abs(j) > 1e250) {
            j *= 1e-250;
            jp *= 1e-250;
            result *= 1e-250;
            norm *= 1e-250;
        }
        if (k - 1 == m) result = j;
        if ((k - 1) % 2 == 0 && k - 1 > 0) norm += 2.0 * j;
    }
    norm += j;
    return result / norm;
}

}  // namespace

double log_factorial(int n) {
    if (n < 0 || n > 170) throw DomainError("log_factorial: n out of [0,170]: " + std::to_string(n));
    return log_factorial_table()[n];
}

double hermite(int k, double x) {
    if (k < 0) throw DomainError("hermite: negative index");
    if (k > polynomial_cap) throw CapabilityError("hermite: index " + std::to_string(k) + " above cap");
    if (k == 0) return 1.0;
    double hm = 1.0, h = 2.0 * x;
    for (int j = 1; j < k; ++j) {
        const double hp = 2.0 * x * h - 2.0 * j * hm;
        hm = h;
        h = hp;
    }
    return h;
}

double assoc_laguerre(int n, double a, double x) {
    if (n < 0) throw DomainError("assoc_laguerre: negative index");
    if (a < -1.0) throw DomainError("assoc_laguerre: a < -1");
    if (n > polynomial_cap) throw CapabilityError("assoc_laguerre: index " + std::to_string(n) + " above cap");
    if (n == 0) return 1.0;
    double lm = 1.0, l = 1.0 + a - x;
    for (int k = 1; k < n; ++k) {
        const double lp = ((2.0 * k + 1.0 + a - x) * l - (k + a) * lm) / (k + 1.0);
        lm = l;
        l = lp;
    }
    return l;
}

double wigner_d(int l, int m, int mp, double theta) {
    if (l < 0 || std::abs(m) > l || std::abs(mp) > l)
        throw DomainError("wigner_d: invalid indices");
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    // d^l_{m,mp}: first index m plays the role of m' in the textbook sum
    const int a = m, b = mp;
    const double pref = 0.5 * (log_factorial(l + a) + log_factorial(l - a) + log_factorial(l + b) +
                               log_factorial(l - b));
    const int smin = std::max(0, b - a);
    const int smax = std::min(l + b, l - a);
    double sum = 0.0;
    for (int k = smin; k <= smax; ++k) {
        const int pc = 2 * l + b - a - 2 * k;
        const int ps = a - b + 2 * k;
        const double lw = pref - log_factorial(l + b - k) - log_factorial(k) - log_factorial(a - b + k) -
                          log_factorial(l - a - k);
        const double sign = ((a - b + k) % 2 == 0) ? 1.0 : -1.0;
        sum += sign * std::exp(lw) * std::pow(c, pc) * std::pow(s, ps);
    }
    return sum;
}

double bessel_j(int m, double x) {
    if (!std::isfinite(x)) throw DomainError("bessel_j: non-finite argument");
    double sign = 1.0;
    if (m < 0) {
        m = -m;
        if (m % 2) sign = -sign;
    }
    if (x < 0) {
        x = -x;
        if (m % 2) sign = -sign;
    }
    if (x == 0.0) return m == 0 ? 1.0 : 0.0;
    if (x < 2.0 || x * x < 4.0 * (m + 1)) return sign * bessel_j_series(m, x);
    return sign * bessel_j_miller(m, x);
}

double bessel_i(int m, double x) {
    if (!std::isfinite(x)) throw DomainError("bessel_i: non-finite argument");
    m = std::abs(m);
    double sign = 1.0;
    if (x < 0) {
        x = -x;
        if (m % 2) sign = -1.0;
    }
    if (x == 0.0) return m == 0 ? 1.0 : 0.0;
    const double h = 0.5 * x;
    const double h2 = h * h;
    double term = std::exp(m * std::log(h) - log_factorial(m));
    double sum = term;
    for (int k = 0; k < 5000; ++k) {
        term *= h2 / ((k + 1.0) * (k + 1.0 + m));
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return sign * sum;
}

double assoc_legendre(int l, int m, double x) {
    if (m < 0 || m > l) throw DomainError("assoc_legendre: need 0 <= m <= l");
    double pmm = 1.0;
    if (m > 0) {
        const double somx2 = std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x)));
        double fact = 1.0;
        for (int i = 1; i <= m; ++i) {
            pmm *= -fact * somx2;
            fact += 2.0;
        }
    }
    if (l == m) return pmm;
    double pmmp1 = x * (2.0 * m + 1.0) * pmm;
    if (l == m + 1) return pmmp1;
    double pll = 0.0;
    for (int ll = m + 2; ll <= l; ++ll) {
        pll = (x * (2.0 * ll - 1.0) * pmmp1 - (ll + m - 1.0) * pmm) / (ll - m);
        pmm = pmmp1;
        pmmp1 = pll;
    }
    return pll;
}

cplx sph_harm(int l, int m, double theta, double phi) {
    if (l < 0 || std::abs(m) > l) throw DomainError("sph_harm: |m| > l");
    const int am = std::abs(m);
    const double norm = std::sqrt((2.0 * l + 1.0) / (4.0 * units::pi) *
                                  std::exp(log_factorial(l - am) - log_factorial(l + am)));
    const cplx y = norm * assoc_legendre(l, am, std::cos(theta)) * std::polar(1.0, am * phi);
    if (m >= 0) return y;
    return (am % 2 ? -1.0 : 1.0) * std::conj(y);
}

cplx sph_harm_dtheta(int l, int m, double theta, double phi) {
    if (l < 0 || std::abs(m) > l) throw DomainError("sph_harm_dtheta: |m| > l");
    cplx r{0.0, 0.0};
    if (m < l) r += std::sqrt((l - m) * (l + m + 1.0)) * std::polar(1.0, -phi) * sph_harm(l, m + 1, theta, phi);
    if (m > -l) r -= std::sqrt((l + m) * (l - m + 1.0)) * std::polar(1.0, phi) * sph_harm(l, m - 1, theta, phi);
    return 0.5 * r;
}

}  // namespace vortex::specfun
