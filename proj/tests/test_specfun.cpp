#include <doctest.h>

#include <cmath>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/hermite.hpp>
#include <boost/math/special_functions/laguerre.hpp>
#include <boost/math/special_functions/legendre.hpp>
#include <boost/math/special_functions/spherical_harmonic.hpp>

#include "vortexlab/errors.hpp"
#include "vortexlab/specfun.hpp"

using namespace vortex;
namespace sf = vortex::specfun;
namespace bm = boost::math;

namespace {

// Wigner d^j_{mp,m} from the explicit factorial sum (row mp, column m)
double wigner_sum(int j, int mp, int m, double th) {
    long double acc = 0;
    const long double c = std::cos(th / 2), s = std::sin(th / 2);
    auto f = [](int n) { return bm::factorial<long double>(n); };
    const long double pre = std::sqrt(f(j + mp) * f(j - mp) * f(j + m) * f(j - m));
    for (int k = std::max(0, m - mp); k <= std::min(j + m, j - mp); ++k) {
        const long double den = f(j + m - k) * f(k) * f(mp - m + k) * f(j - mp - k);
        acc += ((mp - m + k) % 2 ? -1.0L : 1.0L) * std::pow(c, 2 * j + m - mp - 2 * k) *
               std::pow(s, mp - m + 2 * k) / den;
    }
    return static_cast<double>(pre * acc);
}

}  // namespace

TEST_CASE("log_factorial matches lgamma") {
    for (int n : {0, 1, 2, 5, 20, 100, 170}) CHECK(std::abs(sf::log_factorial(n) - std::lgamma(n + 1.0)) < 1e-10);
    CHECK_THROWS_AS(sf::log_factorial(-1), DomainError);
}

TEST_CASE("hermite against boost") {
    for (int k = 0; k <= 30; ++k)
        for (double x : {-4.5, -1.0, 0.0, 0.3, 2.0, 6.0}) {
            const double ref = bm::hermite(k, x);
            CHECK(std::abs(sf::hermite(k, x) - ref) <= 1e-11 * std::max(1.0, std::abs(ref)));
        }
}

TEST_CASE("assoc_laguerre against boost") {
    for (int n = 0; n <= 20; ++n)
        for (int a = 0; a <= 8; ++a)
            for (double x : {0.0, 0.2, 1.5, 7.0, 25.0}) {
                const double ref = bm::laguerre(n, a, x);
                CHECK(std::abs(sf::assoc_laguerre(n, a, x) - ref) <= 1e-10 * std::max(1.0, std::abs(ref)));
            }
    // a = -1 identity: L_n^{-1}(x) = -(x/n) L_{n-1}^1(x)
    for (int n = 1; n <= 6; ++n)
        CHECK(std::abs(sf::assoc_laguerre(n, -1, 2.5) + 2.5 / n * bm::laguerre(n - 1, 1, 2.5)) < 1e-10);
}

TEST_CASE("bessel J and I against boost") {
    for (int m = -8; m <= 8; ++m)
        for (double x : {0.0, 1e-6, 0.5, 3.0, 12.0, 40.0}) {
            const double j = bm::cyl_bessel_j(m, x);
            CHECK(std::abs(sf::bessel_j(m, x) - j) < 1e-12 + 1e-10 * std::abs(j));
            const double i = bm::cyl_bessel_i(m, x);
            CHECK(std::abs(sf::bessel_i(m, x) - i) <= 1e-10 * std::max(1e-300, std::abs(i)) + 1e-300);
        }
}

TEST_CASE("associated legendre and spherical harmonics against boost") {
    for (int l = 0; l <= 8; ++l)
        for (int m = 0; m <= l; ++m)
            for (double x : {-0.9, -0.2, 0.0, 0.5, 0.99}) {
                const double ref = bm::legendre_p(l, m, x);
                CHECK(std::abs(sf::assoc_legendre(l, m, x) - ref) < 1e-11 * std::max(1.0, std::abs(ref)));
            }
    for (int l = 0; l <= 5; ++l)
        for (int m = -l; m <= l; ++m) {
            const double th = 0.73, ph = -1.1;
            const std::complex<double> ref = bm::spherical_harmonic(l, m, th, ph);
            CHECK(std::abs(sf::sph_harm(l, m, th, ph) - ref) < 1e-12);
            // derivative against a central difference
            const double h = 1e-5;
            const auto fd = (sf::sph_harm(l, m, th + h, ph) - sf::sph_harm(l, m, th - h, ph)) / (2 * h);
            CHECK(std::abs(sf::sph_harm_dtheta(l, m, th, ph) - fd) < 1e-7);
        }
}

TEST_CASE("wigner d against the factorial sum") {
    for (int l = 0; l <= 6; ++l)
        for (int m = -l; m <= l; ++m)
            for (int mp = -l; mp <= l; ++mp)
                for (double th : {0.0, 0.3, 1.2, 2.9, units::pi})
                    CHECK(std::abs(sf::wigner_d(l, m, mp, th) - wigner_sum(l, m, mp, th)) < 1e-12);
    CHECK(std::abs(sf::wigner_d(1, 1, 0, 0.4) + std::sin(0.4) / std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("wigner d is orthogonal in its column index") {
    const double th = 0.81;
    for (int l = 1; l <= 4; ++l)
        for (int m = -l; m <= l; ++m)
            for (int mq = -l; mq <= l; ++mq) {
                double s = 0;
                for (int mp = -l; mp <= l; ++mp) s += sf::wigner_d(l, m, mp, th) * sf::wigner_d(l, mq, mp, th);
                CHECK(std::abs(s - (m == mq ? 1.0 : 0.0)) < 1e-12);
            }
}

TEST_CASE("relation between d^l_{m0} and Y_lm") {
    for (int l = 0; l <= 4; ++l)
        for (int m = -l; m <= l; ++m) {
            const double th = 1.3;
            const double lhs = sf::wigner_d(l, m, 0, th);
            const double rhs = std::sqrt(4 * units::pi / (2 * l + 1)) * std::real(sf::sph_harm(l, m, th, 0.0));
            CHECK(std::abs(lhs - rhs) < 1e-12);
        }
}

TEST_CASE("polynomial cap is enforced") {
    CHECK_THROWS_AS(sf::hermite(sf::polynomial_cap + 1, 0.0), CapabilityError);
    CHECK_THROWS_AS(sf::assoc_laguerre(sf::polynomial_cap + 1, 0, 1.0), CapabilityError);
}

TEST_CASE("worked values") {
    CHECK(sf::hermite(0, 3.7) == 1.0);
    CHECK(sf::hermite(2, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
    // H_7 from its explicit coefficients
    const double x = 0.5;
    const double h7 = 128 * std::pow(x, 7) - 1344 * std::pow(x, 5) + 3360 * std::pow(x, 3) - 1680 * x;
    CHECK(sf::hermite(7, x) == doctest::Approx(h7).epsilon(1e-14));

    CHECK(sf::assoc_laguerre(0, 2, 5.0) == 1.0);
    CHECK(sf::assoc_laguerre(1, 2, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(sf::assoc_laguerre(2, 1, 0.0) == doctest::Approx(3.0).epsilon(1e-15));

    CHECK(sf::wigner_d(0, 0, 0, 1.234) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(sf::wigner_d(1, 0, 0, M_PI / 3) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(sf::wigner_d(1, 1, 1, M_PI / 2) == doctest::Approx(0.5).epsilon(1e-14));

    CHECK(sf::bessel_j(0, 0.0) == 1.0);
    CHECK(std::abs(sf::bessel_j(3, 0.01) / (std::pow(0.005, 3) / 6) - 1) < 1e-4);
    double series = 0.0, term = std::pow(0.75, 2) / 2;  // I_2(1.5) power series
    for (int k = 0; k < 40; ++k) {
        series += term;
        term *= 0.75 * 0.75 / ((k + 1.0) * (k + 3.0));
    }
    CHECK(sf::bessel_i(2, 1.5) == doctest::Approx(series).epsilon(1e-14));

    CHECK(std::abs(sf::sph_harm(0, 0, 0.3, 2.0) - 1 / std::sqrt(4 * M_PI)) < 1e-15);
    CHECK(std::abs(sf::sph_harm(1, 0, 0.0, 0.0) - std::sqrt(3 / (4 * M_PI))) < 1e-15);
    // <Y_2^1|Y_2^1> on a midpoint grid
    const int nt = 400, np = 64;
    double norm = 0.0;
    for (int i = 0; i < nt; ++i) {
        const double th = (i + 0.5) * M_PI / nt;
        for (int j = 0; j < np; ++j)
            norm += std::norm(sf::sph_harm(2, 1, th, 2 * M_PI * j / np)) * std::sin(th) * (M_PI / nt) * (2 * M_PI / np);
    }
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(std::abs(sf::sph_harm(2, 1, 0.7, 1.1)) > 0.0);
}
