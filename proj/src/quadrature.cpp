#include "vortexlab/quadrature.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace vortex::quad {

namespace {

Rule make_legendre(int n) {
    Rule r{Eigen::ArrayXd(n), Eigen::ArrayXd(n)};
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0, p1 = x;
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // recompute derivative at the converged node
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.x[i] = -x;
        r.x[n - 1 - i] = x;
        r.w[i] = w;
        r.w[n - 1 - i] = w;
    }
    if (n % 2 == 1) r.x[n / 2] = 0.0;
    return r;
}

Rule make_hermite(int n) {
    Eigen::MatrixXd jm = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) {
        jm(i, i - 1) = std::sqrt(0.5 * i);
        jm(i - 1, i) = jm(i, i - 1);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jm);
    Rule r{es.eigenvalues().array(), Eigen::ArrayXd(n)};
    const double mu0 = std::sqrt(std::numbers::pi);
    for (int i = 0; i < n; ++i) r.w[i] = mu0 * es.eigenvectors()(0, i) * es.eigenvectors()(0, i);
    return r;
}

template <class Make>
const Rule& cached(std::map<int, std::unique_ptr<Rule>>& cache, std::mutex& mu, int n, Make make) {
    if (n < 1) throw DomainError("quadrature order must be >= 1");
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, std::make_unique<Rule>(make(n))).first;
    return *it->second;
}

}  // namespace

const Rule& gauss_legendre(int n) {
    static std::map<int, std::unique_ptr<Rule>> cache;
    static std::mutex mu;
    return cached(cache, mu, n, make_legendre);
}

Rule gauss_legendre(int n, double a, double b) {
    const Rule& base = gauss_legendre(n);
    return {0.5 * (b - a) * base.x + 0.5 * (a + b), 0.5 * (b - a) * base.w};
}

const Rule& gauss_hermite(int n) {
    static std::map<int, std::unique_ptr<Rule>> cache;
    static std::mutex mu;
    return cached(cache, mu, n, make_hermite);
}

Rule composite_legendre(int n, int panels, double a, double b) {
    Rule r{Eigen::ArrayXd(n * panels), Eigen::ArrayXd(n * panels)};
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        Rule g = gauss_legendre(n, a + p * h, a + (p + 1) * h);
        r.x.segment(p * n, n) = g.x;
        r.w.segment(p * n, n) = g.w;
    }
    return r;
}

}  // namespace vortex::quad
