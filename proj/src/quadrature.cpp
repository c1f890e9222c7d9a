#include "npn/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "npn/errors.hpp"

namespace npn {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kRescale = 1e250;
constexpr double kLogRescale = 575.6462732485114210; // log(1e250)

// Evaluates the orthonormal Hermite polynomials at x up to degree n,
// carrying a shared power-of-1e250 scale so intermediate values neither
// overflow nor underflow. Returns p_n, p_{n-1} (scaled) and the scale count.
struct ScaledHermite {
    double pn;
    double pnm1;
    int scale; // true value = stored * kRescale^scale
};

ScaledHermite eval_orthonormal_hermite(int n, double x) {
    double pm = 0.0;
    double p = std::pow(kPi, -0.25); // h_0
    int scale = 0;
    for (int j = 0; j < n; ++j) {
        const double pp = x * std::sqrt(2.0 / (j + 1)) * p - std::sqrt(double(j) / (j + 1)) * pm;
        pm = p;
        p = pp;
        const double mag = std::max(std::fabs(p), std::fabs(pm));
        if (mag > kRescale) {
            p /= kRescale;
            pm /= kRescale;
            ++scale;
        } else if (mag > 0.0 && mag < 1.0 / kRescale) {
            p *= kRescale;
            pm *= kRescale;
            --scale;
        }
    }
    return {p, pm, scale};
}

HermiteRule build_hermite(int n) {
    if (n < 1) throw DomainError("hermite_rule: n >= 1 required");
    HermiteRule rule;
    rule.node.resize(n);
    rule.logw.resize(n);

    // Golub-Welsch: the nodes are the eigenvalues of the symmetric
    // tridiagonal Jacobi matrix with zero diagonal and off-diagonal
    // sqrt(j/2). The weights come from the recurrence instead of the
    // eigenvectors, whose first components underflow for the outer nodes.
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd sub(std::max(n - 1, 1));
    for (int j = 1; j < n; ++j) sub[j - 1] = std::sqrt(j / 2.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub.head(std::max(n - 1, 0)), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw QuadratureNotConverged("hermite_rule: eigenvalue solve failed at n=" +
                                     std::to_string(n));
    const Eigen::VectorXd& ev = es.eigenvalues(); // ascending

    // Layout: positive nodes first, descending, mirrored in the second half.
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = ev[n - 1 - i];
        if (n % 2 == 1 && i == m - 1) z = 0.0; // exact middle node
        ScaledHermite h{};
        for (int it = 0; it < 8 && z != 0.0; ++it) {
            h = eval_orthonormal_hermite(n, z);
            const double deriv = std::sqrt(2.0 * n) * h.pnm1; // same scale as pn
            const double dz = h.pn / deriv;
            z -= dz;
            if (std::fabs(dz) <= 1e-15 * std::max(1.0, std::fabs(z))) break;
        }
        h = eval_orthonormal_hermite(n, z);

        // w_i = 1 / (n * h_{n-1}(x_i)^2) in orthonormal normalization.
        const double logw =
            -std::log(double(n)) - 2.0 * (std::log(std::fabs(h.pnm1)) + h.scale * kLogRescale);
        rule.node[i] = z;
        rule.logw[i] = logw;
        if (n % 2 == 0 || i < m - 1) {
            rule.node[m + i] = -z;
            rule.logw[m + i] = logw;
        }
    }
    return rule;
}

LegendreRule build_legendre(int n) {
    if (n < 1) throw DomainError("legendre_rule: n >= 1 required");
    LegendreRule rule;
    rule.node.resize(n);
    rule.weight.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double dz = p1 / pp;
            z -= dz;
            if (std::fabs(dz) < 1e-15) break;
        }
        rule.node[i] = -z;
        rule.node[n - 1 - i] = z;
        rule.weight[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weight[n - 1 - i] = rule.weight[i];
    }
    return rule;
}

template <typename Rule, Rule (*Builder)(int)>
const Rule& cached_rule(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Rule>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, std::make_unique<Rule>(Builder(n))).first;
    return *it->second;
}

} // namespace

const HermiteRule& hermite_rule(int n) { return cached_rule<HermiteRule, build_hermite>(n); }

const LegendreRule& legendre_rule(int n) { return cached_rule<LegendreRule, build_legendre>(n); }

} // namespace npn
