#include "npn/oracle.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "npn/quadrature.hpp"

namespace npn {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInvSqrtPi = 0.56418958354775628695;

template <typename Eval>
QuadResult refine_real(const QuadratureControl& quad, Eval eval) {
    double prev = eval(quad.initial_nodes);
    double cur = prev;
    double delta = std::numeric_limits<double>::infinity();
    for (int n = 2 * quad.initial_nodes; n <= quad.max_nodes; n *= 2) {
        cur = eval(n);
        delta = std::fabs(cur - prev);
        prev = cur;
        if (delta <= quad.rel_tol * std::fabs(cur) + 1e-15) break;
    }
    if (!std::isfinite(cur))
        throw QuadratureNotConverged("quadrature produced a non-finite value");
    if (delta > 0.01 * std::max(std::fabs(cur), 1.0))
        throw QuadratureNotConverged("quadrature refinement stalled (delta " +
                                     std::to_string(delta) + ")");
    return {cur, std::isfinite(delta) ? delta : 0.0};
}

// --- counter-based RNG -------------------------------------------------

std::uint64_t splitmix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double uniform01(std::uint64_t seed, std::uint64_t counter) {
    const std::uint64_t v = splitmix(seed ^ splitmix(counter));
    return (double(v >> 11) + 0.5) * 0x1.0p-53;
}

// One standard normal per (seed, stream index) via Box-Muller.
double standard_normal(std::uint64_t seed, std::uint64_t index) {
    const double u1 = uniform01(seed, 2 * index);
    const double u2 = uniform01(seed, 2 * index + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

} // namespace

QuadResult nu_quadrature(const RealFunction& f, double sigma_ii, const QuadratureControl& quad) {
    if (!(sigma_ii > 0)) throw DomainError("nu_quadrature: sigma_ii must be positive");
    const double scale = std::sqrt(2.0 * sigma_ii);
    auto eval = [&](int n) {
        const auto& rule = hermite_rule(n);
        double sum = 0.0;
        for (int a = 0; a < n; ++a) {
            const double w = std::exp(rule.logw[a]);
            if (w == 0.0) continue;
            sum += w * f(scale * rule.node[a]);
        }
        return kInvSqrtPi * sum;
    };
    return refine_real(quad, eval);
}

QuadResult tau_quadrature(const RealFunction& fi, const RealFunction& fj, double sigma_ii,
                          double sigma_jj, double sigma_ij, const QuadratureControl& quad) {
    if (!(sigma_ii > 0) || !(sigma_jj > 0))
        throw DomainError("tau_quadrature: variances must be positive");
    const double d = sigma_ii * sigma_jj - sigma_ij * sigma_ij;
    if (!(d > 0)) throw DomainError("tau_quadrature: degenerate pair determinant d <= 0");

    const QuadResult nui = nu_quadrature(fi, sigma_ii, quad);
    const QuadResult nuj = nu_quadrature(fj, sigma_jj, quad);

    // Conditional decomposition of the joint density: x marginal N(0,
    // sigma_ii), w | x normal with mean (sigma_ij/sigma_ii) x and variance
    // d/sigma_ii. Substituting both to Gauss-Hermite variables removes the
    // coupling factor entirely, so the rule stays accurate as sigma_ij
    // approaches the degenerate boundary.
    const double slope = sigma_ij / sigma_ii;
    const double sx = std::sqrt(2.0 * sigma_ii);
    const double sw = std::sqrt(2.0 * d / sigma_ii);

    auto eval = [&](int n) {
        const auto& rule = hermite_rule(n);
        std::vector<double> wt(n);
        for (int a = 0; a < n; ++a) wt[a] = std::exp(rule.logw[a]);
        double sum = 0.0;
        for (int a = 0; a < n; ++a) {
            if (wt[a] == 0.0) continue;
            const double xa = sx * rule.node[a];
            const double mean = slope * xa;
            double row = 0.0;
            for (int b = 0; b < n; ++b) {
                if (wt[b] == 0.0) continue;
                row += wt[b] * fj(mean + sw * rule.node[b]);
            }
            sum += wt[a] * fi(xa) * row;
        }
        return sum / kPi - nui.value * nuj.value;
    };
    QuadResult res = refine_real(quad, eval);
    res.error += std::fabs(nui.value) * nuj.error + std::fabs(nuj.value) * nui.error;
    return res;
}

QuadResult tau_diag_quadrature(const RealFunction& f, double sigma_ii,
                               const QuadratureControl& quad) {
    if (!(sigma_ii > 0)) throw DomainError("tau_diag_quadrature: sigma_ii must be positive");
    const QuadResult nu = nu_quadrature(f, sigma_ii, quad);
    const double scale = std::sqrt(2.0 * sigma_ii);
    auto eval = [&](int n) {
        const auto& rule = hermite_rule(n);
        double sum = 0.0;
        for (int a = 0; a < n; ++a) {
            const double w = std::exp(rule.logw[a]);
            if (w == 0.0) continue;
            const double v = f(scale * rule.node[a]);
            sum += w * v * v;
        }
        return kInvSqrtPi * sum - nu.value * nu.value;
    };
    QuadResult res = refine_real(quad, eval);
    res.error += 2.0 * std::fabs(nu.value) * nu.error;
    return res;
}

MomentReport sample_transformed(const GaussianSpec& spec, const std::vector<RealFunction>& funcs,
                                const McControl& mc) {
    mc.validate();
    const int d = spec.dim();
    if (static_cast<int>(funcs.size()) != d)
        throw ConfigError("sample_transformed: need one function per coordinate");
    const Eigen::MatrixXd& L = spec.cholesky_factor();
    const long long N = mc.samples;

    auto draw_y = [&](long long n, Eigen::VectorXd& y) {
        const long long base_draw = mc.antithetic ? n / 2 : n;
        const double sign = (mc.antithetic && n % 2 == 1) ? -1.0 : 1.0;
        // X = L Z, per-coordinate substreams keyed by (seed, draw, coord)
        for (int k = 0; k < d; ++k) {
            double x = 0.0;
            for (int m = 0; m <= k; ++m)
                x += L(k, m) * standard_normal(mc.seed, std::uint64_t(base_draw) * d + m);
            y[k] = funcs[k](sign * x);
        }
    };

    // Pass 1: means, accumulated in fixed-size blocks for a deterministic
    // reduction order independent of threading.
    constexpr long long kBlock = 65536;
    Eigen::VectorXd mean = Eigen::VectorXd::Zero(d);
    Eigen::VectorXd y(d);
    for (long long start = 0; start < N; start += kBlock) {
        const long long end = std::min(N, start + kBlock);
        Eigen::VectorXd local = Eigen::VectorXd::Zero(d);
        for (long long n = start; n < end; ++n) {
            draw_y(n, y);
            for (int k = 0; k < d; ++k)
                if (!std::isfinite(y[k]))
                    throw NonFiniteSample("transformation produced a non-finite sample", k, n);
            local += y;
        }
        mean += local;
    }
    mean /= double(N);

    // Pass 2: centered second and fourth moments (same draws regenerated).
    Eigen::MatrixXd cross = Eigen::MatrixXd::Zero(d, d);
    Eigen::MatrixXd fourth = Eigen::MatrixXd::Zero(d, d);
    for (long long start = 0; start < N; start += kBlock) {
        const long long end = std::min(N, start + kBlock);
        Eigen::MatrixXd local2 = Eigen::MatrixXd::Zero(d, d);
        Eigen::MatrixXd local4 = Eigen::MatrixXd::Zero(d, d);
        for (long long n = start; n < end; ++n) {
            draw_y(n, y);
            const Eigen::VectorXd c = y - mean;
            for (int i = 0; i < d; ++i) {
                for (int j = i; j < d; ++j) {
                    const double p = c[i] * c[j];
                    local2(i, j) += p;
                    local4(i, j) += p * p;
                }
            }
        }
        cross += local2;
        fourth += local4;
    }

    MomentReport rep;
    rep.nu = mean;
    rep.tau = Eigen::MatrixXd::Zero(d, d);
    rep.tau_error = Eigen::MatrixXd::Zero(d, d);
    rep.nu_error = Eigen::VectorXd::Zero(d);
    rep.nu_method.assign(d, Method::monte_carlo);
    rep.tau_method.assign(d, std::vector<Method>(d, Method::monte_carlo));
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j) {
            const double tau = cross(i, j) / double(N - 1);
            const double m22 = fourth(i, j) / double(N);
            const double se = std::sqrt(std::max(0.0, m22 - tau * tau) / double(N));
            rep.tau(i, j) = rep.tau(j, i) = tau;
            rep.tau_error(i, j) = rep.tau_error(j, i) = se;
        }
        rep.nu_error[i] = std::sqrt(rep.tau(i, i) / double(N));
    }
    rep.rng_algorithm = "splitmix64-counter/box-muller";
    return rep;
}

} // namespace npn
