#include "npn/transform_methods.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "npn/quadrature.hpp"

namespace npn {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLog2Pi = 1.83787706640934548356; // log(2 pi)

double check_residue(const Complex& v, const char* where) {
    if (std::fabs(v.imag()) > 1e-10 * std::max(1.0, std::fabs(v.real())))
        throw ImaginaryResidue(std::string(where) + ": imaginary residue " +
                               std::to_string(v.imag()));
    return v.real();
}

Complex quarter_turn_phase(int k) {
    switch (((k % 4) + 4) % 4) { // (-i)^k
        case 0: return {1.0, 0.0};
        case 1: return {0.0, -1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, 1.0};
    }
}

// Shared node-doubling loop. Eval(n) must return the n-node estimate.
template <typename Eval>
Complex refine(const QuadratureControl& quad, Eval eval, double* err_out) {
    Complex prev = eval(quad.initial_nodes);
    Complex cur = prev;
    double delta = std::numeric_limits<double>::infinity();
    for (int n = 2 * quad.initial_nodes; n <= quad.max_nodes; n *= 2) {
        cur = eval(n);
        delta = std::abs(cur - prev);
        prev = cur;
        if (delta <= quad.rel_tol * std::abs(cur) + 1e-15) break;
    }
    if (!std::isfinite(cur.real()) || !std::isfinite(cur.imag()))
        throw QuadratureNotConverged("quadrature produced a non-finite value");
    if (delta > 0.01 * std::max(std::abs(cur), 1.0))
        throw QuadratureNotConverged("quadrature refinement stalled (delta " +
                                     std::to_string(delta) + ")");
    *err_out = std::isfinite(delta) ? delta : 0.0;
    return cur;
}

} // namespace

QuadResult tau_fourier_integral(const FourierTransformSpec& gi, const FourierTransformSpec& gj,
                                double sigma_ii, double sigma_jj, double sigma_ij,
                                const QuadratureControl& quad) {
    if (!(sigma_ii > 0) || !(sigma_jj > 0))
        throw DomainError("tau_fourier_integral: variances must be positive");
    if (sigma_ij == 0.0) return {0.0, 0.0};
    const double r = sigma_ij / std::sqrt(sigma_ii * sigma_jj);
    const double sy = std::sqrt(2.0 / sigma_ii);
    const double sz = std::sqrt(2.0 / sigma_jj);
    const double pref = 1.0 / (2.0 * kPi * kPi * std::sqrt(sigma_ii * sigma_jj));

    auto eval = [&](int n) -> Complex {
        const auto& rule = hermite_rule(n);
        std::vector<Complex> gy(n), gz(n);
        for (int a = 0; a < n; ++a) {
            gy[a] = gi.g(sy * rule.node[a]);
            gz[a] = gj.g(sz * rule.node[a]);
        }
        Complex sum{0.0, 0.0};
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                const double e0 = rule.logw[a] + rule.logw[b];
                const double c = -2.0 * r * rule.node[a] * rule.node[b];
                // exp(e0) * (exp(c) - 1), keeping both branches in range:
                // e0 + c <= -(1-|r|)(t^2+s^2) <= 0 always.
                double w;
                if (c < 30.0) {
                    const double base = std::exp(e0);
                    if (base == 0.0) continue;
                    w = base * std::expm1(c);
                } else {
                    w = std::exp(e0 + c) - std::exp(e0);
                }
                if (w != 0.0) sum += w * gy[a] * gz[b];
            }
        }
        return pref * sum;
    };

    double err = 0.0;
    const Complex v = refine(quad, eval, &err);
    return {check_residue(v, "tau_fourier_integral"), err};
}

FkStarResult fk_star(const FourierTransformSpec& g, int k, double x,
                     const QuadratureControl& quad) {
    if (!(x > 0)) throw DomainError("fk_star: x must be positive");
    if (k < 0) throw DomainError("fk_star: k must be nonnegative");
    const double rx = 1.0 / std::sqrt(x);
    // log of (1/2pi) x^{-(k+1)/2}, folded into the node exponents so the
    // partial sums stay in range for large k.
    const double log_pref = -kLog2Pi - 0.5 * (k + 1) * std::log(x);
    const Complex phase = quarter_turn_phase(k);

    double log_scale = 0.0;
    auto eval = [&](int n) -> Complex {
        const auto& rule = hermite_rule(n);
        const int half = n / 2;
        // first pass: largest exponent
        double emax = -std::numeric_limits<double>::infinity();
        for (int a = 0; a < half; ++a) {
            const double t = std::fabs(rule.node[a]);
            const double e = rule.logw[a] + (k > 0 ? k * std::log(t) : 0.0) + log_pref;
            emax = std::max(emax, e);
        }
        if (n % 2 == 1 && k == 0)
            emax = std::max(emax, rule.logw[half] + log_pref);
        if (!std::isfinite(emax)) emax = 0.0;

        Complex sum{0.0, 0.0};
        for (int a = 0; a < half; ++a) {
            const double t = rule.node[a]; // positive half (descending nodes first)
            const double ta = std::fabs(t);
            if (ta == 0.0 && k > 0) continue;
            const double e = rule.logw[a] + (k > 0 ? k * std::log(ta) : 0.0) + log_pref;
            const double w = std::exp(e - emax);
            if (w == 0.0) continue;
            // pair with the mirrored node: y^k flips sign for odd k
            const Complex pair = g.g(ta * rx) + (k % 2 == 0 ? 1.0 : -1.0) * g.g(-ta * rx);
            sum += w * pair;
        }
        if (n % 2 == 1 && k == 0)
            sum += std::exp(rule.logw[half] + log_pref - emax) * g.g(0.0);
        log_scale = emax;
        return sum;
    };

    // Node doubling shifts emax slightly between levels; re-evaluate the
    // coarse level at the fine level's scale for the delta.
    Complex prev{};
    double prev_scale = 0.0;
    Complex cur{};
    double delta = std::numeric_limits<double>::infinity();
    bool first = true;
    for (int n = quad.initial_nodes; n <= quad.max_nodes; n *= 2) {
        cur = eval(n);
        const double cur_scale = log_scale;
        if (!first) {
            delta = std::abs(prev * std::exp(prev_scale - cur_scale) - cur);
            if (delta <= quad.rel_tol * std::abs(cur) + 1e-300) {
                return {phase * cur, cur_scale, delta};
            }
        }
        prev = cur;
        prev_scale = cur_scale;
        first = false;
    }
    if (!std::isfinite(std::abs(cur)))
        throw QuadratureNotConverged("fk_star produced a non-finite value");
    if (delta > 0.01 * std::max(std::abs(cur), 1e-300))
        throw QuadratureNotConverged("fk_star refinement stalled at k=" + std::to_string(k));
    return {phase * cur, log_scale, std::isfinite(delta) ? delta : 0.0};
}

Complex fk_star_value(const FourierTransformSpec& g, int k, double x,
                      const QuadratureControl& quad) {
    const FkStarResult r = fk_star(g, k, x, quad);
    return r.mantissa * std::exp(r.log_scale);
}

QuadResult tau_fourier_series_expansion(const FourierTransformSpec& gi,
                                        const FourierTransformSpec& gj, double sigma_ii,
                                        double sigma_jj, double sigma_ij,
                                        const SeriesControl& ctl, const QuadratureControl& quad) {
    ctl.validate();
    if (!(sigma_ii > 0) || !(sigma_jj > 0))
        throw DomainError("tau_fourier_series_expansion: variances must be positive");
    if (sigma_ij == 0.0) return {0.0, 0.0};
    if (sigma_ij * sigma_ij >= sigma_ii * sigma_jj * (1.0 - 1e-12))
        throw ConvergenceDomainViolation(
            "tau_fourier_series_expansion: sigma_ij^2 must be < sigma_ii*sigma_jj");

    const double r = std::fabs(sigma_ij) / std::sqrt(sigma_ii * sigma_jj);
    // term bound B r^k from |F*_k(x)| <= (N/2pi) Gamma((k+1)/2) x^{-(k+1)/2}
    const double B = gi.bound * gj.bound * std::sqrt(kPi) /
                     (2.0 * kPi * kPi * std::sqrt(sigma_ii * sigma_jj));

    Complex sum{0.0, 0.0};
    double err = 0.0;
    for (int k = 1; k <= ctl.max_terms; ++k) {
        const FkStarResult a = fk_star(gi, k, sigma_ii / 2.0, quad);
        const FkStarResult b = fk_star(gj, k, sigma_jj / 2.0, quad);
        const double log_weight =
            k * std::log(std::fabs(sigma_ij)) - std::lgamma(k + 1.0);
        const double scale = std::exp(a.log_scale + b.log_scale + log_weight);
        const double sign = (sigma_ij < 0.0 && k % 2 == 1) ? -1.0 : 1.0;
        sum += sign * scale * a.mantissa * b.mantissa;
        err += scale * (std::abs(a.mantissa) * b.mantissa_error +
                        std::abs(b.mantissa) * a.mantissa_error);

        const double tail = B * std::pow(r, k + 1) / (1.0 - r);
        if (tail <= ctl.rel_tol * std::abs(sum) + ctl.abs_tol)
            return {check_residue(sum, "tau_fourier_series_expansion"), err + tail};
    }
    throw MaxTermsExceeded("tau_fourier_series_expansion did not converge within max_terms");
}

double tau_fourier_coefficients(const FourierSeriesSpec& ai, const FourierSeriesSpec& aj,
                                double sigma_ii, double sigma_jj, double sigma_ij,
                                FourierSeriesForm form) {
    const double ei = form == FourierSeriesForm::first_power ? sigma_ii : sigma_ii * sigma_ii;
    const double ej = form == FourierSeriesForm::first_power ? sigma_jj : sigma_jj * sigma_jj;
    Complex sum{0.0, 0.0};
    for (int n = -ai.max_index(); n <= ai.max_index(); ++n) {
        const Complex an = ai.coefficient(n);
        if (an == Complex{}) continue;
        for (int m = -aj.max_index(); m <= aj.max_index(); ++m) {
            const Complex am = aj.coefficient(m);
            if (am == Complex{}) continue;
            const double damp = std::exp(-0.5 * (double(n) * n * ei + double(m) * m * ej));
            sum += an * am * std::expm1(-double(n) * m * sigma_ij) * damp;
        }
    }
    return check_residue(sum, "tau_fourier_coefficients");
}

double nu_fourier_coefficients(const FourierSeriesSpec& a, double sigma_ii) {
    Complex sum{0.0, 0.0};
    for (int n = -a.max_index(); n <= a.max_index(); ++n)
        sum += a.coefficient(n) * std::exp(-0.5 * double(n) * n * sigma_ii);
    return check_residue(sum, "nu_fourier_coefficients");
}

QuadResult nu_fourier_transform(const FourierTransformSpec& g, double sigma_ii,
                                const QuadratureControl& quad) {
    const FkStarResult r = fk_star(g, 0, sigma_ii / 2.0, quad);
    const double scale = std::exp(r.log_scale);
    return {check_residue(r.mantissa * scale, "nu_fourier_transform"),
            r.mantissa_error * scale};
}

QuadResult tau_laplace(const LaplaceSpec& gi, const LaplaceSpec& gj, double sigma_ii,
                       double sigma_jj, double sigma_ij, const QuadratureControl& quad,
                       LaplaceForm form) {
    if (!(gi.support_end > 0) || !(gj.support_end > 0))
        throw DomainError("tau_laplace: supports must be positive");
    if (sigma_ij == 0.0) return {0.0, 0.0};

    auto eval = [&](int n) -> Complex {
        const auto& rule = legendre_rule(n);
        const double hi = gi.support_end / 2.0, hj = gj.support_end / 2.0;
        std::vector<double> t1(n), t2(n), v1(n), v2(n);
        for (int a = 0; a < n; ++a) {
            t1[a] = hi * (rule.node[a] + 1.0);
            t2[a] = hj * (rule.node[a] + 1.0);
            v1[a] = rule.weight[a] * hi * gi.g(t1[a]);
            v2[a] = rule.weight[a] * hj * gj.g(t2[a]);
        }
        double sum = 0.0;
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                double coupling;
                if (form == LaplaceForm::mgf) {
                    coupling = std::expm1(t1[a] * t2[b] * sigma_ij) *
                               std::exp(0.5 * (t1[a] * t1[a] * sigma_ii + t2[b] * t2[b] * sigma_jj));
                } else {
                    coupling = std::expm1(-t1[a] * t2[b] * sigma_ij) *
                               std::exp(-0.5 * (t1[a] * sigma_ii + t2[b] * sigma_jj));
                }
                sum += v1[a] * v2[b] * coupling;
            }
        }
        return {sum, 0.0};
    };

    double err = 0.0;
    const Complex v = refine(quad, eval, &err);
    return {v.real(), err};
}

QuadResult nu_laplace(const LaplaceSpec& g, double sigma_ii, const QuadratureControl& quad) {
    auto eval = [&](int n) -> Complex {
        const auto& rule = legendre_rule(n);
        const double h = g.support_end / 2.0;
        double sum = 0.0;
        for (int a = 0; a < n; ++a) {
            const double t = h * (rule.node[a] + 1.0);
            sum += rule.weight[a] * h * g.g(t) * std::exp(0.5 * t * t * sigma_ii);
        }
        return {sum, 0.0};
    };
    double err = 0.0;
    const Complex v = refine(quad, eval, &err);
    return {v.real(), err};
}

double tau_normal_to_uniform(double sigma_ij) {
    if (!(std::fabs(sigma_ij) < 2.0))
        throw DomainError("tau_normal_to_uniform: |sigma_ij| must be < 2");
    return std::asin(sigma_ij / 2.0) / (2.0 * kPi);
}

double kruskal_correlation(double rho) {
    if (!(std::fabs(rho) <= 1.0))
        throw DomainError("kruskal_correlation: |rho| must be <= 1");
    return 6.0 / kPi * std::asin(rho / 2.0);
}

} // namespace npn
