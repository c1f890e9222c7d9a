#include "npn/series_method.hpp"

#include <cmath>

namespace npn {

namespace {

double exp_tail_bound(double x, int after) {
    // sum_{m > after} x^m / m!  for x >= 0
    if (x <= 0.0) return 0.0;
    const double lead = std::pow(x, after + 1) / std::tgamma(after + 2.0);
    if (after + 2 > x) return lead / (1.0 - x / (after + 2));
    return lead * std::exp(x);
}

} // namespace

SeriesResult fk_eval(const TaylorSpec& f, int k, double x, const SeriesControl& ctl) {
    ctl.validate();
    if (f.degree()) {
        const int deg = *f.degree();
        if (k > deg) return {0.0, 0.0};
        double sum = 0.0, pow_x = 1.0, fact = 1.0;
        for (int u = 0; 2 * u + k <= deg; ++u) {
            if (u > 0) {
                pow_x *= x;
                fact *= double(u);
            }
            sum += f.coefficient(2 * u + k) * pow_x / fact;
        }
        return {sum, 0.0};
    }

    const double C = f.growth_c(), K = f.growth_k();
    const double k2x = K * K * std::fabs(x);
    double sum = 0.0, pow_x = 1.0, fact = 1.0;
    for (int u = 0; u < ctl.max_terms; ++u) {
        if (u > 0) {
            pow_x *= x;
            fact *= double(u);
        }
        sum += f.coefficient(2 * u + k) * pow_x / fact;
        const double tail = C * std::pow(K, k) * exp_tail_bound(k2x, u);
        if (tail <= 0.5 * (ctl.rel_tol * std::fabs(sum) + ctl.abs_tol)) return {sum, tail};
    }
    throw MaxTermsExceeded("F_k series did not converge within max_terms");
}

SeriesResult nu_series(const TaylorSpec& f, double sigma_ii, const SeriesControl& ctl) {
    if (sigma_ii == 0.0) return {f.coefficient(0), 0.0}; // deterministic coordinate
    if (!(sigma_ii > 0)) throw DomainError("nu_series: sigma_ii must be nonnegative");
    return fk_eval(f, 0, sigma_ii / 2.0, ctl);
}

SeriesResult tau_series(const TaylorSpec& fi, const TaylorSpec& fj, double sigma_ii,
                        double sigma_jj, double sigma_ij, const SeriesControl& ctl) {
    ctl.validate();
    if (sigma_ij == 0.0) return {0.0, 0.0}; // every term carries sigma_ij^k, k >= 1
    if (sigma_ii == 0.0 || sigma_jj == 0.0) return {0.0, 0.0}; // deterministic coordinate

    const bool finite = fi.degree().has_value() && fj.degree().has_value();
    const int kmax = finite ? std::min(*fi.degree(), *fj.degree()) : ctl.max_terms;

    const double Ci = fi.growth_c(), Ki = fi.growth_k();
    const double Cj = fj.growth_c(), Kj = fj.growth_k();
    const double envelope =
        Ci * Cj * std::exp((Ki * Ki * sigma_ii + Kj * Kj * sigma_jj) / 2.0);
    const double x = Ki * Kj * std::fabs(sigma_ij);
    const double guard_k = 2.0 * Ki * Kj *
                           std::max({sigma_ii, sigma_jj, std::fabs(sigma_ij)});

    double sum = 0.0, err = 0.0;
    double weight = 1.0; // sigma_ij^k / k!
    double last_nonzero = -1.0;
    for (int k = 1; k <= kmax; ++k) {
        weight *= sigma_ij / double(k);
        const SeriesResult a = fk_eval(fi, k, sigma_ii / 2.0, ctl);
        const SeriesResult b = fk_eval(fj, k, sigma_jj / 2.0, ctl);
        const double term = a.value * b.value * weight;
        sum += term;
        err += (std::fabs(a.value) * b.error + std::fabs(b.value) * a.error + a.error * b.error) *
               std::fabs(weight);

        // Convergence guard: term magnitudes must decay once k is past the
        // scale 2 K_i K_j max(sigma). Finite sums (both polynomials) are
        // exempt; their terms may grow all the way to the last degree.
        const double mag = std::fabs(term);
        if (!finite && mag > 0.0) {
            if (double(k) > guard_k && last_nonzero >= 0.0 && mag > last_nonzero * (1.0 + 1e-12))
                throw MaxTermsExceeded("tau series terms stopped decaying");
            last_nonzero = mag;
        }

        if (!finite) {
            const double tail = envelope * exp_tail_bound(x, k);
            if (tail <= 0.5 * (ctl.rel_tol * std::fabs(sum) + ctl.abs_tol))
                return {sum, err + tail};
        }
    }
    if (finite) return {sum, err};
    throw MaxTermsExceeded("tau series did not converge within max_terms");
}

SeriesResult tau_diag_series(const TaylorSpec& f, double sigma_ii, const SeriesControl& ctl) {
    if (sigma_ii == 0.0) return {0.0, 0.0};
    if (!(sigma_ii > 0)) throw DomainError("tau_diag_series: sigma_ii must be nonnegative");
    return tau_series(f, f, sigma_ii, sigma_ii, sigma_ii, ctl);
}

} // namespace npn
