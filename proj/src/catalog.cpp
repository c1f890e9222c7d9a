#include "npn/catalog.hpp"

#include <cmath>

#include "npn/gaussian_kernel.hpp"
#include "npn/transform_methods.hpp"

namespace npn {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2 = 1.41421356237309504880;

void require(bool ok, const std::string& msg) {
    if (!ok) throw ConstraintViolation(msg);
}

double unit_sigma_tol(double s) { return std::fabs(s - 1.0); }

// Characteristic-function series, id 12:
//   (1/(pi e)) sum_{k>=1} sigma_ij^{2k} / ((2k)! 2^{2k-2}) * H_{2k-1}(1/sqrt2)^2
std::pair<double, double> char_series(double sigma_ij, const SeriesControl& ctl) {
    double sum = 0.0;
    double term = 0.0;
    const double s2 = sigma_ij * sigma_ij;
    for (int k = 1; k <= ctl.max_terms; ++k) {
        const double h = hermite(2 * k - 1, 1.0 / kSqrt2);
        term = std::pow(s2, k) / (std::tgamma(2.0 * k + 1.0) * std::pow(2.0, 2 * k - 2)) * h * h;
        sum += term;
        if (std::fabs(term) < 1e-16 * std::fabs(sum)) break;
    }
    const double scale = 1.0 / (kPi * std::exp(1.0));
    return {scale * sum, scale * std::fabs(term)};
}

// Windowed-identity series, id 13.
std::pair<double, double> char_x_series(double sigma_ij, const SeriesControl& ctl) {
    const double phi = erf_phi(1.0 / kSqrt2);
    const double lead = phi - std::sqrt(2.0 / (kPi * std::exp(1.0)));
    double sum = lead * lead * sigma_ij;
    double term = 0.0;
    const double scale = 2.0 / (kPi * std::exp(1.0));
    for (int k = 2; k <= ctl.max_terms; ++k) {
        const double h = hermite(2 * k - 2, 1.0 / kSqrt2);
        term = scale * std::pow(sigma_ij, 2 * k + 1) * (2.0 * k - 1.0) * (2.0 * k - 1.0) /
               (std::tgamma(2.0 * k + 2.0) * std::pow(2.0, 2 * k - 2)) * h * h;
        sum += term;
        if (std::fabs(term) < 1e-16 * std::fabs(sum)) break;
    }
    return {sum, std::fabs(term)};
}

} // namespace

void catalog_check(const CatalogSpec& e, double sigma_ii, double sigma_jj) {
    require(e.id >= 1 && e.id <= 14, "catalog id must be in 1..14");
    switch (e.id) {
        case 3:
        case 4:
        case 5:
        case 6:
        case 8:
            require(e.a != 0.0, "catalog entry " + std::to_string(e.id) + " requires a != 0");
            break;
        case 9:
        case 10:
            require(e.n >= 0, "catalog entry " + std::to_string(e.id) + " requires n >= 0");
            break;
        case 11:
            require(e.a > 0.0 && e.b > 0.0, "catalog entry 11 requires a, b > 0");
            break;
        case 12:
        case 13:
        case 14: {
            // rows 12-14 are stated for unit variances
            const bool ok = unit_sigma_tol(sigma_ii) < 1e-12 &&
                            (sigma_jj < 0.0 || unit_sigma_tol(sigma_jj) < 1e-12);
            require(ok, "catalog entry " + std::to_string(e.id) +
                            " requires sigma_ii = sigma_jj = 1");
            break;
        }
        default: break;
    }
}

Parity catalog_parity(const CatalogSpec& e) {
    switch (e.id) {
        case 1:
        case 3:
        case 5:
        case 10:
        case 13: return Parity::odd;
        case 2:
        case 4:
        case 6:
        case 9:
        case 11:
        case 12: return Parity::even;
        default: return Parity::mixed; // 7, 8, 14
    }
}

double catalog_eval(const CatalogSpec& e, double x) {
    switch (e.id) {
        case 1: return std::sin(x);
        case 2: return std::cos(x);
        case 3: return std::sin(e.a * x);
        case 4: return std::cos(e.a * x);
        case 5: return std::sinh(e.a * x);
        case 6: return std::cosh(e.a * x);
        case 7: return std::exp(x);
        case 8: return std::exp(e.a * x);
        case 9: return std::pow(x, 2 * e.n) / std::tgamma(2.0 * e.n + 1.0);
        case 10: return std::pow(x, 2 * e.n + 1) / std::tgamma(2.0 * e.n + 2.0);
        case 11: return std::exp(-x * x / (2.0 * e.a)) / std::sqrt(2.0 * kPi * e.a);
        case 12: return std::fabs(x) <= 1.0 ? 1.0 : 0.0;
        case 13: return std::fabs(x) <= 1.0 ? x : 0.0;
        case 14: return 0.5 * (1.0 + erf_phi(x / kSqrt2));
        default: throw ConstraintViolation("catalog id must be in 1..14");
    }
}

std::string catalog_name(const CatalogSpec& e) {
    switch (e.id) {
        case 1: return "sin x";
        case 2: return "cos x";
        case 3: return "sin " + std::to_string(e.a) + "x";
        case 4: return "cos " + std::to_string(e.a) + "x";
        case 5: return "sinh " + std::to_string(e.a) + "x";
        case 6: return "cosh " + std::to_string(e.a) + "x";
        case 7: return "exp x";
        case 8: return "exp " + std::to_string(e.a) + "x";
        case 9: return "x^" + std::to_string(2 * e.n) + "/(2n)!";
        case 10: return "x^" + std::to_string(2 * e.n + 1) + "/(2n+1)!";
        case 11: return "gaussian(a=" + std::to_string(e.a) + ",b=" + std::to_string(e.b) + ")";
        case 12: return "indicator[-1,1]";
        case 13: return "x*indicator[-1,1]";
        case 14: return "normal_cdf";
        default: return "unknown";
    }
}

std::pair<double, double> catalog_tau(const CatalogSpec& e, double sigma_ii, double sigma_jj,
                                      double sigma_ij, const SeriesControl& ctl) {
    catalog_check(e, sigma_ii, sigma_jj);
    const double a2 = e.a * e.a;
    switch (e.id) {
        case 1:
            return {std::exp(-(sigma_ii + sigma_jj) / 2.0) * std::sinh(sigma_ij), 0.0};
        case 2:
            return {std::exp(-(sigma_ii + sigma_jj) / 2.0) * (std::cosh(sigma_ij) - 1.0), 0.0};
        case 3:
            return {std::exp(-a2 * (sigma_ii + sigma_jj) / 2.0) * std::sinh(a2 * sigma_ij), 0.0};
        case 4:
            return {std::exp(-a2 * (sigma_ii + sigma_jj) / 2.0) * (std::cosh(a2 * sigma_ij) - 1.0),
                    0.0};
        case 5:
            return {std::exp(a2 * (sigma_ii + sigma_jj) / 2.0) * std::sinh(a2 * sigma_ij), 0.0};
        case 6:
            return {std::exp(a2 * (sigma_ii + sigma_jj) / 2.0) * (std::cosh(a2 * sigma_ij) - 1.0),
                    0.0};
        case 7:
            return {std::exp((sigma_ii + sigma_jj) / 2.0) * std::expm1(sigma_ij), 0.0};
        case 8:
            return {std::exp(a2 * (sigma_ii + sigma_jj) / 2.0) * std::expm1(a2 * sigma_ij), 0.0};
        case 9: {
            const int n = e.n;
            if (n == 0) return {0.0, 0.0}; // constant function
            const double ratio = 4.0 * sigma_ij * sigma_ij / (sigma_ii * sigma_jj);
            double sum = 0.0;
            for (int k = 1; k <= n; ++k) {
                sum += std::pow(ratio, k) /
                       (std::tgamma(double(n - k) + 1.0) * std::tgamma(double(n - k) + 1.0) *
                        std::tgamma(2.0 * k + 1.0));
            }
            return {std::pow(sigma_ii * sigma_jj, n) / std::pow(2.0, 2 * n) * sum, 0.0};
        }
        case 10: {
            const int n = e.n;
            const double ratio = 4.0 * sigma_ij * sigma_ij / (sigma_ii * sigma_jj);
            double sum = 0.0;
            for (int k = 0; k <= n; ++k) {
                sum += std::pow(ratio, k) /
                       (std::tgamma(double(n - k) + 1.0) * std::tgamma(double(n - k) + 1.0) *
                        std::tgamma(2.0 * k + 2.0));
            }
            return {std::pow(sigma_ii * sigma_jj, n) * sigma_ij / std::pow(2.0, 2 * n) * sum, 0.0};
        }
        case 11: {
            const double p = (e.a + sigma_ii) * (e.b + sigma_jj);
            require(p > sigma_ij * sigma_ij, "catalog entry 11: degenerate parameters");
            return {(1.0 / (2.0 * kPi)) *
                        (1.0 / std::sqrt(p - sigma_ij * sigma_ij) - 1.0 / std::sqrt(p)),
                    0.0};
        }
        case 12: return char_series(sigma_ij, ctl);
        case 13: return char_x_series(sigma_ij, ctl);
        case 14: return {tau_normal_to_uniform(sigma_ij), 0.0};
        default: throw ConstraintViolation("catalog id must be in 1..14");
    }
}

std::pair<double, double> catalog_tau_diag(const CatalogSpec& e, double sigma_ii,
                                           const SeriesControl& ctl) {
    catalog_check(e, sigma_ii, -1.0);
    switch (e.id) {
        case 12: {
            const double phi = erf_phi(1.0 / kSqrt2);
            return {phi - phi * phi, 0.0};
        }
        case 13: {
            const double phi = erf_phi(1.0 / kSqrt2);
            return {phi - std::sqrt(2.0 / (kPi * std::exp(1.0))), 0.0};
        }
        case 14:
            return {std::asin(0.5) / (2.0 * kPi), 0.0}; // = 1/12
        default:
            return catalog_tau(e, sigma_ii, sigma_ii, sigma_ii, ctl);
    }
}

double catalog_nu(const CatalogSpec& e, double sigma_ii) {
    catalog_check(e, sigma_ii, -1.0);
    const double a2 = e.a * e.a;
    switch (e.id) {
        case 1:
        case 3:
        case 5:
        case 10:
        case 13: return 0.0; // odd functions
        case 2: return std::exp(-sigma_ii / 2.0);
        case 4: return std::exp(-a2 * sigma_ii / 2.0);
        case 6: return std::exp(a2 * sigma_ii / 2.0);
        case 7: return std::exp(sigma_ii / 2.0);
        case 8: return std::exp(a2 * sigma_ii / 2.0);
        case 9:
            // E[X^{2n}]/(2n)! = sigma^n / (2^n n!)
            return std::pow(sigma_ii / 2.0, e.n) / std::tgamma(e.n + 1.0);
        case 11: return 1.0 / std::sqrt(2.0 * kPi * (e.a + sigma_ii));
        case 12: return erf_phi(1.0 / std::sqrt(2.0 * sigma_ii));
        case 14: return 0.5;
        default: throw ConstraintViolation("catalog id must be in 1..14");
    }
}

std::optional<TaylorSpec> catalog_taylor(const CatalogSpec& e) {
    const double a = e.a;
    switch (e.id) {
        case 1:
            return TaylorSpec(
                [](int k) {
                    static const double cyc[4] = {0.0, 1.0, 0.0, -1.0};
                    return cyc[k % 4];
                },
                1.0, 1.0);
        case 2:
            return TaylorSpec(
                [](int k) {
                    static const double cyc[4] = {1.0, 0.0, -1.0, 0.0};
                    return cyc[k % 4];
                },
                1.0, 1.0);
        case 3:
            return TaylorSpec(
                [a](int k) {
                    static const double cyc[4] = {0.0, 1.0, 0.0, -1.0};
                    return cyc[k % 4] * std::pow(a, k);
                },
                1.0, std::fabs(a));
        case 4:
            return TaylorSpec(
                [a](int k) {
                    static const double cyc[4] = {1.0, 0.0, -1.0, 0.0};
                    return cyc[k % 4] * std::pow(a, k);
                },
                1.0, std::fabs(a));
        case 5:
            return TaylorSpec([a](int k) { return k % 2 == 1 ? std::pow(a, k) : 0.0; }, 1.0,
                              std::fabs(a));
        case 6:
            return TaylorSpec([a](int k) { return k % 2 == 0 ? std::pow(a, k) : 0.0; }, 1.0,
                              std::fabs(a));
        case 7:
            return TaylorSpec([](int) { return 1.0; }, 1.0, 1.0);
        case 8:
            return TaylorSpec([a](int k) { return std::pow(a, k); }, 1.0,
                              std::max(std::fabs(a), 1e-12));
        case 9: {
            std::vector<double> mono(2 * e.n + 1, 0.0);
            mono[2 * e.n] = 1.0 / std::tgamma(2.0 * e.n + 1.0);
            return TaylorSpec::polynomial(mono);
        }
        case 10: {
            std::vector<double> mono(2 * e.n + 2, 0.0);
            mono[2 * e.n + 1] = 1.0 / std::tgamma(2.0 * e.n + 2.0);
            return TaylorSpec::polynomial(mono);
        }
        default: return std::nullopt;
    }
}

} // namespace npn
