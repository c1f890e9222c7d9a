#include "npn/gaussian_kernel.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "npn/errors.hpp"

namespace npn {

namespace {

constexpr int kExactLimit = 40;

double log_double_factorial(int m) {
    // m!! for m >= -1
    if (m <= 0) return 0.0;
    if (m % 2 == 1) {
        // (2s-1)!! = (2s)! / (2^s s!)
        const double s = (m + 1) / 2;
        return std::lgamma(2 * s + 1) - s * std::log(2.0) - std::lgamma(s + 1);
    }
    const double s = m / 2;
    return s * std::log(2.0) + std::lgamma(s + 1);
}

} // namespace

double double_factorial(int k) {
    if (k <= 0) return 1.0;
    if (k <= kExactLimit) {
        double v = 1.0;
        for (int m = k; m > 1; m -= 2) v *= m;
        return v;
    }
    const double lv = log_double_factorial(k);
    if (lv > std::log(std::numeric_limits<double>::max()))
        throw Overflow("double factorial overflows double range");
    return std::exp(lv);
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (n <= kExactLimit) {
        double v = 1.0;
        for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
        return std::round(v);
    }
    return std::exp(std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1));
}

double gaussian_moment(int k, double sigma_ii) {
    if (k < 0) throw DomainError("gaussian_moment: k must be nonnegative");
    if (!(sigma_ii > 0)) throw DomainError("gaussian_moment: sigma_ii must be positive");
    if (k % 2 == 1) return 0.0;
    if (k == 0) return 1.0;
    if (k <= kExactLimit) return std::pow(sigma_ii, k / 2) * double_factorial(k - 1);
    const double lv = 0.5 * k * std::log(sigma_ii) + log_double_factorial(k - 1);
    if (lv > std::log(std::numeric_limits<double>::max()))
        throw Overflow("gaussian_moment overflows double range");
    return std::exp(lv);
}

double wick_mixed_moment(int p, int q, double sigma_ii, double sigma_jj, double sigma_ij) {
    if (p < 0 || q < 0) throw DomainError("wick_mixed_moment: p, q must be nonnegative");
    if ((p + q) % 2 == 1) return 0.0;

    // Sum over the number k of (i,j) cross pairings, smallest k first.
    // Terms with q - k odd vanish (an odd number of j's cannot pair off).
    const int kmax = std::min(p, q);
    const int kstart = p % 2; // k has the parity of p
    double sum = 0.0, comp = 0.0; // Kahan
    for (int k = kstart; k <= kmax; k += 2) {
        if ((q - k) % 2 != 0) continue;
        double term = double_factorial(p - k - 1) * binomial(p, k) * binomial(q, k) *
                      std::tgamma(k + 1.0) * double_factorial(q - k - 1) *
                      std::pow(sigma_ii, (p - k) / 2) * std::pow(sigma_ij, k) *
                      std::pow(sigma_jj, (q - k) / 2);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

double hermite(int n, double x) {
    if (n < 0) throw DomainError("hermite: n must be nonnegative");
    if (n > 400) throw DegreeTooLarge("hermite: degree " + std::to_string(n) + " > 400");
    if (n == 0) return 1.0;
    double hm = 1.0;      // H_0
    double h = 2.0 * x;   // H_1
    for (int k = 1; k < n; ++k) {
        const double hp = 2.0 * x * h - 2.0 * k * hm;
        hm = h;
        h = hp;
    }
    return h;
}

double erf_phi(double z) { return std::erf(z); }

} // namespace npn
