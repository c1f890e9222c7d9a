#include "npn/function_spec.hpp"

#include <cmath>

#include "npn/catalog.hpp"
#include "npn/quadrature.hpp"

namespace npn {

TaylorSpec::TaylorSpec(CoeffOracle oracle, double growth_c, double growth_k,
                       std::optional<int> degree)
    : impl_(std::make_shared<Impl>()) {
    if (!(growth_c > 0) || !(growth_k > 0))
        throw ConfigError("TaylorSpec: growth constants C, K must be positive");
    impl_->oracle = std::move(oracle);
    impl_->c = growth_c;
    impl_->k = growth_k;
    impl_->degree = degree;
}

TaylorSpec TaylorSpec::polynomial(const std::vector<double>& monomial_coeffs) {
    std::vector<double> derivs(monomial_coeffs.size());
    double fact = 1.0;
    for (size_t a = 0; a < monomial_coeffs.size(); ++a) {
        if (a > 0) fact *= double(a);
        derivs[a] = monomial_coeffs[a] * fact;
    }
    // Fit growth constants satisfying |f^(a)(0)| <= C K^a.
    double k = 1e-6;
    for (size_t a = 1; a < derivs.size(); ++a)
        if (derivs[a] != 0.0) k = std::max(k, std::pow(std::fabs(derivs[a]), 1.0 / double(a)));
    double c = 1e-300;
    for (size_t a = 0; a < derivs.size(); ++a)
        c = std::max(c, std::fabs(derivs[a]) / std::pow(k, double(a)));
    const int degree = static_cast<int>(derivs.size()) - 1;
    return TaylorSpec(
        [derivs](int a) { return a < static_cast<int>(derivs.size()) ? derivs[a] : 0.0; },
        c, k, degree);
}

double TaylorSpec::coefficient(int a) const {
    if (a < 0) throw DomainError("TaylorSpec: negative derivative index");
    if (impl_->degree && a > *impl_->degree) return 0.0;
    {
        std::lock_guard<std::mutex> lock(impl_->mu);
        auto it = impl_->cache.find(a);
        if (it != impl_->cache.end()) return it->second;
    }
    const double v = impl_->oracle(a);
    // Growth check at fetch time; small relative slack for oracles that
    // compute derivatives in floating point.
    const double bound = impl_->c * std::pow(impl_->k, double(a));
    if (std::fabs(v) > bound * (1.0 + 1e-9))
        throw GrowthViolation("Taylor coefficient " + std::to_string(a) +
                              " violates the growth bound C*K^a");
    std::lock_guard<std::mutex> lock(impl_->mu);
    impl_->cache.emplace(a, v);
    return v;
}

double TaylorSpec::evaluate(double x, const SeriesControl& ctl) const {
    ctl.validate();
    double sum = 0.0, pow_x = 1.0, fact = 1.0;
    const int amax = impl_->degree ? *impl_->degree : ctl.max_terms * 2;
    for (int a = 0; a <= amax; ++a) {
        if (a > 0) {
            pow_x *= x;
            fact *= double(a);
        }
        const double term = coefficient(a) * pow_x / fact;
        sum += term;
        if (!impl_->degree && a > 4) {
            // tail bound C (K|x|)^(a+1)/(a+1)! * e^(K|x|)
            const double kx = impl_->k * std::fabs(x);
            if (a + 1 > 2 * kx) {
                const double tail = impl_->c * std::pow(kx, a + 1) / std::tgamma(a + 2.0) *
                                    std::exp(kx);
                if (tail <= ctl.rel_tol * std::fabs(sum) + ctl.abs_tol) return sum;
            }
        }
    }
    if (!impl_->degree)
        throw MaxTermsExceeded("Taylor evaluation did not converge within max_terms");
    return sum;
}

FourierSeriesSpec::FourierSeriesSpec(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty() || coeffs_.size() % 2 == 0)
        throw ConfigError("FourierSeriesSpec: coefficient vector must have odd length 2K+1");
    max_index_ = static_cast<int>(coeffs_.size() / 2);
}

Complex FourierSeriesSpec::coefficient(int n) const {
    if (n < -max_index_ || n > max_index_) return {0.0, 0.0};
    return coeffs_[n + max_index_];
}

double FourierSeriesSpec::evaluate(double x) const {
    Complex sum{0.0, 0.0};
    for (int n = -max_index_; n <= max_index_; ++n)
        sum += coefficient(n) * std::exp(Complex(0.0, n * x));
    return sum.real();
}

namespace {

FunctionSpec zero_function() { return TaylorSpec::polynomial({0.0}); }

std::pair<FunctionSpec, FunctionSpec> split_taylor(const TaylorSpec& f) {
    TaylorSpec odd([f](int a) { return a % 2 == 1 ? f.coefficient(a) : 0.0; }, f.growth_c(),
                   f.growth_k(), f.degree());
    TaylorSpec even([f](int a) { return a % 2 == 0 ? f.coefficient(a) : 0.0; }, f.growth_c(),
                    f.growth_k(), f.degree());
    return {odd, even};
}

std::pair<FunctionSpec, FunctionSpec> split_fourier_series(const FourierSeriesSpec& f) {
    const int K = f.max_index();
    std::vector<Complex> odd(2 * K + 1), even(2 * K + 1);
    for (int n = -K; n <= K; ++n) {
        odd[n + K] = 0.5 * (f.coefficient(n) - f.coefficient(-n));
        even[n + K] = 0.5 * (f.coefficient(n) + f.coefficient(-n));
    }
    return {FourierSeriesSpec(std::move(odd)), FourierSeriesSpec(std::move(even))};
}

std::pair<FunctionSpec, FunctionSpec> split_catalog(const CatalogSpec& e) {
    switch (catalog_parity(e)) {
        case Parity::odd: return {e, zero_function()};
        case Parity::even: return {zero_function(), e};
        case Parity::mixed: break;
    }
    // exp-family entries split into their sinh/cosh halves
    if (e.id == 7) return {CatalogSpec{5, 1.0}, CatalogSpec{6, 1.0}};
    if (e.id == 8) return {CatalogSpec{5, e.a}, CatalogSpec{6, e.a}};
    throw UnsupportedRepresentation(
        "odd_even_split: catalog entry " + std::to_string(e.id) +
        " has no catalog-representable odd/even parts");
}

} // namespace

std::pair<FunctionSpec, FunctionSpec> odd_even_split(const FunctionSpec& f) {
    return std::visit(
        [](const auto& v) -> std::pair<FunctionSpec, FunctionSpec> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, TaylorSpec>) {
                return split_taylor(v);
            } else if constexpr (std::is_same_v<T, FourierSeriesSpec>) {
                return split_fourier_series(v);
            } else if constexpr (std::is_same_v<T, CatalogSpec>) {
                return split_catalog(v);
            } else {
                throw UnsupportedRepresentation(
                    "odd_even_split: not computable for transform callables");
            }
        },
        f);
}

double evaluate(const FunctionSpec& f, double x, const SeriesControl& ctl) {
    return std::visit(
        [&](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, TaylorSpec>) {
                return v.evaluate(x, ctl);
            } else if constexpr (std::is_same_v<T, FourierSeriesSpec>) {
                return v.evaluate(x);
            } else if constexpr (std::is_same_v<T, CatalogSpec>) {
                return catalog_eval(v, x);
            } else if constexpr (std::is_same_v<T, FourierTransformSpec>) {
                if (!v.support)
                    throw UnsupportedRepresentation(
                        "evaluate: FourierTransform needs a support hint for pointwise values");
                const auto& rule = legendre_rule(400);
                Complex sum{0.0, 0.0};
                const double S = *v.support;
                for (int i = 0; i < rule.size(); ++i) {
                    const double y = S * rule.node[i];
                    sum += rule.weight[i] * S * v.g(y) * std::exp(Complex(0.0, -x * y));
                }
                return sum.real() / (2.0 * 3.14159265358979323846);
            } else { // LaplaceSpec
                const auto& rule = legendre_rule(200);
                double sum = 0.0;
                const double T2 = v.support_end / 2.0;
                for (int i = 0; i < rule.size(); ++i) {
                    const double t = T2 * (rule.node[i] + 1.0);
                    sum += rule.weight[i] * T2 * v.g(t) * std::exp(-x * t);
                }
                return sum;
            }
        },
        f);
}

} // namespace npn
