#include <cmath>

#include <doctest.h>

#include "npn/bounds.hpp"
#include "npn/catalog.hpp"
#include "npn/oracle.hpp"

using namespace npn;

namespace {
constexpr double kPi = 3.14159265358979323846;

FourierTransformSpec lorentz_g() {
    FourierTransformSpec g;
    g.g = [](double y) { return Complex{kPi * std::exp(-std::fabs(y)), 0.0}; };
    g.bound = kPi;
    return g;
}
} // namespace

TEST_CASE("series theorem on sin: coefficients and the displayed constant") {
    const TaylorSpec sine = *catalog_taylor(CatalogSpec{1});
    const SecondOrderEstimate e = second_order_series(sine, 1.0, 1.0, 0.25);
    CHECK(e.regime == BoundRegime::series);
    CHECK(e.linear_coeff == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(e.quad_coeff == doctest::Approx(0.0));
    // (1/6)(1/64) e^1 e^1
    CHECK(e.remainder_bound ==
          doctest::Approx((1.0 / 6.0) * (1.0 / 64.0) * std::exp(2.0)).epsilon(1e-12));
    // true remainder e^{-1}(sinh(1/4) - 1/4)
    const double truth = std::exp(-1.0) * (std::sinh(0.25) - 0.25);
    CHECK(truth == doctest::Approx(0.000958).epsilon(1e-3));
    CHECK(truth <= e.remainder_bound);
    // the eps-refined variant tightens the bound
    const SecondOrderEstimate tight = second_order_series(sine, 1.0, 1.0, 0.25, 0.1);
    CHECK(tight.remainder_bound < e.remainder_bound);
    CHECK(truth <= tight.remainder_bound);
}

TEST_CASE("series theorem on the cubic polynomial") {
    const TaylorSpec cubic = TaylorSpec::polynomial({0.0, 1.0, 1.0, 1.0});
    const SecondOrderEstimate e = second_order_series(cubic, 1.0, 1.0, 0.25);
    CHECK(e.linear_coeff == doctest::Approx(16.0)); // (1 + 3 sigma)(1 + 3 sigma)
    CHECK(e.quad_coeff == doctest::Approx(2.0));
    CHECK(e.estimate(0.25) == doctest::Approx(4.125));
    const double truth = 4.21875 - 4.125; // = 6 sigma_ij^3
    CHECK(truth == doctest::Approx(6.0 * std::pow(0.25, 3)));
    CHECK(truth <= e.remainder_bound);
}

TEST_CASE("sigma_ij = 0 gives a zero estimate and zero bound") {
    const TaylorSpec sine = *catalog_taylor(CatalogSpec{1});
    const SecondOrderEstimate e = second_order_series(sine, 1.0, 1.0, 0.0);
    CHECK(e.estimate(0.0) == 0.0);
    CHECK(e.remainder_bound == 0.0);
    const SecondOrderEstimate f = second_order_fourier(lorentz_g(), 1.0, 1.0, 0.0, 0.5);
    CHECK(f.estimate(0.0) == 0.0);
    CHECK(f.remainder_bound == 0.0);
}

TEST_CASE("fourier theorem on the Lorentzian") {
    const SecondOrderEstimate e = second_order_fourier(lorentz_g(), 1.0, 1.0, 0.25, 0.5);
    CHECK(e.regime == BoundRegime::fourier);
    CHECK(e.linear_coeff == doctest::Approx(0.0)); // even function: G*_1 = 0
    // |y| kink in g limits the Gauss-Hermite moment integrals to ~1e-5
    CHECK(e.quad_coeff ==
          doctest::Approx(0.5 * lorentzian_a(1.0) * lorentzian_a(1.0)).epsilon(1e-4));
    CHECK(e.remainder_bound ==
          doctest::Approx(std::pow(0.25, 3) * kPi * kPi / (kPi * kPi * 0.5)).epsilon(1e-12));

    // bound soundness against the quadrature oracle on f = 1/(1+x^2)
    const auto f = [](double x) { return 1.0 / (1.0 + x * x); };
    const QuadResult truth = tau_quadrature(f, f, 1.0, 1.0, 0.25);
    CHECK(std::fabs(truth.value - e.estimate(0.25)) <= e.remainder_bound);
}

TEST_CASE("fourier theorem enforces the ratio condition") {
    CHECK_THROWS_AS(second_order_fourier(lorentz_g(), 1.0, 1.0, 0.6, 0.5), RatioViolation);
    CHECK_THROWS_AS(second_order_fourier(lorentz_g(), 1.0, 1.0, 0.25, 1.5), RatioViolation);
}

TEST_CASE("closed A(z) matches the F*_2 quadrature at z in {0.5, 1, 2}") {
    const FourierTransformSpec g = lorentz_g();
    for (double z : {0.5, 1.0, 2.0}) {
        const Complex f2 = fk_star_value(g, 2, z / 2.0);
        CHECK(f2.real() == doctest::Approx(lorentzian_a(z)).epsilon(1e-4));
        CHECK(std::fabs(f2.imag()) <= 1e-10);
    }
    CHECK(lorentzian_a(1.0) == doctest::Approx(-0.31135908483759694).epsilon(1e-12));
}

TEST_CASE("soundness sweep over catalog rows 1-8 with cubic bound decay") {
    for (int id = 1; id <= 8; ++id) {
        CatalogSpec entry;
        entry.id = id;
        const TaylorSpec f = *catalog_taylor(entry);
        for (double sij : {0.05, 0.1, 0.25}) {
            CAPTURE(id);
            CAPTURE(sij);
            const SecondOrderEstimate e = second_order_series(f, 1.0, 1.0, sij);
            const double exact = catalog_tau(entry, 1.0, 1.0, sij).first;
            CHECK(std::fabs(exact - e.estimate(sij)) <= e.remainder_bound);
            // the bound scales exactly cubically
            const SecondOrderEstimate e2 = second_order_series(f, 1.0, 1.0, 2.0 * sij);
            CHECK(e2.remainder_bound == doctest::Approx(8.0 * e.remainder_bound).epsilon(1e-14));
        }
    }
}
