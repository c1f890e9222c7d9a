#include <cmath>

#include <doctest.h>

#include "npn/catalog.hpp"
#include "npn/gaussian_kernel.hpp"
#include "npn/oracle.hpp"

using namespace npn;

TEST_CASE("nu_quadrature fixtures") {
    CHECK(nu_quadrature([](double x) { return std::cos(x); }, 1.0).value ==
          doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
    CHECK(nu_quadrature([](double x) { return x * x; }, 3.0).value ==
          doctest::Approx(3.0).epsilon(1e-12));
    const QuadResult ind = nu_quadrature([](double x) { return std::fabs(x) <= 1.0 ? 1.0 : 0.0; },
                                         1.0);
    // discontinuous integrand: Gauss-Hermite reaches only ~1e-2 here
    CHECK(ind.value == doctest::Approx(0.6826894921370859).epsilon(1e-2));
    CHECK_THROWS_AS(nu_quadrature([](double x) { return x; }, -1.0), DomainError);
}

TEST_CASE("tau_quadrature fixtures") {
    const auto id = [](double x) { return x; };
    for (double sij : {-0.6, 0.0, 0.45}) {
        const QuadResult r = tau_quadrature(id, id, 1.2, 0.8, sij);
        CHECK(std::fabs(r.value - sij) <= 1e-12);
    }
    const auto ex = [](double x) { return std::exp(x); };
    CHECK(tau_quadrature(ex, ex, 1.0, 1.0, 0.25).value ==
          doctest::Approx(std::exp(1.0) * std::expm1(0.25)).epsilon(1e-10));
    const QuadResult oddeven = tau_quadrature([](double x) { return std::sin(x); },
                                              [](double x) { return std::cos(x); }, 1.0, 1.0, 0.5);
    CHECK(std::fabs(oddeven.value) <= oddeven.error + 1e-12);
    CHECK_THROWS_AS(tau_quadrature(id, id, 1.0, 1.0, 1.0), DomainError); // d = 0
}

TEST_CASE("tau_diag_quadrature fixtures") {
    const QuadResult ind = tau_diag_quadrature(
        [](double x) { return std::fabs(x) <= 1.0 ? 1.0 : 0.0; }, 1.0);
    const double phi = erf_phi(1.0 / std::sqrt(2.0));
    CHECK(ind.value == doctest::Approx(phi - phi * phi).epsilon(1e-2));

    const QuadResult xind = tau_diag_quadrature(
        [](double x) { return std::fabs(x) <= 1.0 ? x : 0.0; }, 1.0);
    CHECK(xind.value ==
          doctest::Approx(phi - std::sqrt(2.0 / (3.14159265358979323846 * std::exp(1.0))))
              .epsilon(1e-2));

    CHECK(tau_diag_quadrature([](double) { return 4.2; }, 1.0).value ==
          doctest::Approx(0.0));
}

TEST_CASE("diagonal limit of the bivariate integral") {
    const auto f = [](double x) { return std::sin(x); };
    const double sii = 1.0;
    const QuadResult diag = tau_diag_quadrature(f, sii);
    const QuadResult lim = tau_quadrature(f, f, sii, sii, sii * (1.0 - 1e-4));
    CHECK(std::fabs(diag.value - lim.value) <= 1e-4); // continuity in sigma_ij
}

TEST_CASE("truncated-Taylor approximants converge to the exponential value") {
    const double target = std::exp(1.0) * std::expm1(0.25);
    double previous_gap = 1e300;
    for (int n : {5, 10, 20, 30}) {
        const auto fn = [n](double x) {
            double sum = 0.0, term = 1.0;
            for (int k = 0; k <= n; ++k) {
                sum += term;
                term *= x / double(k + 1);
            }
            return sum;
        };
        const double gap = std::fabs(tau_quadrature(fn, fn, 1.0, 1.0, 0.25).value - target);
        CHECK(gap <= previous_gap + 1e-12);
        previous_gap = gap;
        if (n == 30) CHECK(gap <= 1e-6);
    }
}

TEST_CASE("sample_transformed is deterministic and seed-sensitive") {
    Eigen::MatrixXd s(2, 2);
    s << 1.0, 0.25, 0.25, 1.0;
    const GaussianSpec g(s);
    const std::vector<RealFunction> funcs = {[](double x) { return std::sin(x); },
                                             [](double x) { return std::sin(x); }};
    McControl mc;
    mc.samples = 20000;
    mc.seed = 42;
    const MomentReport a = sample_transformed(g, funcs, mc);
    const MomentReport b = sample_transformed(g, funcs, mc);
    CHECK(a.tau(0, 1) == b.tau(0, 1)); // bitwise
    CHECK(a.nu[0] == b.nu[0]);
    CHECK(a.rng_algorithm == "splitmix64-counter/box-muller");

    mc.seed = 43;
    const MomentReport c = sample_transformed(g, funcs, mc);
    CHECK(a.tau(0, 1) != c.tau(0, 1));
}

TEST_CASE("sample_transformed concords with theory at 10^6 draws") {
    Eigen::MatrixXd s(2, 2);
    s << 1.0, 0.25, 0.25, 1.0;
    const GaussianSpec g(s);
    const std::vector<RealFunction> funcs = {[](double x) { return std::sin(x); },
                                             [](double x) { return std::sin(x); }};
    McControl mc;
    mc.samples = 1'000'000;
    mc.seed = 7;
    const MomentReport r = sample_transformed(g, funcs, mc);
    const double exact_ij = std::exp(-1.0) * std::sinh(0.25);
    const double exact_ii = std::exp(-1.0) * std::sinh(1.0) + 0.0; // catalog row 1 at sigma_ij=1
    CHECK(std::fabs(r.tau(0, 1) - exact_ij) <= 4.0 * r.tau_error(0, 1));
    CHECK(std::fabs(r.tau(0, 0) - exact_ii) <= 4.0 * r.tau_error(0, 0));
    CHECK(std::fabs(r.nu[0] - 0.0) <= 4.0 * r.nu_error[0]);
}

TEST_CASE("identity transform recovers the Gaussian covariance") {
    Eigen::MatrixXd s = Eigen::MatrixXd::Identity(2, 2);
    const GaussianSpec g(s);
    const std::vector<RealFunction> funcs(2, [](double x) { return x; });
    McControl mc;
    mc.samples = 1'000'000;
    mc.seed = 1;
    const MomentReport r = sample_transformed(g, funcs, mc);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(std::fabs(r.tau(i, j) - s(i, j)) <= 3.0 * std::max(r.tau_error(i, j), 1e-12));
}

TEST_CASE("antithetic pairing halves odd-function mean error") {
    Eigen::MatrixXd s(1, 1);
    s << 1.0;
    const GaussianSpec g(s);
    const std::vector<RealFunction> funcs = {[](double x) { return x * x * x; }};
    McControl mc;
    mc.samples = 100000;
    mc.seed = 5;
    mc.antithetic = true;
    const MomentReport r = sample_transformed(g, funcs, mc);
    CHECK(r.nu[0] == 0.0); // exact cancellation in pairs
}

TEST_CASE("non-finite samples are reported with context") {
    Eigen::MatrixXd s(1, 1);
    s << 1.0;
    const GaussianSpec g(s);
    const std::vector<RealFunction> funcs = {[](double x) { return 1.0 / (x - x); }};
    McControl mc;
    mc.samples = 10;
    try {
        sample_transformed(g, funcs, mc);
        FAIL("expected NonFiniteSample");
    } catch (const NonFiniteSample& e) {
        CHECK(e.coordinate == 0);
        CHECK(e.draw_index >= 0);
    }
}
