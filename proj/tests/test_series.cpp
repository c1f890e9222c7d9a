#include <cmath>

#include <doctest.h>

#include "npn/catalog.hpp"
#include "npn/oracle.hpp"
#include "npn/series_method.hpp"

using namespace npn;

namespace {
const TaylorSpec kSine = *catalog_taylor(CatalogSpec{1});
const TaylorSpec kCosine = *catalog_taylor(CatalogSpec{2});
const TaylorSpec kCubic = TaylorSpec::polynomial({0.0, 1.0, 1.0, 1.0}); // x^3 + x^2 + x
} // namespace

TEST_CASE("nu_series on the worked fixtures") {
    const SeriesResult cos1 = nu_series(kCosine, 1.0);
    CHECK(cos1.value == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
    CHECK(cos1.error <= 1e-12);

    CHECK(nu_series(kCubic, 2.0).value == doctest::Approx(2.0)); // nu = sigma_ii
    CHECK(nu_series(TaylorSpec::polynomial({0.0, 1.0}), 3.7).value == 0.0);
    CHECK(nu_series(kSine, 1.0).value == 0.0);
}

TEST_CASE("nu_series degenerate coordinate") {
    CHECK(nu_series(kCubic, 0.0).value == 0.0); // f(0)
    const TaylorSpec shifted = TaylorSpec::polynomial({5.0, 1.0});
    CHECK(nu_series(shifted, 0.0).value == 5.0);
}

TEST_CASE("tau_series closed forms: cos and the cubic") {
    const SeriesResult c = tau_series(kCosine, kCosine, 1.0, 1.0, 0.25);
    CHECK(c.value == doctest::Approx(std::exp(-1.0) * (std::cosh(0.25) - 1.0)).epsilon(1e-12));

    const SeriesResult p = tau_series(kCubic, kCubic, 1.0, 1.0, 0.25);
    CHECK(p.value == doctest::Approx(4.21875)); // polynomial identity, exact
    CHECK(p.error == 0.0);

    const SeriesResult d = tau_diag_series(kCubic, 1.0);
    CHECK(d.value == doctest::Approx(24.0)); // sigma + 8 sigma^2 + 15 sigma^3
    CHECK(d.error == 0.0);
}

TEST_CASE("tau_series trivial zeros") {
    CHECK(tau_series(kSine, kCosine, 1.0, 1.0, 0.0).value == 0.0);
    CHECK(tau_series(kCubic, kCubic, 0.0, 1.0, 0.0).value == 0.0);
}

TEST_CASE("tau_diag_series matches Table 2 diagonals") {
    CHECK(tau_diag_series(kSine, 1.0).value == doctest::Approx(0.4323).epsilon(2e-4));
    const TaylorSpec constant = TaylorSpec::polynomial({7.0});
    CHECK(tau_diag_series(constant, 1.0).value == 0.0);
}

TEST_CASE("parity: odd f_i with even f_j gives zero covariance") {
    for (double sij : {-0.5, 0.25, 0.8}) {
        const SeriesResult r = tau_series(kSine, kCosine, 1.0, 1.0, sij);
        CHECK(std::fabs(r.value) <= r.error + 1e-14);
    }
}

TEST_CASE("symmetry in the argument pair") {
    const SeriesResult a = tau_series(kSine, kCubic, 1.3, 0.7, 0.35);
    const SeriesResult b = tau_series(kCubic, kSine, 0.7, 1.3, 0.35);
    CHECK(a.value == doctest::Approx(b.value).epsilon(1e-13));
}

TEST_CASE("series equals the quadrature oracle on rows 1-10") {
    for (int id = 1; id <= 10; ++id) {
        CatalogSpec entry;
        entry.id = id;
        entry.a = (id == 3) ? 2.0 : (id == 4) ? 0.5 : (id == 8) ? 1.0 / 3.0 : 1.0;
        entry.n = 1;
        const TaylorSpec f = *catalog_taylor(entry);
        for (double sij : {-0.9, -0.25, 0.0, 0.25, 0.9}) {
            const SeriesResult s = tau_series(f, f, 1.0, 1.0, sij);
            if (sij == 0.0) {
                CHECK(s.value == 0.0);
                continue;
            }
            const QuadResult q = tau_quadrature([&](double x) { return catalog_eval(entry, x); },
                                                [&](double x) { return catalog_eval(entry, x); },
                                                1.0, 1.0, sij);
            CHECK(s.value == doctest::Approx(q.value).epsilon(1e-8));
            CHECK(std::fabs(s.value - q.value) <= 1e-8);
        }
    }
}

TEST_CASE("fk_eval matches analytic F_k for the exponential") {
    // f = e^x: F_k(x) = e^x for every k
    const TaylorSpec expf = *catalog_taylor(CatalogSpec{7});
    for (int k : {0, 1, 2, 5}) {
        const SeriesResult r = fk_eval(expf, k, 0.5);
        CHECK(r.value == doctest::Approx(std::exp(0.5)).epsilon(1e-12));
    }
}

TEST_CASE("convergence guard trips when growth constants lie") {
    // oracle returns factorially growing "derivatives" while claiming C=K=1;
    // the growth check fires before the series can diverge silently
    const TaylorSpec lying([](int a) { return std::tgamma(a + 1.0); }, 1.0, 1.0);
    CHECK_THROWS_AS(tau_series(lying, lying, 1.0, 1.0, 0.5), GrowthViolation);
}
