#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lmg/core_model.hpp"
#include "lmg/quadrature.hpp"
#include "lmg/rng.hpp"

#include "oracles.hpp"

using namespace lmg;

namespace {
const BathParams kFigBath{2.0 * std::numbers::pi * 0.1, 0.5, 1.79};
}

TEST_CASE("classify_phase basic cases") {
    CHECK(classify_phase(1.0, 0.5) == Phase::Normal);
    CHECK(classify_phase(1.0, 2.0) == Phase::SymmetryBroken);
    CHECK_THROWS_AS(classify_phase(1.0, 1.0), CriticalPointError);
    CHECK_THROWS_AS(classify_phase(1.0, 1.0 + 5e-10), CriticalPointError);
    CHECK(classify_phase(1.0, 1.0 + 5e-9) == Phase::SymmetryBroken);
}

TEST_CASE("classify_phase is scale invariant") {
    Rng rng(101);
    for (int i = 0; i < 200; ++i) {
        const double h = 0.1 + 5.0 * rng.uniform();
        const double g = 2.0 * h * rng.uniform();
        if (std::abs(g - h) < 1e-6 * h)
            continue;
        const double s = 0.01 + 100.0 * rng.uniform();
        CHECK(classify_phase(h, g) == classify_phase(s * h, s * g));
    }
}

TEST_CASE("spectral density values and edge cases") {
    CHECK(spectral_density(0.0, kFigBath) == 0.0);
    // eta * wc * e^{-1} at omega = omega_c
    CHECK(spectral_density(0.5, kFigBath) ==
          doctest::Approx(0.11557273497909217).epsilon(1e-14));
    // omega = 2 omega_c: 8 eta wc e^{-2}
    CHECK(spectral_density(1.0, kFigBath) ==
          doctest::Approx(8.0 * kFigBath.eta * 0.5 * std::exp(-2.0)).epsilon(1e-14));
    CHECK_THROWS_AS(spectral_density(-0.1, kFigBath), std::domain_error);
}

TEST_CASE("spectral density grows faster than quadratically at small omega") {
    double prev = 1.0;
    for (double w : {1e-2, 1e-4, 1e-6, 1e-8}) {
        const double ratio = spectral_density(w, kFigBath) / (w * w);
        CHECK(ratio < prev);
        prev = ratio;
    }
    CHECK(prev < 1e-7);
}

TEST_CASE("renormalized coupling") {
    CHECK(renormalized_coupling(1.0, kFigBath) == doctest::Approx(0.9).epsilon(1e-14));
    BathParams off = kFigBath;
    off.eta = 0.0;
    CHECK(renormalized_coupling(0.5, off) == 0.5);
    CHECK(bms_critical_coupling(1.0, kFigBath) == doctest::Approx(1.1).epsilon(1e-14));
}

TEST_CASE("renormalized coupling matches quadrature of Gamma(w)/w") {
    // (1/2pi) int_0^inf Gamma(w)/w dw should equal eta*wc/pi to 1e-10 relative.
    const double shift = oracle::simpson(
        [&](double w) {
            return w == 0.0 ? 0.0 : spectral_density(w, kFigBath) / w;
        },
        0.0, 40.0 * kFigBath.omega_c, 1e-13) /
        (2.0 * std::numbers::pi);
    const double analytic = kFigBath.eta * kFigBath.omega_c / std::numbers::pi;
    CHECK(std::abs(shift - analytic) / analytic < 1e-10);
    CHECK(renormalized_coupling(1.0, kFigBath) == doctest::Approx(1.0 - analytic));
}

TEST_CASE("bose occupation") {
    CHECK(bose_occupation(0.70711, 1.79) ==
          doctest::Approx(0.39282402482435232).epsilon(1e-14));
    CHECK(bose_occupation(std::sqrt(0.5), 1.79) ==
          doctest::Approx(0.39282717725370887).epsilon(1e-14));
    CHECK(bose_occupation(1000.0, 1.79) == 0.0); // zero-temperature limit
    CHECK_THROWS_AS(bose_occupation(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(bose_occupation(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(bose_occupation(1.0, 0.0), std::domain_error);

    double prev = bose_occupation(1e-3, 1.79);
    for (double w = 2e-3; w < 10.0; w *= 1.7) {
        const double cur = bose_occupation(w, 1.79);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(LmgParams{-1.0, 0.5, 10}.validate(), ValidationError);
    CHECK_THROWS_AS(LmgParams{1.0, -0.5, 10}.validate(), ValidationError);
    CHECK_THROWS_AS(LmgParams{1.0, 0.5, 0}.validate(), ValidationError);
    CHECK_THROWS_AS(BathParams{-0.1, 0.5, 1.0}.validate(), ValidationError);
    CHECK_THROWS_AS(BathParams{0.1, 0.0, 1.0}.validate(), ValidationError);
    CHECK_THROWS_AS(BathParams{0.1, 0.5, 0.0}.validate(), ValidationError);
    CHECK_NOTHROW(BathParams{0.0, 0.5, 1.0}.validate());
}

TEST_CASE("adaptive quadrature against closed forms") {
    // int_0^1 x^3 = 1/4
    CHECK(quad::integrate([](double x) { return x * x * x; }, 0.0, 1.0) ==
          doctest::Approx(0.25).epsilon(1e-14));
    // int_0^40 w^2 e^{-w} = 2 - tail, tail < 1e-14
    CHECK(quad::integrate([](double w) { return w * w * std::exp(-w); }, 0.0, 40.0) ==
          doctest::Approx(2.0).epsilon(1e-12));
    // agreement with the independent Simpson oracle on the reservoir integrand
    auto f = [&](double w) {
        return w == 0.0 ? 0.0 : spectral_density(w, kFigBath) / w;
    };
    const double gk = quad::integrate(f, 0.0, 20.0);
    const double sp = oracle::simpson(f, 0.0, 20.0, 1e-13);
    CHECK(gk == doctest::Approx(sp).epsilon(1e-11));
}
