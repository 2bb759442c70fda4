#include <doctest.h>

#include "evanescent/materials.hpp"
#include "evanescent/units.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

using namespace evanescent;

TEST_CASE("Drude permittivity")
{
    const complex e = eps_drude(100.0, copper);
    CHECK(e.real() == doctest::Approx(-6.59e5).epsilon(1e-3));
    CHECK(e.imag() == doctest::Approx(9.09e16).epsilon(1e-3));

    // Re and Im from the separated closed form
    const double wp2 = copper.omega_p * copper.omega_p, g = copper.gamma, w = 100.0;
    CHECK(e.real() == doctest::Approx(1.0 - wp2 / (w * w + g * g)).epsilon(1e-14));
    CHECK(e.imag() == doctest::Approx(wp2 * g / (w * (w * w + g * g))).epsilon(1e-14));

    const MetalParams lossless{copper.omega_p, 0.0};
    for (double omega : {1.0, 37.0, 1e10, 2e16})
        CHECK(eps_drude(omega, lossless).real() == doctest::Approx(eps_plasma(omega, lossless)).epsilon(1e-15));
    CHECK(std::abs(eps_drude(copper.omega_p, lossless)) < 1e-15);

    CHECK_THROWS_AS(eps_drude(0.0, copper), std::invalid_argument);
    CHECK_THROWS_AS(eps_drude(-1.0, copper), std::invalid_argument);
}

TEST_CASE("plasma permittivity")
{
    CHECK(eps_plasma(copper.omega_p, copper) == 0.0);
    CHECK(eps_plasma(100.0, copper) == doctest::Approx(-1.2544e28).epsilon(1e-12));
    CHECK(eps_plasma(1e30, copper) == doctest::Approx(1.0));
    CHECK_THROWS_AS(eps_plasma(0.0, copper), std::invalid_argument);
}

TEST_CASE("K factor")
{
    CHECK(k_factor(100.0, 1.0, 1.0) == complex(0.0, 0.0));
    const complex kp = k_factor(100.0, 1.0, eps_plasma(100.0, copper));
    const double c = constants::c;
    CHECK(kp.real() == doctest::Approx(-copper.omega_p * copper.omega_p / (c * c)).epsilon(1e-14));
    CHECK(kp.real() == doctest::Approx(-1.394e11).epsilon(2e-3));

    const complex kd = k_factor(100.0, 1.0, eps_drude(100.0, copper));
    CHECK(std::abs(kd) == doctest::Approx(1.0).epsilon(0.02));

    CHECK_THROWS_AS(k_factor(100.0, 0.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(k_factor(100.0, -1.0, 2.0), std::invalid_argument);
}

TEST_CASE("crossover frequency")
{
    CHECK(omega_threshold(copper, 1.0) == doctest::Approx(100.0).epsilon(0.05));
    CHECK(omega_threshold(copper, 1.0) == doctest::Approx(98.8745).epsilon(1e-5));
    CHECK(omega_threshold(copper, 2.0) == doctest::Approx(24.8).epsilon(0.01));
    CHECK(omega_threshold(copper, 2.0) * 4 == doctest::Approx(omega_threshold(copper, 1.0)).epsilon(1e-15));
    CHECK(omega_threshold({copper.omega_p, 0.0}, 1.0) == 0.0);
    CHECK_THROWS_AS(omega_threshold(copper, 0.0), std::invalid_argument);
}

TEST_CASE("passivity of the Drude model")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> lw(-3, 17), lg(8, 15);
    for (int i = 0; i < 2000; ++i) {
        const MetalParams m{copper.omega_p, std::pow(10.0, lg(rng))};
        CHECK(eps_drude(std::pow(10.0, lw(rng)), m).imag() > 0.0);
    }
}

TEST_CASE("Drude tends to plasma as gamma -> 0")
{
    const MetalParams m{copper.omega_p, 1e-6 * copper.omega_p};
    for (double f = 0.1; f < 10.0; f *= 1.37) {
        const double omega = f * copper.omega_p;
        const double plasma = eps_plasma(omega, m);
        CHECK(std::abs(eps_drude(omega, m) - plasma) / std::abs(plasma) < 1e-4);
    }
}

TEST_CASE("low-frequency |K| matches omega_p^2 omega / (gamma omega_h^2)")
{
    for (double h : {0.3, 1.0, 4.0}) {
        for (double omega = 1e-3; omega <= 1e-8 * copper.gamma; omega *= 10.0) {
            const double approx = copper.omega_p * copper.omega_p * omega / (copper.gamma * omega_h(h) * omega_h(h));
            CHECK(std::abs(k_factor(omega, h, eps_drude(omega, copper))) == doctest::Approx(approx).epsilon(0.01));
        }
    }
}

TEST_CASE("plasma K is frequency independent")
{
    const complex ref = k_factor(1.0, 1.0, eps_plasma(1.0, copper));
    for (double omega : {2.0, 10.0, 100.0, 1e4, 1e8})
        CHECK(std::abs(k_factor(omega, 1.0, eps_plasma(omega, copper)) - ref) <= 1e-15 * std::abs(ref));
}

TEST_CASE("model tags and permittivity dispatch")
{
    CHECK(parse_model_tag("plasma") == ModelTag::Plasma);
    CHECK(to_string(ModelTag::IdealMetal) == "ideal");
    CHECK_THROWS_AS(parse_model_tag("lorentz"), std::invalid_argument);
    CHECK_FALSE(ResponseModel::ideal_metal().permittivity(10.0).has_value());
    CHECK(*ResponseModel::plasma().permittivity(10.0) == complex(eps_plasma(10.0, copper), 0.0));
    CHECK_THROWS_AS((MetalParams{0.0, 1.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((MetalParams{1.0, -1.0}.validate()), std::invalid_argument);
}
