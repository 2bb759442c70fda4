#include <doctest.h>

#include "evanescent/dipole.hpp"
#include "evanescent/units.hpp"
#include "support/fourier_oracle.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

using namespace evanescent;

namespace {

double norm(const FieldVector& f) { return std::sqrt(std::norm(f.x) + std::norm(f.y) + std::norm(f.z)); }

}  // namespace

TEST_CASE("static limits of the free dipole field")
{
    const double omega = 1.0;  // k0 ~ 3e-11 1/cm
    const double m0 = 2.5;
    const FieldVector axis = h_free(omega, m0, {0, 0, 1.7});
    CHECK(axis.z.real() == doctest::Approx(2 * m0 / std::pow(1.7, 3)).epsilon(1e-12));
    CHECK(axis.x == complex(0.0, 0.0));
    CHECK(axis.y == complex(0.0, 0.0));

    const FieldVector plane = h_free(omega, m0, {0.8, 0, 0});
    CHECK(plane.z.real() == doctest::Approx(-m0 / std::pow(0.8, 3)).epsilon(1e-12));
    CHECK(plane.x == complex(0.0, 0.0));

    CHECK_THROWS_AS(h_free(omega, m0, {0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(e_free(omega, m0, {0, 0, 0}), std::invalid_argument);
}

TEST_CASE("electric field structure and suppression")
{
    const double m0 = 1.0;
    const FieldVector e = e_free(3e10, m0, {0.3, -1.1, 0.7});
    CHECK(e.z == complex(0.0, 0.0));
    CHECK(std::abs(e.x * 0.3 + e.y * -1.1) < 1e-15 * std::abs(e.x));  // E is orthogonal to r_t

    // static limit: E scales with k0 and vanishes with it
    const double e1 = norm(e_free(1e-6, m0, {1, 1, 1}));
    CHECK(norm(e_free(1e-9, m0, {1, 1, 1})) == doctest::Approx(1e-3 * e1).epsilon(1e-12));
    CHECK(e1 < 1e-16);

    // k0 r = 1e-9 at an in-plane point
    const double r = 1.0;
    const double omega = 1e-9 * constants::c / r;
    const double ratio = norm(e_free(omega, m0, {r, 0, 0})) / norm(h_free(omega, m0, {r, 0, 0}));
    CHECK(ratio == doctest::Approx(1e-9).epsilon(1e-6));
}

TEST_CASE("free field is divergence free")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-2, 2);
    for (double k0 : {1e-9, 0.3, 1.5}) {
        const double omega = k0 * constants::c;
        for (int i = 0; i < 200; ++i) {
            const Point3 p{u(rng), u(rng), u(rng)};
            const double r = std::hypot(p.x, p.y, p.z);
            if (r < 0.2) continue;
            const double d = 1e-5 * r;
            auto at = [&](double dx, double dy, double dz) { return h_free(omega, 1.0, {p.x + dx, p.y + dy, p.z + dz}); };
            const complex div = (at(d, 0, 0).x - at(-d, 0, 0).x + at(0, d, 0).y - at(0, -d, 0).y
                                 + at(0, 0, d).z - at(0, 0, -d).z) / (2 * d);
            CHECK(std::abs(div) <= 1e-6 * norm(h_free(omega, 1.0, p)) / r);
        }
    }
}

TEST_CASE("axial symmetry of the lateral field")
{
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-3, 3);
    const double omega = 0.2 * constants::c;
    for (int i = 0; i < 200; ++i) {
        const double x = u(rng), y = u(rng), z = u(rng);
        const FieldVector a = h_free(omega, 1.0, {x, y, z});
        const FieldVector b = h_free(omega, 1.0, {y, x, z});
        const FieldVector m = h_free(omega, 1.0, {-x, y, z});
        CHECK(std::abs(a.y - b.x) <= 1e-14 * std::abs(a.y) + 1e-300);
        CHECK(m.x == -a.x);
    }
}

TEST_CASE("Fourier components")
{
    const double omega = 0.1 * constants::c;
    const FieldVector zero = h_fourier_free(omega, 1.0, 0.0, 0.0, 0.5);
    CHECK(zero.x == complex(0.0, 0.0));
    CHECK(zero.y == complex(0.0, 0.0));
    CHECK(zero.z == complex(0.0, 0.0));

    const FieldVector up = h_fourier_free(omega, 1.0, 0.7, -0.2, 0.9);
    const FieldVector down = h_fourier_free(omega, 1.0, 0.7, -0.2, -0.9);
    CHECK(up.x == -down.x);
    CHECK(up.y == -down.y);
    CHECK(up.z == down.z);

    CHECK_THROWS_AS(h_fourier_free(omega, 1.0, 0.1, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(h_fourier_free(omega, 1.0, 0.3, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("2D inverse transform of the Fourier components reproduces the free field")
{
    const double omega = 0.1 * constants::c;  // k0 = 0.1 1/cm
    const Point3 p{1.0, 1.0, 1.0};
    const FieldVector direct = h_free(omega, 1.0, p);
    const FieldVector inverse = oracle::inverse_fourier_free(omega, 1.0, p, 1e-10);
    CHECK(std::abs(inverse.x - direct.x) <= 1e-6 * std::abs(direct.x));
    CHECK(std::abs(inverse.y - direct.y) <= 1e-6 * std::abs(direct.y));
    CHECK(std::abs(inverse.z - direct.z) <= 1e-6 * std::abs(direct.z));
}

TEST_CASE("coil moment")
{
    const double m0 = coil_moment({10, 3e9, 0.1});
    CHECK(m0 == doctest::Approx(3.14e-2).epsilon(2e-3));
    CHECK(coil_moment({10, 6e9, 0.1}) == doctest::Approx(2 * m0).epsilon(1e-15));
    CHECK(coil_moment({1, 3e9, 0.1}) == doctest::Approx(3.14e-3).epsilon(2e-3));
    CHECK_THROWS_AS(coil_moment({0, 3e9, 0.1}), std::invalid_argument);
    CHECK_THROWS_AS(coil_moment({1, -1.0, 0.1}), std::invalid_argument);
}

TEST_CASE("ideal-metal closed form")
{
    CHECK(h_x_ideal_closed(3.14e-2, 1.0, 1.0) == doctest::Approx(3.36e-3).epsilon(5e-3));
    CHECK(h_x_ideal_closed(3.14e-2, 1.0, 0.0) == 0.0);
    CHECK(h_x_ideal_closed(3.14e-2, 1.0, 2.0) == doctest::Approx(2.08e-3).epsilon(1e-3));
    CHECK(h_x_ideal_closed(3.14e-2, 1.0, 2.0) == doctest::Approx(12.0 / std::pow(8.0, 2.5) * 3.14e-2).epsilon(1e-14));
    // scaling (m0/h^3) f(x/h)
    CHECK(h_x_ideal_closed(1.0, 2.0, 3.0) == doctest::Approx(h_x_ideal_closed(1.0, 1.0, 1.5) / 8.0).epsilon(1e-14));
    CHECK(h_x_ideal_closed(1.0, 1.0, -0.7) == -h_x_ideal_closed(1.0, 1.0, 0.7));
}

TEST_CASE("closed form peaks at x = h")
{
    double best_x = 0.0, best = -1.0;
    for (int i = 0; i <= 400000; ++i) {
        const double x = -4.0 + 8.0 * i / 400000.0;
        const double v = h_x_ideal_closed(1.0, 1.0, x);
        if (v > best) {
            best = v;
            best_x = x;
        }
    }
    CHECK(best_x == doctest::Approx(1.0).epsilon(1e-4));
    double worst_x = 0.0, worst = 1.0;
    for (int i = 0; i <= 400000; ++i) {
        const double x = -4.0 + 8.0 * i / 400000.0;
        const double v = h_x_ideal_closed(1.0, 1.0, x);
        if (v < worst) {
            worst = v;
            worst_x = x;
        }
    }
    CHECK(worst_x == doctest::Approx(-1.0).epsilon(1e-4));
}

TEST_CASE("dipole configuration checks")
{
    CHECK_NOTHROW((DipoleConfig{0.0314, 1.0, 100.0}.validate()));
    CHECK_THROWS_AS((DipoleConfig{0.0, 1.0, 100.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((DipoleConfig{1.0, 1.0, 0.0}.validate()), std::invalid_argument);
    CHECK_FALSE((DipoleConfig{0.0314, 1.0, 100.0}.outside_near_zone()));
    CHECK((DipoleConfig{0.0314, 1.0, 1e8}.outside_near_zone()));
}
