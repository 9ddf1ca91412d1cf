#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "hermlab/ensemble.hpp"
#include "hermlab/hermite.hpp"
#include "hermlab/timefreq.hpp"

using namespace hermlab;
namespace {
constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;
} // namespace

TEST_CASE("fourier transform fixes the gaussian") {
    const Grid g = default_grid(1);
    GridField f = sample(g, [](const std::vector<double>& x) {
        return cplx{std::exp(-0.5 * x[0] * x[0]), 0.0};
    });
    GridField F = fourier_transform(f, -1);
    double dev = 0.0;
    for (int i = 0; i < F.grid.n; ++i) {
        const double xi = F.grid.node(i);
        dev = std::max(dev, std::abs(F.values[i] - std::exp(-0.5 * xi * xi)));
    }
    CHECK(dev < 1e-10);
    GridField back = fourier_transform(F, +1);
    double dev2 = 0.0;
    for (int i = 0; i < g.n; ++i) dev2 = std::max(dev2, std::abs(back.values[i] - f.values[i]));
    CHECK(dev2 < 1e-10);
}

TEST_CASE("stft of the gaussian pair has the closed form") {
    const Grid g = default_grid(1);
    GridField f = synthesize(delta_coeffs(1, 2, {0}), g);
    PhaseGrid pg;
    PhasePlaneField V = stft(f, Window::gaussian(), pg);
    double dev = 0.0;
    for (int i = 0; i < pg.nx; ++i)
        for (int j = 0; j < pg.ny; ++j) {
            const double x = pg.xnode(i), y = pg.ynode(j);
            const cplx want =
                std::pow(two_pi, -0.5) * std::exp(cplx{-0.25 * (x * x + y * y), -0.5 * x * y});
            dev = std::max(dev, std::abs(V.at(i, j) - want));
        }
    CHECK(dev < 1e-8);
    CHECK(mixed_norm(V, {2.0, 2.0, Axis::X}) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("mixed norms separate on product fields") {
    PhaseGrid pg;
    PhasePlaneField F(pg);
    for (int i = 0; i < pg.nx; ++i)
        for (int j = 0; j < pg.ny; ++j) {
            const double x = pg.xnode(i), y = pg.ynode(j);
            F.at(i, j) = std::exp(-0.5 * x * x) * std::exp(-y * y);
        }
    for (double p : {1.0, 2.0, 3.0})
        for (double q : {1.0, 2.0}) {
            const double ax = std::pow(two_pi / p, 0.5 / p);     // ||e^{-x^2/2}||_p
            const double ay = std::pow(pi / q, 0.5 / q);         // ||e^{-y^2}||_q
            CHECK(mixed_norm(F, {p, q, Axis::X}) == doctest::Approx(ax * ay).epsilon(1e-8));
            CHECK(mixed_norm(F, {q, p, Axis::Y}) == doctest::Approx(ay * ax).epsilon(1e-8));
        }
    const double inf = std::numeric_limits<double>::infinity();
    // even node counts put the nearest nodes at half spacing from the peak
    const double hx = 0.5 * pg.hx(), hy = 0.5 * pg.hy();
    CHECK(mixed_norm(F, {inf, inf, Axis::X}) ==
          doctest::Approx(std::exp(-0.5 * hx * hx - hy * hy)).epsilon(1e-12));
    CHECK_THROWS_AS(mixed_norm(F, {0.5, 1.0, Axis::X}), std::invalid_argument);
}

TEST_CASE("fourier-wigner matches the rotated stft") {
    const Grid g = default_grid(1);
    PhaseGrid pg;
    HermiteCoeffs fc = random_coeff_vectors(1, 5, 21, 1)[0];
    HermiteCoeffs gc = random_coeff_vectors(1, 5, 22, 1)[0];
    PhasePlaneField W = fourier_wigner(fc, synthesize(gc, g), pg);
    PhasePlaneField V = stft(synthesize(fc, g), Window::from_coeffs(gc), pg);
    double dev = 0.0;
    for (int i = 0; i < pg.nx; ++i)
        for (int j = 0; j < pg.ny; ++j) {
            const cplx want = std::exp(cplx{0.0, -0.5 * pg.xnode(i) * pg.ynode(j)}) *
                              V.at(j, pg.ny - 1 - i);
            dev = std::max(dev, std::abs(W.at(i, j) - want));
        }
    CHECK(dev < 1e-8);
}

TEST_CASE("polar torus coefficients carry the phase and weight") {
    HermiteCoeffs c(1, 4);
    c.set({0}, cplx{1.0, 0.0});
    c.set({1}, cplx{0.0, 2.0});
    c.set({2}, cplx{1.0, 0.0});
    const double r = 1.5;
    TrigPolynomial P = to_polar_coeffs(c, {r});
    const double w = std::exp(-r * r / 4.0);
    CHECK(std::abs(P.coeffs.at({0}) - cplx{w, 0.0}) < 1e-15);
    // i * (2i) * r / sqrt(2) = -2 r / sqrt(2)
    CHECK(std::abs(P.coeffs.at({1}) - cplx{-2.0 * r / std::sqrt(2.0) * w, 0.0}) < 1e-15);
    // i^2 * r^2 / (sqrt(2) * 2) = -r^2 / (2 sqrt 2)
    CHECK(std::abs(P.coeffs.at({2}) - cplx{-r * r / (2.0 * std::sqrt(2.0)) * w, 0.0}) < 1e-15);

    CHECK(torus_lp_norm(P, 2.0) == doctest::Approx(torus_l2_exact(P)).epsilon(1e-12));
}

TEST_CASE("polar functional closed form for the ground state") {
    HermiteCoeffs d0 = delta_coeffs(1, 2, {0});
    auto one = SpectralSymbol::constant(1.0);
    CHECK(polar_modulation_functional(d0, one, 1.0) == doctest::Approx(2.0).epsilon(1e-3));
    CHECK(polar_modulation_functional(d0, one, 2.0) ==
          doctest::Approx(0.39894228040143268).epsilon(1e-3));
    CHECK(polar_modulation_functional(d0, one, 3.0) ==
          doctest::Approx(0.25655648770608439).epsilon(1e-3));
    CHECK_THROWS_AS(polar_modulation_functional(d0, one, 0.5), std::invalid_argument);
}

TEST_CASE("modulation norm closed form for the ground state") {
    HermiteCoeffs d0 = delta_coeffs(1, 2, {0});
    CHECK(modulation_norm(d0, 2.0, 2.0) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(modulation_norm(d0, 1.0, 1.0) ==
          doctest::Approx(5.013256549262001).epsilon(1e-5));
    CHECK(modulation_norm(d0, 3.0, 3.0) ==
          doctest::Approx(0.6430917461240918).epsilon(1e-5));
}

TEST_CASE("polar functional agrees with the cartesian norm") {
    HermiteCoeffs c = random_coeff_vectors(1, 8, 23, 1)[0];
    GridField f = synthesize(c, default_grid(1));
    auto one = SpectralSymbol::constant(1.0);
    for (double p : {1.0, 2.0, 3.0}) {
        const double polar = std::sqrt(two_pi) * polar_modulation_functional(c, one, p);
        CHECK(polar == doctest::Approx(modulation_norm(f, p, p)).epsilon(1e-3));
    }
}
