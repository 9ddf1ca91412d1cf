#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "hermlab/ensemble.hpp"
#include "hermlab/hermite.hpp"

using namespace hermlab;
namespace {
constexpr double pi = std::numbers::pi;

// physicists' polynomials H_0..H_5
double physicists_h(int k, double x) {
    switch (k) {
        case 0: return 1.0;
        case 1: return 2.0 * x;
        case 2: return 4.0 * x * x - 2.0;
        case 3: return 8.0 * x * x * x - 12.0 * x;
        case 4: return 16.0 * std::pow(x, 4) - 48.0 * x * x + 12.0;
        case 5: return 32.0 * std::pow(x, 5) - 160.0 * x * x * x + 120.0 * x;
    }
    return 0.0;
}
} // namespace

TEST_CASE("hermite values against the explicit low-order polynomials") {
    for (double x : {-3.0, -1.3, -1.0, 0.0, 0.4, 0.5, 2.0}) {
        double kfact = 1.0;
        for (int k = 0; k <= 5; ++k) {
            if (k > 0) kfact *= k;
            const double want = physicists_h(k, x) * std::exp(-0.5 * x * x) /
                                std::sqrt(std::sqrt(pi) * std::pow(2.0, k) * kfact);
            CHECK(hermite_1d(k, x) == doctest::Approx(want).epsilon(1e-13));
        }
    }
    CHECK(hermite_1d(1, 1.0) == doctest::Approx(0.64428836511347518).epsilon(1e-14));
    CHECK(hermite_1d(4, 0.5) == doctest::Approx(0.033826737200852332).epsilon(1e-13));
}

TEST_CASE("orthonormality on the default grid") {
    const Grid g = default_grid(1);
    auto w = g.weights();
    std::vector<double> x(g.n);
    for (int i = 0; i < g.n; ++i) x[i] = g.node(i);
    auto tab = hermite_table(10, x);
    for (int k = 0; k <= 10; ++k)
        for (int l = k; l <= 10; ++l) {
            double s = 0.0;
            for (int i = 0; i < g.n; ++i)
                s += w[i] * tab[static_cast<std::size_t>(k) * g.n + i] *
                     tab[static_cast<std::size_t>(l) * g.n + i];
            CHECK(std::abs(s - (k == l ? 1.0 : 0.0)) < 1e-12);
        }
}

TEST_CASE("multi-index enumeration is graded and complete") {
    auto idx = enumerate_multiindices(2, 3);
    CHECK(idx.size() == 10); // binomial(3 + 2, 2)
    CHECK(idx.front() == MultiIndex{0, 0});
    for (std::size_t i = 1; i < idx.size(); ++i)
        CHECK(mi_order(idx[i - 1]) <= mi_order(idx[i]));
    for (const auto& a : idx) CHECK(mi_order(a) <= 3);
}

TEST_CASE("gaussian analyzes to the lowest mode") {
    const Grid g = default_grid(1);
    GridField f = sample(g, [](const std::vector<double>& x) {
        return cplx{std::exp(-0.5 * x[0] * x[0]), 0.0};
    });
    HermiteCoeffs c = analyze(f, 10);
    CHECK(c.get({0}).real() == doctest::Approx(1.3313353638003897).epsilon(1e-13));
    for (int k = 1; k <= 10; ++k) CHECK(std::abs(c.get({k})) < 1e-12);

    GridField xf = sample(g, [](const std::vector<double>& x) {
        return cplx{x[0] * std::exp(-0.5 * x[0] * x[0]), 0.0};
    });
    CHECK(analyze(xf, 10).get({1}).real() ==
          doctest::Approx(0.94139626377671481).epsilon(1e-13));
}

TEST_CASE("analysis inverts synthesis") {
    const Grid g = default_grid(1);
    for (const auto& c : random_coeff_vectors(1, 20, 99, 3))
        CHECK(relative_l2_error(analyze(synthesize(c, g), 20), c) < 1e-10);
    const Grid g2 = default_grid(2);
    for (const auto& c : random_coeff_vectors(2, 8, 7, 2))
        CHECK(relative_l2_error(analyze(synthesize(c, g2), 8), c) < 1e-10);
}

TEST_CASE("pointwise synthesis matches grid synthesis") {
    const Grid g(1, 10.0, 256);
    HermiteCoeffs c = random_coeff_vectors(1, 6, 3, 1)[0];
    GridField f = synthesize(c, g);
    for (int i : {0, 31, 128, 255})
        CHECK(std::abs(f.values[i] - synthesize_at(c, {g.node(i)})) < 1e-12);
}

TEST_CASE("synthesis preserves the coefficient norm") {
    const Grid g = default_grid(1);
    for (const auto& c : random_coeff_vectors(1, 20, 11, 3))
        CHECK(l2_norm(synthesize(c, g)) == doctest::Approx(l2_norm(c)).epsilon(1e-8));
}

TEST_CASE("eigenspace projection is idempotent and orthogonal") {
    HermiteCoeffs c = random_coeff_vectors(1, 6, 13, 1)[0];
    for (int k : {0, 2, 5}) {
        HermiteCoeffs pk = project(c, k);
        CHECK(relative_l2_error(project(pk, k), pk) == 0.0);
        for (int kp : {1, 3})
            if (kp != k) CHECK(l2_norm(project(pk, kp)) == 0.0);
    }
    // the graded pieces reassemble to the original vector
    HermiteCoeffs sum(c.d, c.N);
    for (int k = 0; k <= 6; ++k)
        for (const auto& [a, v] : project(c, k).entries) sum.entries[a] += v;
    CHECK(relative_l2_error(sum, c) < 1e-15);
}

TEST_CASE("scaled hermite value") {
    CHECK(scaled_hermite({0}, 4.0, {0.0}) ==
          doctest::Approx(1.0622519320271969).epsilon(1e-14));
    // lambda scaling preserves the L2 norm: |lambda|^{1/4} h(sqrt|lambda| x)
    CHECK(scaled_hermite({2}, 2.0, {0.7}) ==
          doctest::Approx(std::pow(2.0, 0.25) * hermite_1d(2, std::sqrt(2.0) * 0.7))
              .epsilon(1e-14));
}

TEST_CASE("undersampled grids are rejected") {
    const Grid coarse(1, 12.0, 64);
    GridField f = sample(coarse, [](const std::vector<double>& x) {
        return cplx{std::exp(-0.5 * x[0] * x[0]), 0.0};
    });
    CHECK_THROWS_AS(analyze(f, 40), std::runtime_error);
}

TEST_CASE("boundary mass raises a warning") {
    std::vector<std::string> log;
    set_warning_sink([&](const std::string& m) { log.push_back(m); });
    const Grid g = default_grid(1);
    GridField wide = sample(g, [](const std::vector<double>& x) {
        return cplx{std::exp(-x[0] * x[0] / 50.0), 0.0};
    });
    (void)analyze(wide, 4);
    set_warning_sink(nullptr);
    REQUIRE(!log.empty());
    CHECK(log.front().find("boundary") != std::string::npos);
}

TEST_CASE("grid norms") {
    const Grid g = default_grid(1);
    GridField f = sample(g, [](const std::vector<double>& x) {
        return cplx{std::exp(-x[0] * x[0]), 0.0};
    });
    CHECK(l2_norm(f) == doctest::Approx(1.1195151349202476).epsilon(1e-12));
    // n is even, so the closest nodes to the peak sit at +-spacing/2
    const double half = 0.5 * g.spacing();
    CHECK(lp_norm(f, std::numeric_limits<double>::infinity()) ==
          doctest::Approx(std::exp(-half * half)).epsilon(1e-14));
    CHECK_THROWS_AS(lp_norm(f, 0.5), std::invalid_argument);
}
