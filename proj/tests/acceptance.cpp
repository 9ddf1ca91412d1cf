// Acceptance gate: each numbered block pins one end-to-end accuracy or
// stability requirement with its tolerance and prints one verdict line.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <string>
#include <vector>

#include "hermlab/ensemble.hpp"
#include "hermlab/hermite.hpp"
#include "hermlab/io.hpp"
#include "hermlab/special_hermite.hpp"
#include "hermlab/spectral.hpp"
#include "hermlab/timefreq.hpp"
#include "hermlab/torus.hpp"

using namespace hermlab;

namespace {
constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr std::uint64_t kSeed = 20240817ULL;

int g_passed = 0, g_total = 0;

void report(int id, const char* name, double measured, double tol, bool pass, double secs) {
    ++g_total;
    g_passed += pass;
    std::printf("[%2d] %s %-38s measured=%-12.4g tol=%-8.1g (%.1fs)\n", id,
                pass ? "PASS" : "FAIL", name, measured, tol, secs);
    std::fflush(stdout);
}

class Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  public:
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void c1_orthonormality() {
    Timer tm;
    const double tol = 1e-8;
    const Grid g(1, 12.0, 1024);
    auto w = g.weights();
    std::vector<double> x(g.n);
    for (int i = 0; i < g.n; ++i) x[i] = g.node(i);
    auto tab = hermite_table(20, x);
    double dev = 0.0;
    for (int k = 0; k <= 20; ++k)
        for (int l = k; l <= 20; ++l) {
            double s = 0.0;
            for (int i = 0; i < g.n; ++i)
                s += w[i] * tab[static_cast<std::size_t>(k) * g.n + i] *
                     tab[static_cast<std::size_t>(l) * g.n + i];
            dev = std::max(dev, std::abs(s - (k == l ? 1.0 : 0.0)));
        }
    report(1, "hermite orthonormality, deg <= 20", dev, tol, dev < tol, tm.secs());
}

void c2_roundtrip() {
    Timer tm;
    const double tol = 1e-8;
    const Grid g = default_grid(1);
    double dev = 0.0;
    for (const auto& c : random_coeff_vectors(1, 20, kSeed, 20))
        dev = std::max(dev, relative_l2_error(analyze(synthesize(c, g), 20), c));
    report(2, "analysis/synthesis round trip", dev, tol, dev < tol, tm.secs());
}

void c3_twisted_product() {
    Timer tm;
    const double tol = 1e-4;
    PlaneField proto(1, 8.0, 96);
    std::vector<std::pair<int, int>> ix;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) ix.push_back({a, b});
    std::vector<PlaneField> fields;
    for (auto [a, b] : ix)
        fields.push_back(special_hermite_field({a}, {b}, 1.0, proto));
    auto field_of = [&](int a, int b) -> const PlaneField& { return fields[a * 3 + b]; };
    double dev = 0.0;
    for (auto [a, b] : ix)
        for (auto [m, v] : ix) {
            PlaneField conv = twisted_convolve(field_of(a, b), field_of(m, v), 1.0);
            if (b == m) {
                PlaneField want = field_of(a, v);
                for (auto& z : want.values) z *= std::sqrt(two_pi);
                dev = std::max(dev, plane_sup_error(conv, want));
            } else {
                double sup = 0.0;
                for (const auto& z : conv.values) sup = std::max(sup, std::abs(z));
                dev = std::max(dev, sup);
            }
        }
    report(3, "twisted product rule, entries <= 2", dev, tol, dev < tol, tm.secs());
}

void c4_closed_form() {
    Timer tm;
    const double tol = 1e-6;
    double dev = 0.0;
    for (int k = 0; k <= 4; ++k)
        for (double zx : {-2.0, -1.0, 0.0, 1.0, 2.0})
            for (double zy : {-2.0, -1.0, 0.0, 1.0, 2.0})
                dev = std::max(dev, std::abs(special_hermite({k}, {0}, 1.0, zx, zy) -
                                             special_hermite_alpha0({k}, zx, zy)));
    report(4, "special hermite closed form, deg <= 4", dev, tol, dev < tol, tm.secs());
}

void c5_energy_identity() {
    Timer tm;
    const double tol = 1e-6;
    EnsembleSpec spec;
    // degree-40 members put mass near phase radius 9; a box of 12 at the
    // same node spacing keeps the truncated corner mass below 1e-9
    PhaseGrid pg{12.0, 12.0, 160, 160};
    double dev = 0.0;
    for (const auto& mem : make_ensemble(spec)) {
        GridField f = synthesize(mem.coeffs, spec.grid);
        PhasePlaneField V = stft(f, Window::gaussian(), pg);
        const double lhs = mixed_norm(V, {2.0, 2.0, Axis::X});
        const double rhs = l2_norm(f);
        dev = std::max(dev, std::abs(lhs - rhs) / rhs);
    }
    report(5, "energy identity over the ensemble", dev, tol, dev < tol, tm.secs());
}

void c6_wigner_identity() {
    Timer tm;
    const double tol = 1e-8;
    const Grid g = default_grid(1);
    PhaseGrid pg;
    auto fs = random_coeff_vectors(1, 10, kSeed + 1, 5);
    auto gs = random_coeff_vectors(1, 10, kSeed + 2, 5);
    double dev = 0.0;
    for (int k = 0; k < 5; ++k) {
        PhasePlaneField W = fourier_wigner(fs[k], synthesize(gs[k], g), pg);
        PhasePlaneField V = stft(synthesize(fs[k], g), Window::from_coeffs(gs[k]), pg);
        for (int i = 0; i < pg.nx; ++i)
            for (int j = 0; j < pg.ny; ++j) {
                const cplx want = std::exp(cplx{0.0, -0.5 * pg.xnode(i) * pg.ynode(j)}) *
                                  V.at(j, pg.ny - 1 - i);
                dev = std::max(dev, std::abs(W.at(i, j) - want));
            }
    }
    report(6, "fourier-wigner vs rotated stft", dev, tol, dev < tol, tm.secs());
}

void c7_schrodinger_isometry() {
    Timer tm;
    const double tol = 1e-3;
    const Grid g = default_grid(1);
    PhaseGrid pg;
    const std::vector<double> ps = {1.0, 1.5, 2.0, 3.0};
    double dev = 0.0;
    for (const auto& c : random_coeff_vectors(1, 20, kSeed + 3, 10)) {
        PhasePlaneField V = stft(synthesize(c, g), Window::gaussian(), pg);
        std::vector<double> base;
        for (double p : ps) base.push_back(mixed_norm(V, {p, p, Axis::X}));
        for (double t : {0.3, 1.0, pi / 4.0}) {
            PhasePlaneField Vt =
                stft(synthesize(schrodinger_propagate(c, t), g), Window::gaussian(), pg);
            for (std::size_t ip = 0; ip < ps.size(); ++ip)
                dev = std::max(dev, std::abs(mixed_norm(Vt, {ps[ip], ps[ip], Axis::X}) /
                                                 base[ip] -
                                             1.0));
        }
    }
    report(7, "schrodinger modulation isometry", dev, tol, dev < tol, tm.secs());
}

void c8_polar_cartesian() {
    Timer tm;
    const double tol = 1e-3;
    const Grid g = default_grid(1);
    const std::vector<SpectralSymbol> ms = {SpectralSymbol::constant(1.0),
                                            SpectralSymbol::oscillatory(1.0, 1.0),
                                            SpectralSymbol::schrodinger(0.5)};
    double dev = 0.0;
    for (const auto& c : random_coeff_vectors(1, 10, kSeed + 4, 3))
        for (const auto& m : ms) {
            GridField f = synthesize(apply_symbol(c, m), g);
            PhasePlaneField V = stft(f, Window::gaussian(), PhaseGrid{});
            for (double p : {1.0, 2.0, 3.0}) {
                const double cart = mixed_norm(V, {p, p, Axis::X});
                const double polar =
                    std::sqrt(two_pi) * polar_modulation_functional(c, m, p);
                dev = std::max(dev, std::abs(polar - cart) / cart);
            }
        }
    report(8, "polar vs cartesian modulation norm", dev, tol, dev < tol, tm.secs());
}

void c9_riesz_oracle() {
    Timer tm;
    const double tol = 1e-4;
    auto half_inv =
        SpectralSymbol::callable([](double lam) { return cplx{1.0 / std::sqrt(lam), 0.0}; });
    const double st[7] = {-1.0 / 60, 3.0 / 20, -3.0 / 4, 0.0, 3.0 / 4, -3.0 / 20, 1.0 / 60};
    double dev = 0.0;

    const Grid g1 = default_grid(1);
    for (int k = 0; k <= 10; ++k) {
        HermiteCoeffs c = delta_coeffs(1, 12, {k});
        GridField lhs = synthesize(riesz_transform(c, 0), g1);
        GridField base = synthesize(apply_symbol(c, half_inv), g1);
        double sup = 0.0, err = 0.0;
        for (int i = 3; i < g1.n - 3; ++i) {
            cplx dfi{0.0, 0.0};
            for (int s = -3; s <= 3; ++s) dfi += st[s + 3] * base.values[i + s];
            dfi /= g1.spacing();
            sup = std::max(sup, std::abs(lhs.values[i]));
            err = std::max(err, std::abs(lhs.values[i] - (-dfi + g1.node(i) * base.values[i])));
        }
        dev = std::max(dev, err / sup);
    }

    const Grid g2(2, 8.0, 256);
    const int n = g2.n;
    for (const auto& a : enumerate_multiindices(2, 10)) {
        HermiteCoeffs c = delta_coeffs(2, 12, a);
        HermiteCoeffs half = apply_symbol(c, half_inv);
        for (int axis : {0, 1}) {
            GridField lhs = synthesize(riesz_transform(c, axis), g2);
            GridField base = synthesize(half, g2);
            double sup = 0.0, err = 0.0;
            for (int i = 3; i < n - 3; ++i)
                for (int j = 3; j < n - 3; ++j) {
                    cplx dfi{0.0, 0.0};
                    for (int s = -3; s <= 3; ++s)
                        dfi += st[s + 3] * (axis == 0 ? base.at(i + s, j) : base.at(i, j + s));
                    dfi /= g2.spacing();
                    const double xj = g2.node(axis == 0 ? i : j);
                    const cplx want = -dfi + xj * base.at(i, j);
                    sup = std::max(sup, std::abs(lhs.at(i, j)));
                    err = std::max(err, std::abs(lhs.at(i, j) - want));
                }
            dev = std::max(dev, err / sup);
        }
    }
    report(9, "riesz vs finite-difference oracle", dev, tol, dev < tol, tm.secs());
}

void c10_gamma_identity() {
    Timer tm;
    const double tol = 1e-6;
    const double dev =
        gamma_subordination_error({0.0, 1.0, 3.0}, {0.5, 1.0, 2.0}, {0.5, 1.0, 2.0}, 1);
    report(10, "gamma subordination identity 3x3x3", dev, tol, dev < tol, tm.secs());
}

void c11_kernel_roundtrip() {
    Timer tm;
    const double tol = 1e-6;
    const Grid g = default_grid(1);
    double dev = 0.0;
    for (double s : {0.5, 1.0, 2.0})
        for (double ga : {0.5, 1.0, 2.0})
            dev = std::max(dev, kernel_roundtrip_error(subordination_kernel_native({s, ga}, g)));
    report(11, "kernel fourier round trip", dev, tol, dev < tol, tm.secs());
}

void c12_kernel_l1_stability() {
    Timer tm;
    const double tol = 0.05;
    const std::vector<double> sigmas = {0.1, 0.5, 1.0, 2.0, 5.0, 10.0};
    const Grid g = default_grid(1);
    double worst_delta = 0.0;
    bool finite = true;
    for (double ga : {0.5, 1.0, 2.0}) {
        auto rep = kernel_l1_bound_check(sigmas, {ga}, g, tol);
        finite = finite && std::isfinite(rep.max_ratio) && rep.max_ratio > 0.0;
        worst_delta = std::max(worst_delta, rep.refinement_delta);
    }
    report(12, "kernel l1 ratio grid stability", worst_delta, tol,
           finite && worst_delta < tol, tm.secs());
}

void c13_transference() {
    Timer tm;
    HermiteCoeffs c = random_coeff_vectors(1, 12, kSeed + 5, 1)[0];
    const auto r16 = default_radii(16);

    auto rep1 = transference_check(c, SpectralSymbol::constant(1.0), 3.0, r16);
    double dev1 = 0.0;
    for (const auto& row : rep1.rows) dev1 = std::max(dev1, std::abs(row.ratio - 1.0));

    double dev2 = 0.0;
    for (double p : {2.0, 4.0}) {
        auto rep = transference_check(c, SpectralSymbol::schrodinger(0.7), p, r16);
        for (const auto& row : rep.rows) dev2 = std::max(dev2, std::abs(row.ratio - 1.0));
    }

    auto m = SpectralSymbol::oscillatory(2.0, 1.0);
    auto osc16 = transference_check(c, m, 4.0, r16);
    auto osc32 = transference_check(c, m, 4.0, default_radii(32));
    const double drift = std::abs(osc32.max_ratio - osc16.max_ratio) / osc16.max_ratio;

    const bool pass = dev1 == 0.0 && dev2 < 1e-10 && std::isfinite(osc16.max_ratio) &&
                      drift < 0.10;
    report(13, "torus transference chain", std::max({dev1, dev2, drift}), 0.10, pass,
           tm.secs());
}

void c14_region_probe() {
    Timer tm;
    const double tol = 0.10;
    auto m = SpectralSymbol::oscillatory(0.5, 2.0); // bounded band |1/p-1/2| < 0.25
    EnsembleSpec s20, s40;
    s20.N = 20;
    s40.N = 40;
    // the ensemble max saturates at |m(d)| = 1 (lowest eigenfunction), so the
    // random-member maximum is printed alongside as the sharper diagnostic
    auto rand_max = [](const NormEstimate& est) {
        double r = 0.0;
        for (const auto& row : est.rows)
            if (row.member.rfind("rand_", 0) == 0) r = std::max(r, row.ratio);
        return r;
    };
    double worst = 0.0;
    for (double p : {1.5, 2.0, 3.0}) {
        const auto e20 = estimate_operator_norm(m, p, p, s20, NormBackend::Polar);
        const auto e40 = estimate_operator_norm(m, p, p, s40, NormBackend::Polar);
        worst = std::max(worst, std::abs(e40.max_ratio / e20.max_ratio - 1.0));
        std::printf("     inside  p=%-4g ratio(N=20)=%.6f ratio(N=40)=%.6f rand-max %.6f -> %.6f\n",
                    p, e20.max_ratio, e40.max_ratio, rand_max(e20), rand_max(e40));
    }
    for (double p : {1.0, 6.0}) {
        const auto e20 = estimate_operator_norm(m, p, p, s20, NormBackend::Polar);
        const auto e40 = estimate_operator_norm(m, p, p, s40, NormBackend::Polar);
        std::printf("     outside p=%-4g ratio(N=20)=%.6f ratio(N=40)=%.6f rand-max %.6f -> %.6f"
                    " (not asserted)\n",
                    p, e20.max_ratio, e40.max_ratio, rand_max(e20), rand_max(e40));
    }
    report(14, "multiplier region probe beta/gamma=0.5/2", worst, tol, worst < tol, tm.secs());
}

void c15_determinism(const char* cli) {
    Timer tm;
    if (cli == nullptr) {
        report(15, "determinism of repeated verify runs", 1.0, 0.0, false, tm.secs());
        return;
    }
    namespace fs = std::filesystem;
    const fs::path base = fs::temp_directory_path() / "hermlab_acceptance";
    fs::remove_all(base);
    fs::create_directories(base);
    bool ok = true;
    for (const char* run : {"a", "b"}) {
        const std::string cmd = std::string("\"") + cli + "\" verify all --seed 20240817 --out " +
                                (base / run).string() + " > " + (base / run).string() +
                                ".stdout 2> " + (base / run).string() + ".stderr";
        ok = ok && std::system(cmd.c_str()) == 0;
    }
    double mismatched = ok ? 0.0 : 1.0;
    if (ok)
        for (const char* f : {"verify_all.csv", "verify_all.json", "kernel_l1.csv",
                              "kernel_l1.json"}) {
            const std::string a = read_text_file((base / "a" / f).string());
            const std::string b = read_text_file((base / "b" / f).string());
            if (a != b || a.empty()) mismatched += 1.0;
        }
    report(15, "determinism of repeated verify runs", mismatched, 0.0,
           ok && mismatched == 0.0, tm.secs());
}
} // namespace

int main(int argc, char** argv) {
    c1_orthonormality();
    c2_roundtrip();
    c3_twisted_product();
    c4_closed_form();
    c5_energy_identity();
    c6_wigner_identity();
    c7_schrodinger_isometry();
    c8_polar_cartesian();
    c9_riesz_oracle();
    c10_gamma_identity();
    c11_kernel_roundtrip();
    c12_kernel_l1_stability();
    c13_transference();
    c14_region_probe();
    c15_determinism(argc > 1 ? argv[1] : nullptr);
    std::printf("%d/%d acceptance criteria passed\n", g_passed, g_total);
    return g_passed == g_total ? 0 : 1;
}
