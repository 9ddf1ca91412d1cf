#include "hermlab/timefreq.hpp"
#include "hermlab/hermite.hpp"
#include "hermlab/fftutil.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Core>

namespace hermlab {

namespace {
constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

std::vector<double> trap_weights(double L, int n) {
    std::vector<double> w(n, 2.0 * L / (n - 1));
    w.front() *= 0.5;
    w.back() *= 0.5;
    return w;
}

void check_exponent(double p, const char* who) {
    require(p >= 1.0 || std::isinf(p), std::string(who) + ": exponent must be >= 1 or inf");
}

cplx i_power(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}
} // namespace

std::vector<double> PhaseGrid::xweights() const { return trap_weights(Lx, nx); }
std::vector<double> PhaseGrid::yweights() const { return trap_weights(Ly, ny); }

cplx Window::eval(double x) const {
    if (kind == Kind::Gaussian)
        return std::pow(pi, -0.25) * std::exp(-0.5 * x * x);
    return synthesize_at(coeffs, {x});
}

PhasePlaneField stft(const GridField& f, const Window& g, const PhaseGrid& pg) {
    require(f.grid.d == 1, "stft: implemented for d = 1");
    const int n = f.grid.n;
    auto t = f.grid.nodes();
    auto wt = f.grid.weights();

    // V(x, y) = pref * sum_t  e^{-i y t} [w_t f(t) conj(g(t - x))]
    Eigen::MatrixXcd E(pg.ny, n);
    for (int j = 0; j < pg.ny; ++j) {
        const double y = pg.ynode(j);
        for (int k = 0; k < n; ++k) E(j, k) = std::exp(cplx{0.0, -y * t[k]});
    }
    Eigen::MatrixXcd U(n, pg.nx);
    for (int i = 0; i < pg.nx; ++i) {
        const double x = pg.xnode(i);
        for (int k = 0; k < n; ++k)
            U(k, i) = wt[k] * f.at(k) * std::conj(g.eval(t[k] - x));
    }
    Eigen::MatrixXcd V = E * U; // (ny, nx)

    PhasePlaneField out(pg);
    const double pref = std::pow(two_pi, -0.5);
    for (int i = 0; i < pg.nx; ++i)
        for (int j = 0; j < pg.ny; ++j)
            out.at(i, j) = pref * V(j, i);
    return out;
}

PhasePlaneField fourier_wigner(const HermiteCoeffs& f, const GridField& g, const PhaseGrid& pg) {
    require(f.d == 1 && g.grid.d == 1, "fourier_wigner: implemented for d = 1");
    const int n = g.grid.n;
    auto xi = g.grid.nodes();
    auto wx = g.grid.weights();

    // W(x, y) = pref e^{i x y/2} sum_xi e^{i x xi} [w f(xi + y) conj(g(xi))]
    Eigen::MatrixXcd E(pg.nx, n);
    for (int i = 0; i < pg.nx; ++i) {
        const double x = pg.xnode(i);
        for (int k = 0; k < n; ++k) E(i, k) = std::exp(cplx{0.0, x * xi[k]});
    }
    Eigen::MatrixXcd U(n, pg.ny);
    for (int j = 0; j < pg.ny; ++j) {
        const double y = pg.ynode(j);
        for (int k = 0; k < n; ++k)
            U(k, j) = wx[k] * synthesize_at(f, {xi[k] + y}) * std::conj(g.at(k));
    }
    Eigen::MatrixXcd W = E * U; // (nx, ny)

    PhasePlaneField out(pg);
    const double pref = std::pow(two_pi, -0.5);
    for (int i = 0; i < pg.nx; ++i)
        for (int j = 0; j < pg.ny; ++j)
            out.at(i, j) = pref * std::exp(cplx{0.0, 0.5 * pg.xnode(i) * pg.ynode(j)}) * W(i, j);
    return out;
}

double mixed_norm(const PhasePlaneField& F, const MixedNormSpec& spec) {
    check_exponent(spec.p, "mixed_norm");
    check_exponent(spec.q, "mixed_norm");
    const PhaseGrid& g = F.grid;
    auto wx = g.xweights();
    auto wy = g.yweights();

    const bool inner_x = (spec.inner == Axis::X);
    const int n_in = inner_x ? g.nx : g.ny;
    const int n_out = inner_x ? g.ny : g.nx;
    const auto& w_in = inner_x ? wx : wy;
    const auto& w_out = inner_x ? wy : wx;

    auto value = [&](int i_in, int i_out) {
        return inner_x ? F.at(i_in, i_out) : F.at(i_out, i_in);
    };

    std::vector<double> inner(n_out, 0.0);
    for (int o = 0; o < n_out; ++o) {
        if (std::isinf(spec.p)) {
            double m = 0.0;
            for (int i = 0; i < n_in; ++i) m = std::max(m, std::abs(value(i, o)));
            inner[o] = m;
        } else {
            double acc = 0.0;
            for (int i = 0; i < n_in; ++i)
                acc += w_in[i] * std::pow(std::abs(value(i, o)), spec.p);
            inner[o] = std::pow(acc, 1.0 / spec.p);
        }
    }
    if (std::isinf(spec.q)) {
        double m = 0.0;
        for (int o = 0; o < n_out; ++o) m = std::max(m, inner[o]);
        return m;
    }
    double acc = 0.0;
    for (int o = 0; o < n_out; ++o) acc += w_out[o] * std::pow(inner[o], spec.q);
    return std::pow(acc, 1.0 / spec.q);
}

double modulation_norm(const GridField& f, double p, double q,
                       const Window& g, const PhaseGrid& pg) {
    check_exponent(p, "modulation_norm");
    check_exponent(q, "modulation_norm");
    PhasePlaneField V = stft(f, g, pg);
    return mixed_norm(V, {p, q, Axis::X});
}

double modulation_norm(const HermiteCoeffs& c, double p, double q,
                       const Window& g, const PhaseGrid& pg) {
    require(c.d == 1, "modulation_norm: implemented for d = 1");
    return modulation_norm(synthesize(c, default_grid(1)), p, q, g, pg);
}

TrigPolynomial to_polar_coeffs(const HermiteCoeffs& c, const std::vector<double>& r) {
    require(static_cast<int>(r.size()) == c.d, "to_polar_coeffs: dimension mismatch");
    double rsq = 0.0;
    for (double v : r) rsq += v * v;
    const double gauss = std::exp(-0.25 * rsq);

    TrigPolynomial P(c.d);
    for (const auto& [a, v] : c.entries) {
        const int k = mi_order(a);
        double radial = 1.0;
        for (int j = 0; j < c.d; ++j) radial *= std::pow(r[j], a[j]);
        const double scale = std::exp(-0.5 * mi_log_factorial(a) - 0.5 * k * std::numbers::ln2);
        cplx coef = v * i_power(k) * radial * gauss * scale;
        if (coef != cplx{0.0, 0.0}) P.coeffs[std::vector<int>(a.begin(), a.end())] = coef;
    }
    return P;
}

double polar_modulation_functional(const HermiteCoeffs& c, const SpectralSymbol& m,
                                   double p, const PolarQuadrature& quad) {
    check_exponent(p, "polar_modulation_functional");
    require(!std::isinf(p), "polar_modulation_functional: p must be finite");
    require(c.d == 1 || c.d == 2, "polar_modulation_functional: d must be 1 or 2");

    // b_alpha = m(2|alpha|+d) c_alpha i^{|alpha|} / (sqrt(alpha!) 2^{|alpha|/2})
    std::map<MultiIndex, cplx> b;
    for (const auto& [a, v] : c.entries) {
        const int k = mi_order(a);
        const double scale = std::exp(-0.5 * mi_log_factorial(a) - 0.5 * k * std::numbers::ln2);
        b[a] = m.eval(2.0 * k + c.d) * v * i_power(k) * scale;
    }

    const int n_r = (c.d == 2) ? std::min(quad.n_r, 64) : quad.n_r;
    const double hr = quad.R / (n_r - 1);
    const int nt = quad.n_theta;
    const double dth = two_pi / nt;

    double total = 0.0;
    if (c.d == 1) {
        // angular phase table e^{-i alpha theta_j}
        std::vector<cplx> ph(static_cast<std::size_t>(nt) * (c.N + 1));
        for (int j = 0; j < nt; ++j)
            for (int a = 0; a <= c.N; ++a)
                ph[static_cast<std::size_t>(j) * (c.N + 1) + a] =
                    std::exp(cplx{0.0, -a * (dth * j)});
        for (int ir = 0; ir < n_r; ++ir) {
            const double r = hr * ir;
            const double wr = (ir == 0 || ir == n_r - 1) ? 0.5 * hr : hr;
            std::vector<cplx> w(c.N + 1, cplx{0.0, 0.0});
            for (const auto& [a, v] : b) w[a[0]] = v * std::pow(r, a[0]);
            double ang = 0.0;
            for (int j = 0; j < nt; ++j) {
                cplx s{0.0, 0.0};
                const cplx* row = &ph[static_cast<std::size_t>(j) * (c.N + 1)];
                for (int a = 0; a <= c.N; ++a) s += w[a] * row[a];
                ang += std::pow(std::abs(s), p);
            }
            total += wr * r * std::exp(-0.25 * p * r * r) * ang * dth;
        }
    } else {
        std::vector<cplx> pad(static_cast<std::size_t>(nt) * nt);
        for (int i1 = 0; i1 < n_r; ++i1) {
            const double r1 = hr * i1;
            const double w1 = (i1 == 0 || i1 == n_r - 1) ? 0.5 * hr : hr;
            for (int i2 = 0; i2 < n_r; ++i2) {
                const double r2 = hr * i2;
                const double w2 = (i2 == 0 || i2 == n_r - 1) ? 0.5 * hr : hr;
                std::fill(pad.begin(), pad.end(), cplx{0.0, 0.0});
                for (const auto& [a, v] : b)
                    pad[static_cast<std::size_t>(a[0]) * nt + a[1]] =
                        v * std::pow(r1, a[0]) * std::pow(r2, a[1]);
                auto G = dft_2d(pad, nt, nt, -1); // G[j1][j2] = sum b r^a e^{-i a.theta_j}
                double ang = 0.0;
                for (const cplx& v : G) ang += std::pow(std::abs(v), p);
                total += w1 * w2 * r1 * r2 *
                         std::exp(-0.25 * p * (r1 * r1 + r2 * r2)) * ang * dth * dth;
            }
        }
    }
    return std::pow(two_pi, -c.d) * std::pow(total, 1.0 / p);
}

} // namespace hermlab
