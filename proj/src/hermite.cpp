#include "hermlab/hermite.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include <Eigen/Core>

namespace hermlab {

namespace {
constexpr double pi = std::numbers::pi;

// f sampled on g as an Eigen matrix (d = 2), row index = first axis
Eigen::MatrixXcd field_matrix(const GridField& f) {
    const int n = f.grid.n;
    Eigen::MatrixXcd M(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            M(i, j) = f.at(i, j);
    return M;
}
} // namespace

double hermite_1d(int k, double x) {
    require(k >= 0, "hermite_1d: k must be non-negative");
    double hm = 0.0;
    double h = std::pow(pi, -0.25) * std::exp(-0.5 * x * x);
    for (int j = 0; j < k; ++j) {
        double hn = x * std::sqrt(2.0 / (j + 1)) * h - std::sqrt(double(j) / (j + 1)) * hm;
        hm = h;
        h = hn;
    }
    return h;
}

std::vector<double> hermite_values_upto(int N, double x) {
    std::vector<double> v(N + 1);
    double hm = 0.0;
    double h = std::pow(pi, -0.25) * std::exp(-0.5 * x * x);
    v[0] = h;
    for (int j = 0; j < N; ++j) {
        double hn = x * std::sqrt(2.0 / (j + 1)) * h - std::sqrt(double(j) / (j + 1)) * hm;
        hm = h;
        h = hn;
        v[j + 1] = h;
    }
    return v;
}

std::vector<double> hermite_table(int N, const std::vector<double>& nodes) {
    const int n = static_cast<int>(nodes.size());
    std::vector<double> t(static_cast<std::size_t>(N + 1) * n);
    for (int i = 0; i < n; ++i) {
        auto col = hermite_values_upto(N, nodes[i]);
        for (int k = 0; k <= N; ++k) t[static_cast<std::size_t>(k) * n + i] = col[k];
    }
    return t;
}

double hermite_nd(const MultiIndex& alpha, const std::vector<double>& x) {
    require(alpha.size() == x.size(), "hermite_nd: dimension mismatch");
    double p = 1.0;
    for (std::size_t j = 0; j < alpha.size(); ++j) p *= hermite_1d(alpha[j], x[j]);
    return p;
}

double scaled_hermite(const MultiIndex& alpha, double lambda, const std::vector<double>& x) {
    require(lambda != 0.0, "scaled_hermite: lambda must be nonzero");
    const double s = std::sqrt(std::abs(lambda));
    double p = 1.0;
    for (std::size_t j = 0; j < alpha.size(); ++j)
        p *= std::sqrt(s) * hermite_1d(alpha[j], s * x[j]);
    return p;
}

bool nyquist_ok(const Grid& g, int N) {
    return g.n >= 4.0 * std::sqrt(2.0 * N + g.d) * g.L / pi;
}

HermiteCoeffs analyze(const GridField& f, int N) {
    const Grid& g = f.grid;
    require(N >= 0, "analyze: N must be non-negative");
    if (!nyquist_ok(g, N))
        fail("analyze: grid too coarse for degree " + std::to_string(N) +
             ", need n >= 4 sqrt(2N + d) L / pi");
    double bm = max_boundary_magnitude(f);
    if (bm > 1e-14) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3e", bm);
        warn(std::string("analyze: boundary magnitude ") + buf +
             " exceeds 1e-14, coefficients may be contaminated");
    }

    auto nodes = g.nodes();
    auto w = g.weights();
    auto tab = hermite_table(N, nodes);
    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
        H(tab.data(), N + 1, g.n);

    HermiteCoeffs c(g.d, N);
    if (g.d == 1) {
        Eigen::VectorXcd fv(g.n);
        for (int i = 0; i < g.n; ++i) fv(i) = w[i] * f.at(i);
        Eigen::VectorXcd coef = H.cast<cplx>() * fv;
        for (int k = 0; k <= N; ++k) c.entries[{k}] = coef(k);
    } else {
        Eigen::MatrixXcd F = field_matrix(f);
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j)
                F(i, j) *= w[i] * w[j];
        Eigen::MatrixXcd C = H.cast<cplx>() * F * H.cast<cplx>().transpose();
        for (int k = 0; k <= N; ++k)
            for (int l = 0; l + k <= N; ++l)
                c.entries[{k, l}] = C(k, l);
    }
    return c;
}

GridField synthesize(const HermiteCoeffs& c, const Grid& g) {
    require(c.d == g.d, "synthesize: dimension mismatch");
    if (!nyquist_ok(g, c.N))
        fail("synthesize: grid too coarse for degree " + std::to_string(c.N));
    auto nodes = g.nodes();
    auto tab = hermite_table(c.N, nodes);
    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
        H(tab.data(), c.N + 1, g.n);

    GridField f(g);
    if (g.d == 1) {
        Eigen::VectorXcd coef = Eigen::VectorXcd::Zero(c.N + 1);
        for (const auto& [a, v] : c.entries) coef(a[0]) = v;
        Eigen::VectorXcd fv = H.cast<cplx>().transpose() * coef;
        for (int i = 0; i < g.n; ++i) f.at(i) = fv(i);
    } else {
        Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(c.N + 1, c.N + 1);
        for (const auto& [a, v] : c.entries) C(a[0], a[1]) = v;
        Eigen::MatrixXcd F = H.cast<cplx>().transpose() * C * H.cast<cplx>();
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j)
                f.at(i, j) = F(i, j);
    }
    return f;
}

cplx synthesize_at(const HermiteCoeffs& c, const std::vector<double>& x) {
    require(static_cast<int>(x.size()) == c.d, "synthesize_at: dimension mismatch");
    if (c.d == 1) {
        auto v = hermite_values_upto(c.N, x[0]);
        cplx s{0.0, 0.0};
        for (const auto& [a, coef] : c.entries) s += coef * v[a[0]];
        return s;
    }
    auto v0 = hermite_values_upto(c.N, x[0]);
    auto v1 = hermite_values_upto(c.N, x[1]);
    cplx s{0.0, 0.0};
    for (const auto& [a, coef] : c.entries) s += coef * (v0[a[0]] * v1[a[1]]);
    return s;
}

HermiteCoeffs project(const HermiteCoeffs& c, int k) {
    require(k >= 0, "project: k must be non-negative");
    HermiteCoeffs out(c.d, c.N);
    for (const auto& [a, v] : c.entries)
        if (mi_order(a) == k) out.entries[a] = v;
    return out;
}

} // namespace hermlab
