#include "hermlab/grid.hpp"
#include "hermlab/multiindex.hpp"
#include "hermlab/coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>

namespace hermlab {

namespace {
WarnSink g_sink;
}

void set_warning_sink(WarnSink sink) { g_sink = std::move(sink); }

void warn(const std::string& msg) {
    if (g_sink) g_sink(msg);
    else std::cerr << "warning: " << msg << "\n";
}

std::vector<MultiIndex> enumerate_multiindices(int d, int N) {
    require(d >= 1 && N >= 0, "enumerate_multiindices: need d >= 1, N >= 0");
    std::vector<MultiIndex> out;
    MultiIndex cur(d, 0);
    std::function<void(int, int)> rec = [&](int axis, int left) {
        if (axis == d - 1) {
            for (int v = 0; v <= left; ++v) {
                cur[axis] = v;
                out.push_back(cur);
            }
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[axis] = v;
            rec(axis + 1, left - v);
        }
    };
    rec(0, N);
    std::stable_sort(out.begin(), out.end(), [](const MultiIndex& a, const MultiIndex& b) {
        int oa = mi_order(a), ob = mi_order(b);
        if (oa != ob) return oa < ob;
        return a < b;
    });
    return out;
}

Grid::Grid(int d_, double L_, int n_) : d(d_), L(L_), n(n_) {
    require(d >= 1 && d <= 2, "Grid: d must be 1 or 2");
    require(L > 0.0, "Grid: L must be positive");
    require(n >= 2, "Grid: need at least two nodes per axis");
}

std::vector<double> Grid::nodes() const {
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = node(i);
    return x;
}

std::vector<double> Grid::weights() const {
    std::vector<double> w(n, spacing());
    w.front() *= 0.5;
    w.back() *= 0.5;
    return w;
}

std::size_t Grid::size() const {
    std::size_t s = 1;
    for (int k = 0; k < d; ++k) s *= static_cast<std::size_t>(n);
    return s;
}

Grid default_grid(int d) {
    if (d == 1) return Grid(1, 12.0, 1024);
    if (d == 2) return Grid(2, 8.0, 128);
    fail("default_grid: only d = 1, 2 are supported");
}

cplx integrate(const GridField& f) {
    const Grid& g = f.grid;
    auto w = g.weights();
    cplx acc{0.0, 0.0};
    if (g.d == 1) {
        for (int i = 0; i < g.n; ++i) acc += w[i] * f.at(i);
    } else {
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j)
                acc += w[i] * w[j] * f.at(i, j);
    }
    return acc;
}

double lp_norm(const GridField& f, double p) {
    require(p >= 1.0 || std::isinf(p), "lp_norm: p must be >= 1 or inf");
    if (std::isinf(p)) {
        double m = 0.0;
        for (const cplx& v : f.values) m = std::max(m, std::abs(v));
        return m;
    }
    const Grid& g = f.grid;
    auto w = g.weights();
    double acc = 0.0;
    if (g.d == 1) {
        for (int i = 0; i < g.n; ++i) acc += w[i] * std::pow(std::abs(f.at(i)), p);
    } else {
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j)
                acc += w[i] * w[j] * std::pow(std::abs(f.at(i, j)), p);
    }
    return std::pow(acc, 1.0 / p);
}

double l2_norm(const GridField& f) {
    const Grid& g = f.grid;
    auto w = g.weights();
    double acc = 0.0;
    if (g.d == 1) {
        for (int i = 0; i < g.n; ++i) acc += w[i] * std::norm(f.at(i));
    } else {
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j)
                acc += w[i] * w[j] * std::norm(f.at(i, j));
    }
    return std::sqrt(acc);
}

double max_boundary_magnitude(const GridField& f) {
    const Grid& g = f.grid;
    double m = 0.0;
    if (g.d == 1) {
        m = std::max(std::abs(f.at(0)), std::abs(f.at(g.n - 1)));
    } else {
        for (int i = 0; i < g.n; ++i) {
            m = std::max(m, std::abs(f.at(i, 0)));
            m = std::max(m, std::abs(f.at(i, g.n - 1)));
            m = std::max(m, std::abs(f.at(0, i)));
            m = std::max(m, std::abs(f.at(g.n - 1, i)));
        }
    }
    return m;
}

GridField sample(const Grid& g, const std::function<cplx(const std::vector<double>&)>& fn) {
    GridField f(g);
    std::vector<double> x(g.d);
    if (g.d == 1) {
        for (int i = 0; i < g.n; ++i) {
            x[0] = g.node(i);
            f.at(i) = fn(x);
        }
    } else {
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j) {
                x[0] = g.node(i);
                x[1] = g.node(j);
                f.at(i, j) = fn(x);
            }
    }
    return f;
}

HermiteCoeffs delta_coeffs(int d, int N, const MultiIndex& a) {
    HermiteCoeffs c(d, N);
    c.set(a, cplx{1.0, 0.0});
    return c;
}

double l2_norm(const HermiteCoeffs& c) {
    double s = 0.0;
    for (const auto& [a, v] : c.entries) s += std::norm(v);
    return std::sqrt(s);
}

double relative_l2_error(const HermiteCoeffs& a, const HermiteCoeffs& b) {
    double num = 0.0;
    std::map<MultiIndex, cplx> joined = a.entries;
    for (const auto& [k, v] : b.entries) joined[k] += cplx{0.0, 0.0};
    for (const auto& [k, unused] : joined) {
        (void)unused;
        num += std::norm(a.get(k) - b.get(k));
    }
    double den = l2_norm(b);
    require(den > 0.0, "relative_l2_error: reference has zero norm");
    return std::sqrt(num) / den;
}

} // namespace hermlab
