#pragma once

#include <complex>
#include <vector>
#include <cstddef>

#include "hermlab/errors.hpp"

namespace hermlab {

using cplx = std::complex<double>;

// Uniform tensor grid on [-L, L]^d, n nodes per axis, nodes symmetric
// about the origin, spacing h = 2L/(n-1).
struct Grid {
    int d = 1;
    double L = 0.0;
    int n = 0;

    Grid() = default;
    Grid(int d_, double L_, int n_);

    double spacing() const { return 2.0 * L / (n - 1); }
    double node(int i) const { return -L + spacing() * i; }
    std::vector<double> nodes() const;
    // trapezoid weights along one axis
    std::vector<double> weights() const;
    std::size_t size() const;   // n^d
    bool operator==(const Grid& o) const { return d == o.d && L == o.L && n == o.n; }
};

// Default grids: d=1 -> L=12, n=1024; d=2 -> L=8, n=128.
Grid default_grid(int d);

// Complex samples of a function on a Grid, row major (last axis fastest).
struct GridField {
    Grid grid;
    std::vector<cplx> values;

    GridField() = default;
    explicit GridField(const Grid& g) : grid(g), values(g.size(), cplx{0.0, 0.0}) {}

    cplx& at(int i) { return values[i]; }                       // d = 1
    cplx& at(int i, int j) { return values[static_cast<std::size_t>(i) * grid.n + j]; } // d = 2
    cplx at(int i) const { return values[i]; }
    cplx at(int i, int j) const { return values[static_cast<std::size_t>(i) * grid.n + j]; }
};

// Trapezoid quadrature of the field and of powers of its modulus.
cplx integrate(const GridField& f);
double lp_norm(const GridField& f, double p);     // p in [1, inf), inf = grid max
double l2_norm(const GridField& f);
double max_boundary_magnitude(const GridField& f);

GridField sample(const Grid& g, const std::function<cplx(const std::vector<double>&)>& fn);

} // namespace hermlab
