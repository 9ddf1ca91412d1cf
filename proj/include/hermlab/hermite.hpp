#pragma once

#include "hermlab/grid.hpp"
#include "hermlab/coeffs.hpp"

namespace hermlab {

// L^2-normalized Hermite functions h_k on the line,
//   h_0(x) = pi^{-1/4} exp(-x^2/2),
//   h_{k+1}(x) = x sqrt(2/(k+1)) h_k(x) - sqrt(k/(k+1)) h_{k-1}(x).
// The d-dimensional functions Phi_alpha are tensor products; they are
// eigenfunctions of H = -Laplace + |x|^2 with eigenvalue 2|alpha| + d.
double hermite_1d(int k, double x);

// h_0(x) .. h_N(x) in one recurrence sweep
std::vector<double> hermite_values_upto(int N, double x);

// table[k * n + i] = h_k(nodes[i])
std::vector<double> hermite_table(int N, const std::vector<double>& nodes);

double hermite_nd(const MultiIndex& alpha, const std::vector<double>& x);

// Phi_alpha^lambda(x) = |lambda|^{d/4} Phi_alpha(sqrt(|lambda|) x), lambda != 0
double scaled_hermite(const MultiIndex& alpha, double lambda, const std::vector<double>& x);

// Aliasing guard: resolving degrees up to N on [-L, L]^d needs
// n >= 4 sqrt(2N + d) L / pi nodes per axis.
bool nyquist_ok(const Grid& g, int N);

// c_alpha = trapezoid( f * Phi_alpha ) for all |alpha| <= N.
// Warns when the boundary magnitude of f exceeds 1e-14.
HermiteCoeffs analyze(const GridField& f, int N);

// f(x) = sum c_alpha Phi_alpha(x) sampled on the grid
GridField synthesize(const HermiteCoeffs& c, const Grid& g);

// sum over |alpha| <= N of c_alpha Phi_alpha at one point (exact, off grid)
cplx synthesize_at(const HermiteCoeffs& c, const std::vector<double>& x);

// Spectral projection onto the eigenspace 2|alpha| + d = 2k + d.
HermiteCoeffs project(const HermiteCoeffs& c, int k);

} // namespace hermlab
