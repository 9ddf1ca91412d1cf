#pragma once

#include <map>
#include <functional>

#include "hermlab/multiindex.hpp"
#include "hermlab/grid.hpp"

namespace hermlab {

// Finitely supported Fourier coefficients on Z^d; evaluation
//   g(theta) = sum_mu a(mu) e^{i mu.theta}.
struct TrigPolynomial {
    int d = 1;
    std::map<std::vector<int>, cplx> coeffs;

    TrigPolynomial() = default;
    explicit TrigPolynomial(int d_) : d(d_) {}
    int max_abs_degree() const;
    cplx eval(const std::vector<double>& theta) const;
};

// Coefficient multiplier a(mu) -> m(mu) a(mu)
TrigPolynomial torus_multiplier(const TrigPolynomial& P,
                                const std::function<cplx(const std::vector<int>&)>& m);

// ( int_{[0,2pi)^d} |g|^p dtheta )^{1/p} by the rectangle rule with
// n_theta nodes per axis; requires n_theta >= 4 (max|mu_j| + 1).
// p = inf takes the grid max; p < 1 is rejected.
double torus_lp_norm(const TrigPolynomial& P, double p, int n_theta = 256);

// || g ||_{L^2}^2 = (2 pi)^d sum |a(mu)|^2
double torus_l2_exact(const TrigPolynomial& P);

} // namespace hermlab
