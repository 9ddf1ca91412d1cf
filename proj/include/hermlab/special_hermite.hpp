#pragma once

#include "hermlab/coeffs.hpp"
#include "hermlab/grid.hpp"

namespace hermlab {

// Samples over C^d identified with R^{2d}: z_j = x_j + i y_j.  For d = 1
// the grid is [-L, L]^2 with n nodes per axis; values are row major,
// values[ix * n + iy].
struct PlaneField {
    int d = 1;       // complex dimension
    double L = 8.0;
    int n = 96;
    std::vector<cplx> values;

    PlaneField() = default;
    PlaneField(int d_, double L_, int n_)
        : d(d_), L(L_), n(n_), values(static_cast<std::size_t>(n_) * n_, cplx{0.0, 0.0}) {
        require(d_ == 1, "PlaneField: implemented for complex dimension 1");
    }
    double spacing() const { return 2.0 * L / (n - 1); }
    double node(int i) const { return -L + spacing() * i; }
    cplx& at(int ix, int iy) { return values[static_cast<std::size_t>(ix) * n + iy]; }
    cplx at(int ix, int iy) const { return values[static_cast<std::size_t>(ix) * n + iy]; }
};

cplx plane_integrate(const PlaneField& F);
double plane_sup_error(const PlaneField& A, const PlaneField& B);
double plane_l2_inner_abs(const PlaneField& A, const PlaneField& B); // |<A,B>|

// Special Hermite function by quadrature,
//   Phi_{alpha,beta}^lambda(z) = (2 pi)^{-d/2} |lambda|^{d/2}
//     integral e^{i lambda (x xi + x y / 2)} Phi_alpha^lambda(xi + y)
//     Phi_beta^lambda(xi) dxi,   z = x + i y.
cplx special_hermite(const MultiIndex& alpha, const MultiIndex& beta,
                     double lambda, double zx, double zy);
PlaneField special_hermite_field(const MultiIndex& alpha, const MultiIndex& beta,
                                 double lambda, const PlaneField& proto);

// Closed form at lambda = 1, beta = 0:
//   Phi_{alpha,0}(z) = (2 pi)^{-d/2} (alpha!)^{-1/2} (i/sqrt{2})^{|alpha|}
//                      conj(z)^alpha e^{-|z|^2/4}.
cplx special_hermite_alpha0(const MultiIndex& alpha, double zx, double zy);

// Laguerre function phi_k^lambda(z) = L_k^{d-1}(|lambda||z|^2/2) e^{-|lambda||z|^2/4}
double laguerre_poly(int k, double a, double x);
double laguerre_fn(int k, int d, double lambda, double zsq);
PlaneField laguerre_field(int k, int d, double lambda, const PlaneField& proto);

// Twisted convolution
//   (F x_lambda G)(z) = integral F(z - w) G(w) e^{i lambda Im(z conj(w))/2} dw
// by direct summation; F at the half-grid offsets z - w comes from a
// precomputed cubic interpolation table.
PlaneField twisted_convolve(const PlaneField& F, const PlaneField& G, double lambda);

// Projection (2 pi)^{-d} |lambda|^d  F x_lambda phi_k^lambda
PlaneField special_hermite_project(const PlaneField& F, int k, double lambda);

} // namespace hermlab
