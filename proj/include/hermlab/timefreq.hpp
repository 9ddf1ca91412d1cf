#pragma once

#include <functional>

#include "hermlab/coeffs.hpp"
#include "hermlab/fftutil.hpp"
#include "hermlab/trigpoly.hpp"
#include "hermlab/spectral.hpp"

namespace hermlab {

// Phase plane [-Lx, Lx] x [-Ly, Ly] (d = 1): x is the translation slot,
// y the modulation slot.  Default: Lx = Ly = 10, 128 nodes per axis.
struct PhaseGrid {
    double Lx = 10.0, Ly = 10.0;
    int nx = 128, ny = 128;

    double hx() const { return 2.0 * Lx / (nx - 1); }
    double hy() const { return 2.0 * Ly / (ny - 1); }
    double xnode(int i) const { return -Lx + hx() * i; }
    double ynode(int j) const { return -Ly + hy() * j; }
    std::vector<double> xweights() const;
    std::vector<double> yweights() const;
    bool operator==(const PhaseGrid& o) const {
        return Lx == o.Lx && Ly == o.Ly && nx == o.nx && ny == o.ny;
    }
};

struct PhasePlaneField {
    PhaseGrid grid;
    std::vector<cplx> values; // row major, values[ix * ny + iy]

    PhasePlaneField() = default;
    explicit PhasePlaneField(const PhaseGrid& g)
        : grid(g), values(static_cast<std::size_t>(g.nx) * g.ny, cplx{0.0, 0.0}) {}
    cplx& at(int ix, int iy) { return values[static_cast<std::size_t>(ix) * grid.ny + iy]; }
    cplx at(int ix, int iy) const { return values[static_cast<std::size_t>(ix) * grid.ny + iy]; }
};

// Window for the STFT.  The default is the L^2-normalized Gaussian
// Phi_0(x) = pi^{-1/4} e^{-x^2/2}, evaluated in closed form; a coefficient
// window is evaluated by exact synthesis at shifted points.
struct Window {
    enum class Kind { Gaussian, Coeffs } kind = Kind::Gaussian;
    HermiteCoeffs coeffs;

    static Window gaussian() { return Window{}; }
    static Window from_coeffs(HermiteCoeffs c) {
        Window w;
        w.kind = Kind::Coeffs;
        w.coeffs = std::move(c);
        return w;
    }
    cplx eval(double x) const;
};

// V_g f(x, y) = (2 pi)^{-1/2} integral f(t) conj(g(t - x)) e^{-i y t} dt,
// f integrated on its own grid, window evaluated exactly at t - x.
PhasePlaneField stft(const GridField& f, const Window& g, const PhaseGrid& pg);

// W_g f(x, y) = (2 pi)^{-1/2} integral e^{i(x xi + x y / 2)} f(xi + y) conj(g(xi)) dxi.
// f must be given by coefficients so the shifted argument is exact.
PhasePlaneField fourier_wigner(const HermiteCoeffs& f, const GridField& g, const PhaseGrid& pg);

// Mixed norm of a phase-plane field: inner integral over `inner` with
// exponent p, outer integral with exponent q.  M^{p,q} uses inner = X;
// the L^{p,q}(R^2) norm with inner y-integration at exponent q is
// mixed_norm(F, {q, p, Axis::Y}).  Exponent inf takes the grid max.
enum class Axis { X, Y };
struct MixedNormSpec {
    double p = 2.0;  // inner exponent
    double q = 2.0;  // outer exponent
    Axis inner = Axis::X;
};
double mixed_norm(const PhasePlaneField& F, const MixedNormSpec& spec);

// || f ||_{M^{p,q}} = ( int ( int |V_g f(x,y)|^p dx )^{q/p} dy )^{1/q}
double modulation_norm(const GridField& f, double p, double q,
                       const Window& g = Window::gaussian(),
                       const PhaseGrid& pg = PhaseGrid{});
double modulation_norm(const HermiteCoeffs& c, double p, double q,
                       const Window& g = Window::gaussian(),
                       const PhaseGrid& pg = PhaseGrid{});

// Torus coefficients at radius vector r:
//   a_alpha = c_alpha i^{|alpha|} r^alpha e^{-|r|^2/4} / (sqrt(alpha!) 2^{|alpha|/2}).
// Stored on support alpha in N^d; the canonical evaluation
// sum a_alpha e^{i alpha.theta} has the same torus L^p norms as the
// e^{-i alpha.theta} convention (substitute theta -> -theta).
TrigPolynomial to_polar_coeffs(const HermiteCoeffs& c, const std::vector<double>& r);

// (2 pi)^{-d} [ prod_j int_0^R int_0^{2 pi} | sum_alpha m(2|alpha|+d) c_alpha
//   i^{|alpha|} r^alpha e^{-i alpha.theta} / (sqrt(alpha!) 2^{|alpha|/2}) |^p
//   e^{-p |r|^2/4} r_j dtheta_j dr_j ]^{1/p}
// Equals (2 pi)^{-d/2} || m(H) f ||_{M^{p,p}}.
struct PolarQuadrature {
    double R = 12.0;
    int n_r = 256;      // trapezoid nodes per radial axis (64 for d = 2)
    int n_theta = 256;  // uniform nodes per angular axis
};
double polar_modulation_functional(const HermiteCoeffs& c, const SpectralSymbol& m,
                                   double p, const PolarQuadrature& quad = PolarQuadrature{});

} // namespace hermlab
