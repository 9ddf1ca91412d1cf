#pragma once

#include "hermlab/coeffs.hpp"
#include "hermlab/spectral.hpp"
#include "hermlab/trigpoly.hpp"
#include "hermlab/timefreq.hpp"

namespace hermlab {

// m((2|xi|_1 + d)) with |xi|_1 = sum |xi_j|, for the oscillatory family:
// e^{i (2|xi|_1 + d)^gamma} / (2|xi|_1 + d)^beta.
cplx euclidean_symbol(const std::vector<double>& xi, double beta, double gamma);

// For each radius r in the sample: form the torus coefficients of f at r,
// apply m(2|alpha| + d) on the torus side, and compare torus L^p norms.
struct TransferenceRow {
    double r = 0.0;
    double lhs = 0.0, rhs = 0.0, ratio = 0.0;
};
struct TransferenceReport {
    std::vector<TransferenceRow> rows;
    double max_ratio = 0.0;
};
TransferenceReport transference_check(const HermiteCoeffs& c, const SpectralSymbol& m,
                                      double p, const std::vector<double>& radii,
                                      int n_theta = 256);
std::vector<double> default_radii(int count = 16, double rmax = 6.0);

// Subordination kernel k_sigma = inverse FT of e^{(i - sigma)(2|xi|_1 + d)^gamma},
// d = 1.  Computed on a fine conjugate pair of grids (frequency box chosen so
// the damped symbol is below 1e-14 at the edge, spatial oversampling >= 4x
// the target grid), then interpolated onto the target grid.
struct SubordinationParams {
    double sigma = 1.0;
    double gamma = 1.0;
};

struct KernelNative {
    double dxi = 0.0, dx = 0.0;
    int M = 0;
    std::vector<double> xi;      // frequency nodes, ascending, 0 included
    std::vector<cplx> symbol;    // e^{(i - sigma)(2|xi| + 1)^gamma}
    std::vector<cplx> k;         // kernel on the fine spatial grid
    double xnode(int j) const { return (j - M / 2) * dx; }
};

KernelNative subordination_kernel_native(const SubordinationParams& par, const Grid& target);
GridField subordination_kernel(const SubordinationParams& par, const Grid& target);

// Forward transform of the native kernel samples back to the frequency
// nodes; returns the max abs deviation from the symbol.
double kernel_roundtrip_error(const KernelNative& nat);

// L^1 mass of the kernel against the bound sigma^{-d/2} e^{-sigma d^gamma / 2}.
struct KernelL1Row {
    double sigma = 0.0, gamma = 0.0;
    double l1 = 0.0, bound = 0.0, ratio = 0.0;
};
struct KernelL1Report {
    std::vector<KernelL1Row> rows;
    double max_ratio = 0.0;
    double refinement_delta = 0.0; // relative change of max_ratio when n doubles
    bool pass = false;
};
KernelL1Report kernel_l1_bound_check(const std::vector<double>& sigmas,
                                     const std::vector<double>& gammas,
                                     const Grid& grid, double delta_tol = 0.05);

// CSV rows sigma,beta,gamma,d,l1_norm,bound,ratio (beta empty: the bound has
// none) and the JSON verdict {"check": ..., "max_ratio": ...,
// "refinement_delta": ..., "pass": ...}.
std::string kernel_l1_report_csv(const KernelL1Report& rep, int d);
std::string kernel_l1_report_json(const KernelL1Report& rep);

// (2|xi|_1 + d)^{-beta} = Gamma(beta/gamma)^{-1} int_0^inf
//   sigma^{beta/gamma - 1} e^{-sigma (2|xi|_1 + d)^gamma} dsigma,
// integrated in log-sigma with tails cut where the integrand falls below
// 1e-18 of its peak.  Returns the max relative identity error.
double gamma_subordination_error(const std::vector<double>& xi1_values,
                                 const std::vector<double>& betas,
                                 const std::vector<double>& gammas, int d);

} // namespace hermlab
