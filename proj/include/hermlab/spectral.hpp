#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "hermlab/coeffs.hpp"

namespace hermlab {

// Spectral multiplier m evaluated on the eigenvalues 2|alpha| + d of the
// Hermite operator H = -Laplace + |x|^2.  Families:
//   constant     m(lambda) = value
//   oscillatory  m(lambda) = e^{i lambda^gamma} / lambda^beta
//   schrodinger  m(lambda) = e^{i t lambda}
//   wave         m(lambda) = sin(t sqrt(lambda)) / sqrt(lambda)
//   table        finite eigenvalue -> value map, exact lookup only
//   callable     arbitrary function, not serializable
struct SpectralSymbol {
    enum class Family { Constant, Oscillatory, Schrodinger, Wave, Table, Callable };

    Family family = Family::Constant;
    cplx value{1.0, 0.0};             // constant
    double beta = 0.0, gamma = 1.0;   // oscillatory
    double t = 0.0;                   // schrodinger / wave
    std::map<double, cplx> table;
    std::function<cplx(double)> fn;   // callable

    cplx eval(double lambda) const;
    // true when eval is defined for every lambda > 0, not just eigenvalues
    bool continuum() const { return family != Family::Table; }

    static SpectralSymbol constant(cplx v);
    static SpectralSymbol oscillatory(double beta, double gamma);
    static SpectralSymbol schrodinger(double t);
    static SpectralSymbol wave(double t);
    static SpectralSymbol from_table(std::map<double, cplx> entries);
    static SpectralSymbol callable(std::function<cplx(double)> fn);
};

// c_alpha -> m(2|alpha| + d) c_alpha
HermiteCoeffs apply_symbol(const HermiteCoeffs& c, const SpectralSymbol& m);

// e^{itH}: c_alpha -> e^{it(2|alpha| + d)} c_alpha
HermiteCoeffs schrodinger_propagate(const HermiteCoeffs& c, double t);

// sin(t sqrt(H)) H^{-1/2}
HermiteCoeffs wave_propagate(const HermiteCoeffs& c, double t);

// R_j = (-d/dx_j + x_j) H^{-1/2}; raises degree by one, which is kept.
HermiteCoeffs riesz_transform(const HermiteCoeffs& c, int j);

// Scaled local Sobolev norm: sup over a dyadic t-sample of
//   || (1 + |tau|^2)^{beta/2}  F[ psi m(t .) ] ||_{L^2},
// psi(s) = exp(-1/((s - 1/2)(1 - s))) on (1/2, 1), zero elsewhere.
struct SlocSpec {
    double beta = 1.0;
    int t_samples = 81;          // 2^{-10} .. 2^{10}, log-uniform
    double log2_t_min = -10.0;
    double log2_t_max = 10.0;
    double s_halfwidth = 2.0;    // sample grid [-Ls, Ls] for the transform
    int s_nodes = 4096;
};

struct SlocResult {
    double value = 0.0;          // max over sampled t
    bool diverged = false;       // monotone growth by more than 10x
    std::vector<double> per_t;
};

SlocResult sloc_sobolev_norm(const SpectralSymbol& m, const SlocSpec& spec);

} // namespace hermlab
