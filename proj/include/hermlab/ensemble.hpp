#pragma once

#include <cstdint>
#include <string>

#include "hermlab/timefreq.hpp"

namespace hermlab {

// Probe family for operator-norm lower bounds: unit coefficient vectors
// delta_alpha for |alpha| <= 8, Gaussians e^{-a|x|^2/2} (a = 1/4, 1, 4),
// chirps e^{ib|x|^2/2} e^{-|x|^2/2} (b = 1, 3), and 32 random coefficient
// vectors c_alpha ~ complex Gaussian * (1 + |alpha|)^{-2} drawn from
// mt19937_64 with the given seed in enumeration order.
struct EnsembleSpec {
    int d = 1;
    int N = 40;
    Grid grid = default_grid(1);
    std::uint64_t seed = 20240817ULL;
    int n_random = 32;
    int delta_max_order = 8;
};

struct EnsembleMember {
    std::string name;
    HermiteCoeffs coeffs;
};

std::vector<EnsembleMember> make_ensemble(const EnsembleSpec& spec);

// count random coefficient vectors on |alpha| <= N
std::vector<HermiteCoeffs> random_coeff_vectors(int d, int N, std::uint64_t seed, int count);

// max over the ensemble of ||m(H) f||_{M^{p,q}} / ||f||_{M^{p,q}}.
// The Cartesian backend goes through the STFT; the polar backend (p = q
// only) goes through the polar functional, whose prefactor cancels in the
// ratio.  Reported values are empirical lower bounds for the operator norm.
enum class NormBackend { Cartesian, Polar };

struct NormEstimateRow {
    std::string member;
    double ratio = 0.0;
    double norm_in = 0.0, norm_out = 0.0;
};
struct NormEstimate {
    double max_ratio = 0.0;
    std::string argmax;
    int skipped = 0;
    std::vector<NormEstimateRow> rows;
};

NormEstimate estimate_operator_norm(const SpectralSymbol& m, double p, double q,
                                    const EnsembleSpec& spec,
                                    NormBackend backend = NormBackend::Cartesian);

// same, over a prebuilt ensemble (lets sweeps reuse one set of members)
NormEstimate estimate_operator_norm(const SpectralSymbol& m, double p, double q,
                                    const std::vector<EnsembleMember>& members,
                                    const Grid& grid, NormBackend backend);

} // namespace hermlab
