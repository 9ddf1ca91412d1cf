#pragma once

#include <map>
#include <complex>

#include "hermlab/multiindex.hpp"
#include "hermlab/grid.hpp"

namespace hermlab {

// Hermite expansion coefficients c_alpha = <f, Phi_alpha> for |alpha| <= N.
// Stored sparsely in a map keyed by multi-index; map order makes all
// iteration deterministic.
struct HermiteCoeffs {
    int d = 1;
    int N = 0;
    std::map<MultiIndex, cplx> entries;

    HermiteCoeffs() = default;
    HermiteCoeffs(int d_, int N_) : d(d_), N(N_) {}

    cplx get(const MultiIndex& a) const {
        auto it = entries.find(a);
        return it == entries.end() ? cplx{0.0, 0.0} : it->second;
    }
    void set(const MultiIndex& a, cplx v) {
        require(mi_valid(a, d) && mi_order(a) <= N, "coefficient index out of range");
        entries[a] = v;
    }
};

// Unit coefficient vector supported on a single multi-index.
HermiteCoeffs delta_coeffs(int d, int N, const MultiIndex& a);

double l2_norm(const HermiteCoeffs& c);
// || a - b ||_2 / || b ||_2
double relative_l2_error(const HermiteCoeffs& a, const HermiteCoeffs& b);

} // namespace hermlab
