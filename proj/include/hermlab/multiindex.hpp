#pragma once

#include <vector>
#include <cstdint>
#include <cmath>
#include <numeric>

namespace hermlab {

// A multi-index is a vector of non-negative integers, one entry per axis.
using MultiIndex = std::vector<int>;

inline int mi_order(const MultiIndex& a) {
    return std::accumulate(a.begin(), a.end(), 0);
}

inline bool mi_valid(const MultiIndex& a, int d) {
    if (static_cast<int>(a.size()) != d) return false;
    for (int v : a) if (v < 0) return false;
    return true;
}

// log(alpha!) summed over the entries
inline double mi_log_factorial(const MultiIndex& a) {
    double s = 0.0;
    for (int v : a) s += std::lgamma(static_cast<double>(v) + 1.0);
    return s;
}

// All multi-indices of dimension d with |alpha| <= N, graded
// lexicographic order (by |alpha|, then lexicographic).  The order is
// fixed so that seeded random draws and report rows are reproducible.
std::vector<MultiIndex> enumerate_multiindices(int d, int N);

} // namespace hermlab
