#pragma once

#include <complex>
#include <vector>

#include "hermlab/grid.hpp"

namespace hermlab {

// Thin FFTW wrappers.  Sign -1 is the forward DFT kernel e^{-2 pi i jk/M}.
std::vector<cplx> dft(const std::vector<cplx>& in, int sign);
std::vector<cplx> dft_2d(const std::vector<cplx>& in, int rows, int cols, int sign);

// Continuum Fourier transform on a symmetric uniform grid,
//   Ff(xi) = (2 pi)^{-d/2} integral f(x) e^{-i x.xi} dx   (sign = -1),
// returned on the conjugate grid with spacing 2 pi / (n h).  sign = +1
// gives the inverse transform.  Trapezoid end weights are absorbed by the
// fast boundary decay of the intended inputs (rectangle rule).
GridField fourier_transform(const GridField& f, int sign);

// The conjugate grid used by fourier_transform.
Grid conjugate_grid(const Grid& g);

} // namespace hermlab
