#pragma once

#include <complex>
#include <vector>

namespace qfe {

using cdouble = std::complex<double>;

/// In-place 1-D DFT of any length n >= 1. sign = -1 applies the forward
/// kernel exp(-2*pi*i*t*k/n); sign = +1 the unnormalized inverse. Powers
/// of two run the iterative radix-2 path, everything else goes through
/// Bluestein's chirp-z convolution, so no normalization is ever applied here.
void fft(std::vector<cdouble>& x, int sign);

/// Row-column 2-D transform of a row-major rows*cols grid, same sign and
/// normalization conventions as fft().
void fft_2d(std::vector<cdouble>& grid, int rows, int cols, int sign);

}  // namespace qfe
