#pragma once

#include <complex>
#include <vector>

namespace pego::detail {

/// Forward DFT, e^{-2 pi i jk/n} convention (FFTW backend, FFTW_ESTIMATE
/// plans cached per size; deterministic run to run).
std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& in);

/// Linear convolution, length a.size() + b.size() - 1, via zero-padded FFT.
std::vector<std::complex<double>> convolve_linear(const std::vector<std::complex<double>>& a,
                                                  const std::vector<std::complex<double>>& b);

}  // namespace pego::detail
