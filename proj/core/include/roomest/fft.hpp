#pragma once

#include <complex>
#include <vector>

namespace roomest {

/// Real-to-complex FFT; returns n/2+1 positive-frequency bins.
std::vector<std::complex<double>> rfft(const std::vector<double>& x, int n);

/// Inverse of rfft, normalized so irfft(rfft(x, n), n) == x.
std::vector<double> irfft(const std::vector<std::complex<double>>& spec, int n);

/// Linear convolution via zero-padded FFT; output length |a| + |b| - 1.
std::vector<double> fft_convolve(const std::vector<double>& a, const std::vector<double>& b);

/// Direct O(N*M) convolution; reference implementation for tests and
/// short kernels.
std::vector<double> direct_convolve(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace roomest
