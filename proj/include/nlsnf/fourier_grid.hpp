#pragma once

#include <vector>

#include "nlsnf/phase_space.hpp"

namespace nlsnf {

// Samples of (phi_1, phi_2) at x_j = j / N, j = 0..N-1.
struct GridField {
  int N = 0;
  std::vector<cplx> phi1;
  std::vector<cplx> phi2;
};

// Smallest grid accepted by to_grid / from_grid for truncation K.
inline int min_grid_size(int K) { return 2 * (2 * K + 1); }

// Grid used internally for cubic and quartic products; products of four
// truncated fields are resolved without aliasing into [-K, K].
inline int product_grid_size(int K) { return 4 * (2 * K + 1); }

// Throws AliasingError when N < 2(2K+1).
GridField to_grid(const SpectralField& f, int N);
// Discrete Fourier analysis of the samples, keeping modes |k| <= K.
SpectralField from_grid(const GridField& g, int K);

namespace fft {

// In-place unnormalised transforms of length data.size():
//   synthesize: out_j = sum_m in_m e^{+2 pi i m j / N}
//   analyze:    out_m = sum_j in_j e^{-2 pi i m j / N}
void synthesize(std::vector<cplx>& data);
void analyze(std::vector<cplx>& data);

// Place coefficients c_k, |k| <= K, on an N-grid and synthesize.
std::vector<cplx> coefficients_to_samples(std::span<const cplx> coeffs, int K, int N);
// Analyze samples, divide by N, extract |k| <= K.
std::vector<cplx> samples_to_coefficients(std::vector<cplx> samples, int K);

}  // namespace fft

}  // namespace nlsnf
