#pragma once

// Reference computations for the unit tests. Everything here goes through a
// naive point-value representation (direct trigonometric sums on a uniform
// grid, no FFT), so it shares no code path with the library's spectral
// routines. Only suitable for small truncations.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "nlsnf/phase_space.hpp"

namespace oracle {

using nlsnf::cplx;
using nlsnf::SpectralField;
constexpr double pi = 3.14159265358979323846;
constexpr cplx I{0.0, 1.0};

// Values of sum_k a_k e^{2 pi i k x} and its first two derivatives at x.
struct Point {
  cplx v, dv, ddv;
};

inline Point eval(const SpectralField& f, bool second, double x) {
  const int K = f.truncation();
  Point p{};
  for (int k = -K; k <= K; ++k) {
    const cplx a = second ? f.w(k) : f.z(k);
    const cplx e = std::exp(2.0 * pi * I * static_cast<double>(k) * x);
    const double q = 2.0 * pi * k;
    p.v += a * e;
    p.dv += I * q * a * e;
    p.ddv += -q * q * a * e;
  }
  return p;
}

// Grid large enough to integrate products of four trig polynomials of
// degree K exactly.
inline int grid_points(int K) { return 4 * (2 * K + 1) + 3; }

inline cplx integrate(int M, const auto& integrand) {
  cplx sum{};
  for (int j = 0; j < M; ++j) sum += integrand(static_cast<double>(j) / M);
  return sum / static_cast<double>(M);
}

inline cplx H(const SpectralField& f) {
  return integrate(grid_points(f.truncation()), [&](double x) {
    const Point a = eval(f, false, x);
    const Point b = eval(f, true, x);
    return a.dv * b.dv + a.v * a.v * b.v * b.v;
  });
}

inline cplx H1(const SpectralField& f) {
  return integrate(grid_points(f.truncation()), [&](double x) {
    return -eval(f, false, x).v * eval(f, true, x).v;
  });
}

inline cplx H2(const SpectralField& f) {
  return integrate(grid_points(f.truncation()), [&](double x) {
    return I * eval(f, false, x).v * eval(f, true, x).dv;
  });
}

// omega(f, g) = -i int (f_1 g_2 - g_1 f_2) dx.
inline cplx omega(const SpectralField& f, const SpectralField& g) {
  return integrate(grid_points(f.truncation()), [&](double x) {
    return -I * (eval(f, false, x).v * eval(g, true, x).v - eval(g, false, x).v * eval(f, true, x).v);
  });
}

// Projects pointwise values (on M points) back onto modes |k| <= K.
inline std::vector<cplx> project(const std::vector<cplx>& values, int K) {
  const int M = static_cast<int>(values.size());
  std::vector<cplx> out(static_cast<std::size_t>(2 * K + 1));
  for (int k = -K; k <= K; ++k) {
    cplx s{};
    for (int j = 0; j < M; ++j) {
      s += values[static_cast<std::size_t>(j)] *
           std::exp(-2.0 * pi * I * static_cast<double>(k) * static_cast<double>(j) / static_cast<double>(M));
    }
    out[static_cast<std::size_t>(k + K)] = s / static_cast<double>(M);
  }
  return out;
}

// Linearization of X_{H^c} at (c, -conj c), written pointwise:
//   i (v1'' + 2|c|^2 v1 - 2 c^2 v2,  -v2'' + 2 conj(c)^2 v1 - 2|c|^2 v2).
inline SpectralField Lc(const SpectralField& v, cplx c) {
  const int K = v.truncation();
  const int M = grid_points(K);
  const double m2 = std::norm(c);
  std::vector<cplx> r1(static_cast<std::size_t>(M)), r2(static_cast<std::size_t>(M));
  for (int j = 0; j < M; ++j) {
    const double x = static_cast<double>(j) / M;
    const Point a = eval(v, false, x);
    const Point b = eval(v, true, x);
    r1[static_cast<std::size_t>(j)] = I * (a.ddv + 2.0 * m2 * a.v - 2.0 * c * c * b.v);
    r2[static_cast<std::size_t>(j)] = I * (-b.ddv + 2.0 * std::conj(c * c) * a.v - 2.0 * m2 * b.v);
  }
  return SpectralField(K, project(r1, K), project(r2, K));
}

// Random field supported on |k| <= modes; focusing-real when requested.
inline SpectralField random_field(int K, int modes, std::mt19937_64& rng, bool focusing = false) {
  std::normal_distribution<double> n(0.0, 1.0);
  SpectralField f(K);
  for (int k = -modes; k <= modes; ++k) {
    f.z(k) = {n(rng), n(rng)};
    f.w(k) = {n(rng), n(rng)};
  }
  if (focusing) {
    for (int k = -K; k <= K; ++k) f.w(k) = -std::conj(f.z(-k));
  }
  return f;
}

}  // namespace oracle
