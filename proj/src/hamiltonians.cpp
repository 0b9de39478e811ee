#include "nlsnf/hamiltonians.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "nlsnf/errors.hpp"
#include "nlsnf/fourier_grid.hpp"

namespace nlsnf {

namespace {

constexpr cplx kI{0.0, 1.0};

double wave(int k) { return 2.0 * kPi * k; }

struct ProductSamples {
  std::vector<cplx> phi1;
  std::vector<cplx> phi2;
};

ProductSamples product_samples(const SpectralField& phi) {
  const int K = phi.truncation();
  const int N = product_grid_size(K);
  return {fft::coefficients_to_samples(phi.z_coeffs(), K, N),
          fft::coefficients_to_samples(phi.w_coeffs(), K, N)};
}

}  // namespace

std::string_view to_string(HamiltonianName name) {
  switch (name) {
    case HamiltonianName::H: return "H";
    case HamiltonianName::H1: return "H1";
    case HamiltonianName::H2: return "H2";
    case HamiltonianName::Hc: return "Hc";
  }
  return "H";
}

HamiltonianName parse_hamiltonian_name(std::string_view text) {
  if (text == "H") return HamiltonianName::H;
  if (text == "H1") return HamiltonianName::H1;
  if (text == "H2") return HamiltonianName::H2;
  if (text == "Hc") return HamiltonianName::Hc;
  throw ValidationError("unknown Hamiltonian '" + std::string(text) + "'");
}

cplx eval_H(const SpectralField& phi) {
  const int K = phi.truncation();
  cplx quadratic{};
  for (int k = -K; k <= K; ++k) {
    quadratic += wave(k) * wave(k) * phi.z(k) * phi.w(-k);
  }
  const auto samples = product_samples(phi);
  cplx quartic{};
  for (std::size_t j = 0; j < samples.phi1.size(); ++j) {
    const cplx p = samples.phi1[j] * samples.phi2[j];
    quartic += p * p;
  }
  quartic /= static_cast<double>(samples.phi1.size());
  return quadratic + quartic;
}

cplx eval_H1(const SpectralField& phi) {
  const int K = phi.truncation();
  cplx sum{};
  for (int k = -K; k <= K; ++k) sum += phi.z(k) * phi.w(-k);
  return -sum;
}

cplx eval_H2(const SpectralField& phi) {
  const int K = phi.truncation();
  cplx sum{};
  for (int k = -K; k <= K; ++k) sum += phi.z(k) * (kI * wave(-k)) * phi.w(-k);
  return kI * sum;
}

cplx eval_Hc(const SpectralField& phi, const Amplitude& a) {
  return eval_H(phi) - 2.0 * a.modulus_squared() * eval_H1(phi);
}

HamiltonianValue evaluate(HamiltonianName name, const SpectralField& phi, const Amplitude* a) {
  switch (name) {
    case HamiltonianName::H: return {name, eval_H(phi)};
    case HamiltonianName::H1: return {name, eval_H1(phi)};
    case HamiltonianName::H2: return {name, eval_H2(phi)};
    case HamiltonianName::Hc:
      if (a == nullptr) throw PreconditionError("Hc requires an amplitude c");
      return {name, eval_Hc(phi, *a)};
  }
  throw ValidationError("unknown Hamiltonian");
}

SpectralField field_X_H(const SpectralField& phi) {
  const int K = phi.truncation();
  auto samples = product_samples(phi);
  // Reuse the sample buffers for phi_1^2 phi_2 and phi_1 phi_2^2.
  for (std::size_t j = 0; j < samples.phi1.size(); ++j) {
    const cplx p = samples.phi1[j] * samples.phi2[j];
    samples.phi1[j] *= p;
    samples.phi2[j] *= p;
  }
  const auto cubic1 = fft::samples_to_coefficients(std::move(samples.phi1), K);
  const auto cubic2 = fft::samples_to_coefficients(std::move(samples.phi2), K);

  SpectralField out(K);
  for (int k = -K; k <= K; ++k) {
    const double k2 = wave(k) * wave(k);
    const auto idx = static_cast<std::size_t>(k + K);
    out.z(k) = kI * (-k2 * phi.z(k) - 2.0 * cubic1[idx]);
    out.w(k) = kI * (k2 * phi.w(k) + 2.0 * cubic2[idx]);
  }
  return out;
}

SpectralField field_X_H1(const SpectralField& phi) {
  const int K = phi.truncation();
  SpectralField out(K);
  for (int k = -K; k <= K; ++k) {
    out.z(k) = kI * phi.z(k);
    out.w(k) = -kI * phi.w(k);
  }
  return out;
}

SpectralField field_X_Hc(const SpectralField& phi, const Amplitude& a) {
  return field_X_H(phi) - (2.0 * a.modulus_squared()) * field_X_H1(phi);
}

SpectralField gauge_flow(const SpectralField& phi, double t) {
  const cplx rot = std::polar(1.0, t);
  const cplx inv = std::conj(rot);
  SpectralField out = phi;
  for (auto& v : out.z_coeffs()) v *= rot;
  for (auto& v : out.w_coeffs()) v *= inv;
  return out;
}

SpectralField tau_twist(const SpectralField& phi, int m) {
  const int K = phi.truncation();
  SpectralField out(K);
  for (int k = -K; k <= K; ++k) {
    const cplx z = phi.z(k);
    const cplx w = phi.w(k);
    if (z != cplx{}) {
      if (!out.in_range(k + m)) {
        throw RangeError("tau_" + std::to_string(m) + " moves mode " + std::to_string(k) +
                         " of phi_1 outside the truncation window");
      }
      out.z(k + m) = z;
    }
    if (w != cplx{}) {
      if (!out.in_range(k - m)) {
        throw RangeError("tau_" + std::to_string(m) + " moves mode " + std::to_string(k) +
                         " of phi_2 outside the truncation window");
      }
      out.w(k - m) = w;
    }
  }
  return out;
}

SpectralField gamma_c(double t, const Amplitude& a, int K) {
  return gauge_flow(a.potential(K), 2.0 * a.modulus_squared() * t);
}

}  // namespace nlsnf
