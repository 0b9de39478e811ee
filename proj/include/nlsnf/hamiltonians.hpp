#pragma once

#include <string_view>

#include "nlsnf/amplitude.hpp"
#include "nlsnf/phase_space.hpp"

namespace nlsnf {

enum class HamiltonianName { H, H1, H2, Hc };

std::string_view to_string(HamiltonianName name);
// Accepts "H", "H1", "H2", "Hc"; throws ValidationError otherwise.
HamiltonianName parse_hamiltonian_name(std::string_view text);

struct HamiltonianValue {
  HamiltonianName name;
  cplx value;
};

// H(phi) = int (phi_1x phi_2x + phi_1^2 phi_2^2) dx.
cplx eval_H(const SpectralField& phi);
// H_1(phi) = -int phi_1 phi_2 dx.
cplx eval_H1(const SpectralField& phi);
// H_2(phi) = i int phi_1 phi_2x dx.
cplx eval_H2(const SpectralField& phi);
// H^c = H - 2|c|^2 H_1.
cplx eval_Hc(const SpectralField& phi, const Amplitude& a);

HamiltonianValue evaluate(HamiltonianName name, const SpectralField& phi, const Amplitude* a);

// Hamiltonian vector fields X_F = i(-d_2 F, d_1 F). Cubic terms are
// projected back onto |k| <= K.
SpectralField field_X_H(const SpectralField& phi);
SpectralField field_X_H1(const SpectralField& phi);
SpectralField field_X_Hc(const SpectralField& phi, const Amplitude& a);

// Gauge flow S^t: (phi_1, phi_2) -> (phi_1 e^{it}, phi_2 e^{-it}).
SpectralField gauge_flow(const SpectralField& phi, double t);

// tau_m: (phi_1, phi_2) -> (phi_1 e^{2 pi i m x}, phi_2 e^{-2 pi i m x}).
// Throws RangeError if a nonzero coefficient would leave [-K, K].
SpectralField tau_twist(const SpectralField& phi, int m);

// Coefficients of H o tau_m = H + twist_H2_coefficient(m) H_2 + twist_H1_coefficient(m) H_1.
inline double twist_H2_coefficient(int m) { return 4.0 * kPi * m; }
inline double twist_H1_coefficient(int m) { return -4.0 * kPi * kPi * m * m; }

// gamma_c(t) = (c e^{2i|c|^2 t}, -conj(c) e^{-2i|c|^2 t}), period pi/|c|^2.
SpectralField gamma_c(double t, const Amplitude& a, int K);

}  // namespace nlsnf
