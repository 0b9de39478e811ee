#pragma once

// The linearization L_c of X_{H^c} at the constant potential phi_c.
//
// L_c leaves every two-dimensional space V_k = span{xi_k, eta_k} invariant, so
// it is handled entirely through its 2x2 mode blocks; no global matrix is
// ever formed.

#include <array>
#include <string_view>
#include <vector>

#include "nlsnf/amplitude.hpp"
#include "nlsnf/phase_space.hpp"

namespace nlsnf {

enum class Regime { Jordan, FocusFocus, Center, Excluded };

std::string_view to_string(Regime r);

// Regime of mode k for modulus |c|: k = 0 is Jordan, 0 < pi|k| < |c| is
// FocusFocus, pi|k| > |c| is Center, and pi|k| = |c| (within the excluded
// window) is Excluded.
Regime classify_mode(int k, double modulus);

using Matrix2c = std::array<std::array<cplx, 2>, 2>;

struct ModeBlock {
  int k;
  double c_mod;
  double a_k;  // 4 pi^2 k^2 - 2|c|^2
  double b;    // 2|c|^2
  // L_c restricted to V_k in the basis (xi_k, eta_k), for real c = |c|.
  Matrix2c M;
  Regime regime;
};

struct ReducedAmplitude {
  double modulus;
  // Gauge parameter with L_{|c|} o S^t = S^t o L_c.
  double phase;
};

// Throws ValidationError for c = 0 (enforced by Amplitude).
ReducedAmplitude reduce_amplitude(const Amplitude& a);

// L_c v = i(v_1xx + 2|c|^2 v_1 - 2c^2 v_2, -v_2xx + 2 conj(c)^2 v_1 - 2|c|^2 v_2),
// evaluated mode by mode. Valid for complex c.
SpectralField apply_Lc(const SpectralField& v, const Amplitude& a);

ModeBlock mode_block(int k, const Amplitude& a);

struct ModeEigenvalue {
  int k;
  cplx lambda;
  int algebraic_multiplicity;
  int geometric_multiplicity;
};

// lambda_0 = 0 and, for 0 < |k| <= K,
//   lambda_k = 4 pi k sqrt(|c|^2 - pi^2 k^2)      (0 < pi|k| < |c|)
//   lambda_k = 4 pi i k sqrt(pi^2 k^2 - |c|^2)    (pi|k| > |c|).
// Entries are ordered k = -K..K. Throws ExcludedAmplitudeError.
std::vector<ModeEigenvalue> spectrum_analytic(const Amplitude& a, int K);

// Closed-form lambda_k for a single mode.
cplx analytic_eigenvalue(int k, double modulus);

// Eigenvalues of a 2x2 matrix by the quadratic formula.
std::array<cplx, 2> block_eigenvalues(const Matrix2c& M);

struct KappaNorm {
  int k;
  cplx value;
  Regime regime;
};

// Normalisation constant of the eigenvectors F_k, G_k for k >= 1.
//   Center:     kappa^2 = s (a_k + s), s = sqrt(a_k^2 - b^2), kappa > 0.
//   FocusFocus: kappa^2 = r (a_k - i r), r = sqrt(b^2 - a_k^2), kappa in the
//               fourth quadrant.
KappaNorm kappa(int k, const Amplitude& a);

enum class EigenKind { F, G };

struct EigenPair {
  cplx lambda;
  SpectralField vec;
  int k;  // signed: F_{-3} has k = -3
  EigenKind kind;
};

// Explicit eigenvectors F_{+-k}, G_{+-k} of L_{|c|}. In the Center regime
// F_k carries e^{-2 pi i k x} and F_{-k} carries e^{+2 pi i k x}, both with
// eigenvalue +lambda_k, and G_{+-k} = sigma(F_{+-k}). In the FocusFocus
// regime F_k, G_k carry e^{2 pi i k x} with eigenvalues +-lambda_k and
// F_{-k} = sigma(F_k), G_{-k} = sigma(G_k). Throws PreconditionError for
// k = 0 and ExcludedAmplitudeError on the excluded set.
EigenPair eigenvector(int k, EigenKind kind, const Amplitude& a, int K);

struct TruncatedSpectrumReport {
  double c_mod;
  int K;
  // Largest |mu - lambda| / max(1, |lambda|) over a nearest-neighbour
  // matching of the blockwise quadratic-formula eigenvalues against the
  // analytic multiset.
  double max_deviation;
  int count;
  int zero_count;
  int real_count;       // nonzero, |Im| <= tol |lambda|
  int imaginary_count;  // nonzero, |Re| <= tol |lambda|
  int positive_real_count;
  std::vector<cplx> block_spectrum;
};

// Throws ExcludedAmplitudeError.
TruncatedSpectrumReport truncated_operator_check(const Amplitude& a, int K);

}  // namespace nlsnf
