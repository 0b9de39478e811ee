#pragma once

// Darboux normal form of L_c on the focusing real subspace.
//
// W_0 = span{xi'_0, eta'_0} carries the Jordan drift block, and each
// W_k = span{xi'_{+-k}, eta'_{+-k}}, k >= 1, carries a 4x4 block that is
// either of focus-focus type (real eigenvalues) or of center type (purely
// imaginary eigenvalues). Bases are ordered (alpha_k, beta_k, alpha_{-k},
// beta_{-k}), with omega(alpha_j, beta_j) = 1 and all other products zero.

#include <map>
#include <vector>

#include <Eigen/Dense>

#include "nlsnf/amplitude.hpp"
#include "nlsnf/linearized_operator.hpp"
#include "nlsnf/phase_space.hpp"

namespace nlsnf {

struct DarbouxQuad {
  int k;
  Regime regime;
  // k = 0: {alpha_0, beta_0}; k >= 1: {alpha_k, beta_k, alpha_{-k}, beta_{-k}}.
  std::vector<SpectralField> vectors;

  const SpectralField& alpha(int sign = 1) const { return vectors[sign > 0 ? 0 : 2]; }
  const SpectralField& beta(int sign = 1) const { return vectors[sign > 0 ? 1 : 3]; }
};

// Throws ExcludedAmplitudeError, RangeError (k > K) and PreconditionError
// (k < 0).
DarbouxQuad darboux_quad(int k, const Amplitude& a, int K);

// Matrix of L_c restricted to W_k in the Darboux basis; column j holds the
// coordinates of L_c applied to the j-th basis vector.
//   k = 0:      4|c|^2 [[0,0],[1,0]]
//   FocusFocus: lambda_k diag(1,-1,1,-1)
//   Center:     |lambda_k| [[0,1,0,0],[-1,0,0,0],[0,0,0,1],[0,0,-1,0]]
Eigen::MatrixXd normal_block(int k, const Amplitude& a);

// Largest entrywise deviation between normal_block(k) and the matrix of
// L_c on the Darboux basis, obtained by applying L_c to every basis vector
// and reading coordinates off through omega. Also covers the part of each
// image lying outside W_k. Measured relative to max(1, block scale), the
// scale being 4|c|^2 for k = 0 and |lambda_k| otherwise.
double verify_normal_block(int k, const Amplitude& a, int K);

// Real Darboux coordinates, p_k and q_k for k = -K..K.
class BirkhoffPoint {
 public:
  explicit BirkhoffPoint(int K);

  int truncation() const { return K_; }
  double& p(int k) { return p_[static_cast<std::size_t>(k + K_)]; }
  double& q(int k) { return q_[static_cast<std::size_t>(k + K_)]; }
  double p(int k) const { return p_[static_cast<std::size_t>(k + K_)]; }
  double q(int k) const { return q_[static_cast<std::size_t>(k + K_)]; }

  BirkhoffPoint& operator+=(const BirkhoffPoint& other);
  BirkhoffPoint& operator*=(double s);

 private:
  int K_;
  std::vector<double> p_;
  std::vector<double> q_;
};

// All Darboux bases for |c| at truncation K, built once and reused.
class DarbouxBasis {
 public:
  DarbouxBasis(const Amplitude& a, int K);

  int truncation() const { return K_; }
  const Amplitude& amplitude() const { return amplitude_; }
  const DarbouxQuad& quad(int k) const { return quads_[static_cast<std::size_t>(k)]; }

  // alpha_k / beta_k for signed k.
  const SpectralField& alpha(int k) const;
  const SpectralField& beta(int k) const;

  // p_k = omega(phi, beta_k), q_k = omega(alpha_k, phi). Throws RealityError
  // unless phi is focusing-real.
  BirkhoffPoint expand(const SpectralField& phi) const;
  // sum_k p_k alpha_k + q_k beta_k.
  SpectralField reconstruct(const BirkhoffPoint& pq) const;

  // Basis vectors in the order alpha_0, beta_0, then per k >= 1 the quad.
  std::vector<const SpectralField*> ordered() const;

 private:
  Amplitude amplitude_;
  int K_;
  std::vector<DarbouxQuad> quads_;
};

BirkhoffPoint expand(const SpectralField& phi, const Amplitude& a);

// Hessian d^2 H^c at phi_c as a quadratic form in Darboux coordinates:
//   4|c|^2 p_0^2
//   - sum_{0<pi k<|c|} 2 lambda_k (p_k q_k + p_{-k} q_{-k})
//   - sum_{pi|k|>|c|} |lambda_k| (p_k^2 + q_k^2).
// The focus-focus term uses the symmetric product dp dq = dp(x)dq + dq(x)dp,
// which is what the Darboux block lambda_k diag(1,-1,1,-1) induces through
// d^2 H^c(u, u) = omega(u, L_c u).
double hessian_normal(const BirkhoffPoint& pq, const Amplitude& a);

// d^2 H^c(u, v) at phi_c, computed as omega(u, L_c v).
double hessian_direct(const SpectralField& u, const SpectralField& v, const Amplitude& a);

struct FocusIntegrals {
  std::map<int, double> I;
};

// I_0 = p_0^2/2; FocusFocus: I_k = p_k q_k + p_{-k} q_{-k},
// I_{-k} = p_k q_{-k} - p_{-k} q_k; Center: I_{+-k} = (p_{+-k}^2 + q_{+-k}^2)/2.
FocusIntegrals focus_integrals(const BirkhoffPoint& pq, const Amplitude& a);

// exp(t * normal_block(k)) in closed form.
Eigen::MatrixXd normal_block_exponential(int k, const Amplitude& a, double t);

// Flow of the linear system u' = L_c u, written in Darboux coordinates with
// the closed-form block exponentials.
BirkhoffPoint linear_flow(const BirkhoffPoint& pq, const Amplitude& a, double t);

}  // namespace nlsnf
