#pragma once

#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "nlsnf/amplitude.hpp"
#include "nlsnf/linearized_operator.hpp"

namespace nlsnf {

enum class Verdict { NoObstruction, Obstructed, Excluded };

std::string_view to_string(Verdict v);

struct ModeClassification {
  int k;
  Regime regime;
  cplx lambda;  // 0 for Jordan and Excluded modes
};

// Regimes and eigenvalues for k = 0..K.
std::vector<ModeClassification> classify(const Amplitude& a, int K);

// Spectral dichotomy behind the non-existence of gauge-invariant local
// Birkhoff coordinates near phi_c. Any such coordinates would conjugate L_c to
// an operator whose spectrum is purely imaginary; a nonzero real eigenvalue
// of L_c rules that out.
struct ObstructionReport {
  double c_mod;
  int K;
  int real_pairs;                // #{k >= 1 : pi k < |c|, mode not excluded}
  int imaginary_pairs_reported;  // #{1 <= k <= K : pi k > |c|, mode not excluded}
  bool jordan_at_zero = true;
  Verdict verdict;
};

ObstructionReport obstruction_report(const Amplitude& a, int K);

struct LTildeDemo {
  Eigen::MatrixXd matrix;
  Eigen::VectorXcd spectrum;
};

// Builds the model operator
//   A (X_I at z*) (x) dI  +  sum_n B_n (d/dq_n (x) dp_n - d/dp_n (x) dq_n)
// on R^{2(1 + |B|)}, with one distinguished mode carrying the rank-one
// nilpotent part (z* = (1, 0) on that mode) and rotation generators on the
// remaining modes, and returns its spectrum {+-i B_n} u {0, 0}.
// Requires 1 + |B| <= 8 and every B_n != 0.
LTildeDemo ltilde_structure_demo(const std::vector<double>& B, double jordan_coefficient = 1.0);

}  // namespace nlsnf
