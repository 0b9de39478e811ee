#include "nlsnf/obstruction.hpp"

#include <cmath>

#include "nlsnf/errors.hpp"

namespace nlsnf {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::NoObstruction: return "NoObstruction";
    case Verdict::Obstructed: return "Obstructed";
    case Verdict::Excluded: return "Excluded";
  }
  return "Excluded";
}

std::vector<ModeClassification> classify(const Amplitude& a, int K) {
  std::vector<ModeClassification> out;
  out.reserve(static_cast<std::size_t>(K + 1));
  for (int k = 0; k <= K; ++k) {
    const Regime regime = classify_mode(k, a.modulus());
    const cplx lambda = (regime == Regime::Excluded || regime == Regime::Jordan)
                            ? cplx{}
                            : analytic_eigenvalue(k, a.modulus());
    out.push_back({k, regime, lambda});
  }
  return out;
}

ObstructionReport obstruction_report(const Amplitude& a, int K) {
  ObstructionReport report{};
  report.c_mod = a.modulus();
  report.K = K;
  report.jordan_at_zero = true;
  // Unstable modes satisfy pi k < |c|; they are counted even beyond K.
  for (int k = 1; kPi * k < a.modulus() + kExcludedWindow; ++k) {
    if (classify_mode(k, a.modulus()) == Regime::FocusFocus) ++report.real_pairs;
  }
  for (int k = 1; k <= K; ++k) {
    if (classify_mode(k, a.modulus()) == Regime::Center) ++report.imaginary_pairs_reported;
  }
  if (a.excluded()) {
    report.verdict = Verdict::Excluded;
  } else {
    report.verdict = report.real_pairs >= 1 ? Verdict::Obstructed : Verdict::NoObstruction;
  }
  return report;
}

LTildeDemo ltilde_structure_demo(const std::vector<double>& B, double jordan_coefficient) {
  const int modes = 1 + static_cast<int>(B.size());
  if (modes > 8) throw PreconditionError("ltilde_structure_demo supports at most 8 modes");
  for (double b : B) {
    if (b == 0.0) throw PreconditionError("rotation coefficients B_n must be nonzero");
  }
  // Coordinates ordered (p_0, q_0, p_1, q_1, ...); mode 0 is the A-mode.
  const Eigen::Index dim = 2 * modes;
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(dim, dim);
  // X_I = p d/dq - q d/dp and dI = p dp + q dq at z* = (1, 0) give d/dq0 (x) dp0.
  L(1, 0) = jordan_coefficient;
  for (int n = 1; n < modes; ++n) {
    const double b = B[static_cast<std::size_t>(n - 1)];
    L(2 * n + 1, 2 * n) = b;
    L(2 * n, 2 * n + 1) = -b;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(L, /*computeEigenvectors=*/false);
  return {L, solver.eigenvalues()};
}

}  // namespace nlsnf
