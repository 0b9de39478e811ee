#include "nlsnf/linearized_operator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nlsnf/errors.hpp"

namespace nlsnf {

namespace {

constexpr cplx kI{0.0, 1.0};

double wave2(int k) { return 4.0 * kPi * kPi * static_cast<double>(k) * k; }

}  // namespace

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::Jordan: return "Jordan";
    case Regime::FocusFocus: return "FocusFocus";
    case Regime::Center: return "Center";
    case Regime::Excluded: return "Excluded";
  }
  return "Excluded";
}

Regime classify_mode(int k, double modulus) {
  if (k == 0) return Regime::Jordan;
  const double pk = kPi * std::abs(k);
  if (std::abs(pk - modulus) < kExcludedWindow) return Regime::Excluded;
  return pk < modulus ? Regime::FocusFocus : Regime::Center;
}

ReducedAmplitude reduce_amplitude(const Amplitude& a) {
  return {a.modulus(), -std::arg(a.value())};
}

SpectralField apply_Lc(const SpectralField& v, const Amplitude& a) {
  const int K = v.truncation();
  const double m2 = a.modulus_squared();
  const cplx c2 = a.value() * a.value();
  const cplx cbar2 = std::conj(c2);
  SpectralField out(K);
  for (int k = -K; k <= K; ++k) {
    const double q = wave2(k);
    const cplx z = v.z(k);
    const cplx w = v.w(k);
    out.z(k) = kI * ((2.0 * m2 - q) * z - 2.0 * c2 * w);
    out.w(k) = kI * (2.0 * cbar2 * z + (q - 2.0 * m2) * w);
  }
  return out;
}

ModeBlock mode_block(int k, const Amplitude& a) {
  const double m2 = a.modulus_squared();
  ModeBlock block;
  block.k = k;
  block.c_mod = a.modulus();
  block.a_k = wave2(k) - 2.0 * m2;
  block.b = 2.0 * m2;
  block.M = {{{kI * (2.0 * m2 - wave2(k)), kI * (-2.0 * m2)},
              {kI * (2.0 * m2), kI * (wave2(k) - 2.0 * m2)}}};
  block.regime = classify_mode(k, a.modulus());
  return block;
}

cplx analytic_eigenvalue(int k, double modulus) {
  if (k == 0) return {};
  const double pk2 = kPi * kPi * static_cast<double>(k) * k;
  const double m2 = modulus * modulus;
  const double scale = 4.0 * kPi * k;
  if (pk2 < m2) return {scale * std::sqrt(m2 - pk2), 0.0};
  return {0.0, scale * std::sqrt(pk2 - m2)};
}

std::vector<ModeEigenvalue> spectrum_analytic(const Amplitude& a, int K) {
  a.require_admissible();
  std::vector<ModeEigenvalue> out;
  out.reserve(static_cast<std::size_t>(2 * K + 1));
  for (int k = -K; k <= K; ++k) {
    // lambda_0 = 0 is a Jordan eigenvalue (geometric multiplicity one).
    out.push_back({k, analytic_eigenvalue(k, a.modulus()), 2, k == 0 ? 1 : 2});
  }
  return out;
}

std::array<cplx, 2> block_eigenvalues(const Matrix2c& M) {
  const cplx tr = M[0][0] + M[1][1];
  const cplx det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
  const cplx disc = std::sqrt(tr * tr - 4.0 * det);
  return {(tr + disc) / 2.0, (tr - disc) / 2.0};
}

KappaNorm kappa(int k, const Amplitude& a) {
  a.require_admissible();
  if (k < 1) throw PreconditionError("kappa is defined for k >= 1");
  const ModeBlock block = mode_block(k, a);
  const double ak = block.a_k;
  const double b = block.b;
  if (block.regime == Regime::Center) {
    const double s = std::sqrt(ak * ak - b * b);
    return {k, cplx{std::sqrt(s * (ak + s)), 0.0}, Regime::Center};
  }
  const double r = std::sqrt(b * b - ak * ak);
  // Im(kappa^2) = -r^2 < 0, so the principal root lies in the fourth quadrant.
  const cplx root = std::sqrt(cplx{r * ak, -r * r});
  return {k, root, Regime::FocusFocus};
}

EigenPair eigenvector(int k, EigenKind kind, const Amplitude& a, int K) {
  if (k == 0) throw PreconditionError("mode 0 is a Jordan block without an eigenbasis");
  a.require_admissible();
  const int m = std::abs(k);
  if (m > K) throw RangeError("mode " + std::to_string(k) + " outside truncation");
  const ModeBlock block = mode_block(m, a);
  const double ak = block.a_k;
  const double b = block.b;
  const cplx kap = kappa(m, a).value;
  const cplx lambda = analytic_eigenvalue(m, a.modulus());

  SpectralField f(K);
  if (block.regime == Regime::Center) {
    const double s = std::sqrt(ak * ak - b * b);
    // F_k lives on mode -k, F_{-k} on mode +k.
    const int mode = k > 0 ? -m : m;
    f.z(mode) = b / kap;
    f.w(mode) = -(ak + s) / kap;
    if (kind == EigenKind::G) f = sigma(f);
    return {kind == EigenKind::F ? lambda : -lambda, std::move(f), k, kind};
  }

  const double r = std::sqrt(b * b - ak * ak);
  if (kind == EigenKind::F) {
    f.z(m) = -b / kap;
    f.w(m) = cplx{ak, -r} / kap;
  } else {
    const cplx kbar = std::conj(kap);
    f.z(m) = b / kbar;
    f.w(m) = -cplx{ak, r} / kbar;
  }
  if (k < 0) f = sigma(f);
  return {kind == EigenKind::F ? lambda : -lambda, std::move(f), k, kind};
}

TruncatedSpectrumReport truncated_operator_check(const Amplitude& a, int K) {
  a.require_admissible();
  TruncatedSpectrumReport report{};
  report.c_mod = a.modulus();
  report.K = K;

  std::vector<cplx> computed;
  computed.reserve(static_cast<std::size_t>(2 * (2 * K + 1)));
  const double tol = 1e-12;
  for (int k = -K; k <= K; ++k) {
    const auto mus = block_eigenvalues(mode_block(k, a).M);
    for (const cplx mu : mus) {
      computed.push_back(mu);
      if (k >= 1 && std::abs(mu.imag()) <= tol * std::abs(mu) && mu.real() > 0.0) {
        ++report.positive_real_count;
      }
    }
  }

  std::vector<cplx> expected;
  expected.reserve(computed.size());
  for (const auto& ev : spectrum_analytic(a, K)) {
    if (ev.k == 0) {
      expected.push_back({});
      expected.push_back({});
    } else {
      // Block k carries {lambda_k, -lambda_k}; lambda_{-k} = -lambda_k.
      expected.push_back(ev.lambda);
      expected.push_back(ev.lambda);
    }
  }

  std::vector<bool> used(computed.size(), false);
  for (const cplx lam : expected) {
    std::size_t best = computed.size();
    double best_dist = 0.0;
    for (std::size_t i = 0; i < computed.size(); ++i) {
      if (used[i]) continue;
      const double d = std::abs(computed[i] - lam);
      if (best == computed.size() || d < best_dist) {
        best = i;
        best_dist = d;
      }
    }
    used[best] = true;
    report.max_deviation =
        std::max(report.max_deviation, best_dist / std::max(1.0, std::abs(lam)));
  }

  for (const cplx mu : computed) {
    const double mag = std::abs(mu);
    if (mag <= tol) {
      ++report.zero_count;
    } else if (std::abs(mu.imag()) <= tol * mag) {
      ++report.real_count;
    } else if (std::abs(mu.real()) <= tol * mag) {
      ++report.imaginary_count;
    }
  }
  report.count = static_cast<int>(computed.size());
  report.block_spectrum = std::move(computed);
  return report;
}

}  // namespace nlsnf
