#include "nlsnf/normal_form.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nlsnf/errors.hpp"

namespace nlsnf {

namespace {

constexpr cplx kI{0.0, 1.0};

// omega(f, g) when one argument is supported on modes +-m only.
cplx omega_on_modes(const SpectralField& f, const SpectralField& g, int m) {
  cplx sum = f.z(m) * g.w(-m) - g.z(m) * f.w(-m);
  if (m != 0) sum += f.z(-m) * g.w(m) - g.z(-m) * f.w(m);
  return -kI * sum;
}

// out += s * v on modes +-m.
void add_on_modes(SpectralField& out, double s, const SpectralField& v, int m) {
  out.z(m) += s * v.z(m);
  out.w(m) += s * v.w(m);
  if (m != 0) {
    out.z(-m) += s * v.z(-m);
    out.w(-m) += s * v.w(-m);
  }
}

SpectralField real_part(const SpectralField& f) { return 0.5 * (f + sigma(f)); }
SpectralField imag_part(const SpectralField& f) { return cplx{0.0, -0.5} * (f - sigma(f)); }

Amplitude reduced(const Amplitude& a) { return Amplitude::from_modulus(a.modulus()); }

}  // namespace

DarbouxQuad darboux_quad(int k, const Amplitude& a, int K) {
  a.require_admissible();
  if (k < 0) throw PreconditionError("darboux_quad expects k >= 0");
  if (k > K) throw RangeError("mode " + std::to_string(k) + " outside truncation");
  const Amplitude ar = reduced(a);

  if (k == 0) {
    return {0, Regime::Jordan,
            {basis_vector({BasisFamily::XiPrime, 0}, K), basis_vector({BasisFamily::EtaPrime, 0}, K)}};
  }

  const Regime regime = classify_mode(k, a.modulus());
  if (regime == Regime::Center) {
    // F_{+-k} = alpha_{+-k} + i beta_{+-k}.
    const SpectralField Fp = eigenvector(k, EigenKind::F, ar, K).vec;
    const SpectralField Fm = eigenvector(-k, EigenKind::F, ar, K).vec;
    return {k, regime, {real_part(Fp), imag_part(Fp), real_part(Fm), imag_part(Fm)}};
  }
  // F_k = alpha_k + i alpha_{-k}, G_k = beta_k + i beta_{-k}.
  const SpectralField F = eigenvector(k, EigenKind::F, ar, K).vec;
  const SpectralField G = eigenvector(k, EigenKind::G, ar, K).vec;
  return {k, regime, {real_part(F), real_part(G), imag_part(F), imag_part(G)}};
}

Eigen::MatrixXd normal_block(int k, const Amplitude& a) {
  a.require_admissible();
  if (k < 0) throw PreconditionError("normal_block expects k >= 0");
  if (k == 0) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 2);
    m(1, 0) = 4.0 * a.modulus_squared();
    return m;
  }
  const cplx lambda = analytic_eigenvalue(k, a.modulus());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4, 4);
  if (classify_mode(k, a.modulus()) == Regime::FocusFocus) {
    m.diagonal() << lambda.real(), -lambda.real(), lambda.real(), -lambda.real();
  } else {
    const double s = std::abs(lambda);
    m(0, 1) = s;
    m(1, 0) = -s;
    m(2, 3) = s;
    m(3, 2) = -s;
  }
  return m;
}

double verify_normal_block(int k, const Amplitude& a, int K) {
  const DarbouxQuad quad = darboux_quad(k, a, K);
  const Amplitude ar = reduced(a);
  const Eigen::MatrixXd expected = normal_block(k, ar);
  const auto n = static_cast<Eigen::Index>(quad.vectors.size());

  double deviation = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    const SpectralField image = apply_Lc(quad.vectors[static_cast<std::size_t>(j)], ar);
    SpectralField rebuilt(K);
    for (Eigen::Index pair = 0; pair < n / 2; ++pair) {
      const auto& alpha = quad.vectors[static_cast<std::size_t>(2 * pair)];
      const auto& beta = quad.vectors[static_cast<std::size_t>(2 * pair + 1)];
      const cplx p = omega_on_modes(image, beta, k);
      const cplx q = omega_on_modes(alpha, image, k);
      deviation = std::max({deviation, std::abs(p - expected(2 * pair, j)),
                            std::abs(q - expected(2 * pair + 1, j))});
      add_on_modes(rebuilt, p.real(), alpha, k);
      add_on_modes(rebuilt, q.real(), beta, k);
    }
    // Invariance of W_k: the image has no component outside the block.
    deviation = std::max(deviation, max_abs_diff(image, rebuilt));
  }
  // Entries grow like 4 pi^2 k^2, so report the deviation in units of the
  // block scale (an ulp of 6.5e5 already exceeds 1e-10).
  const double scale = k == 0 ? 4.0 * ar.modulus_squared() : std::abs(analytic_eigenvalue(k, ar.modulus()));
  return deviation / std::max(1.0, scale);
}

BirkhoffPoint::BirkhoffPoint(int K)
    : K_(K), p_(static_cast<std::size_t>(2 * K + 1), 0.0), q_(static_cast<std::size_t>(2 * K + 1), 0.0) {}

BirkhoffPoint& BirkhoffPoint::operator+=(const BirkhoffPoint& other) {
  if (other.K_ != K_) throw DimensionError("Birkhoff points with different truncations");
  for (std::size_t i = 0; i < p_.size(); ++i) {
    p_[i] += other.p_[i];
    q_[i] += other.q_[i];
  }
  return *this;
}

BirkhoffPoint& BirkhoffPoint::operator*=(double s) {
  for (auto& v : p_) v *= s;
  for (auto& v : q_) v *= s;
  return *this;
}

DarbouxBasis::DarbouxBasis(const Amplitude& a, int K) : amplitude_(reduced(a)), K_(K) {
  a.require_admissible();
  quads_.reserve(static_cast<std::size_t>(K + 1));
  for (int k = 0; k <= K; ++k) quads_.push_back(darboux_quad(k, amplitude_, K));
}

const SpectralField& DarbouxBasis::alpha(int k) const {
  if (k == 0) return quads_[0].vectors[0];
  return quads_[static_cast<std::size_t>(std::abs(k))].alpha(k);
}

const SpectralField& DarbouxBasis::beta(int k) const {
  if (k == 0) return quads_[0].vectors[1];
  return quads_[static_cast<std::size_t>(std::abs(k))].beta(k);
}

BirkhoffPoint DarbouxBasis::expand(const SpectralField& phi) const {
  if (phi.truncation() != K_) throw DimensionError("field and basis truncations differ");
  require_focusing_real(phi, "expand input", 1e-10 * std::max(1.0, l2_norm(phi)));
  BirkhoffPoint pq(K_);
  for (int k = -K_; k <= K_; ++k) {
    const int m = std::abs(k);
    pq.p(k) = omega_on_modes(phi, beta(k), m).real();
    pq.q(k) = omega_on_modes(alpha(k), phi, m).real();
  }
  return pq;
}

SpectralField DarbouxBasis::reconstruct(const BirkhoffPoint& pq) const {
  if (pq.truncation() != K_) throw DimensionError("point and basis truncations differ");
  SpectralField out(K_);
  for (int k = -K_; k <= K_; ++k) {
    add_on_modes(out, pq.p(k), alpha(k), std::abs(k));
    add_on_modes(out, pq.q(k), beta(k), std::abs(k));
  }
  return out;
}

std::vector<const SpectralField*> DarbouxBasis::ordered() const {
  std::vector<const SpectralField*> out;
  for (const auto& quad : quads_) {
    for (const auto& v : quad.vectors) out.push_back(&v);
  }
  return out;
}

BirkhoffPoint expand(const SpectralField& phi, const Amplitude& a) {
  return DarbouxBasis(a, phi.truncation()).expand(phi);
}

double hessian_normal(const BirkhoffPoint& pq, const Amplitude& a) {
  a.require_admissible();
  const int K = pq.truncation();
  double value = 4.0 * a.modulus_squared() * pq.p(0) * pq.p(0);
  for (int k = 1; k <= K; ++k) {
    const double lambda = std::abs(analytic_eigenvalue(k, a.modulus()));
    if (classify_mode(k, a.modulus()) == Regime::FocusFocus) {
      value -= 2.0 * lambda * (pq.p(k) * pq.q(k) + pq.p(-k) * pq.q(-k));
    } else {
      value -= lambda * (pq.p(k) * pq.p(k) + pq.q(k) * pq.q(k) + pq.p(-k) * pq.p(-k) +
                         pq.q(-k) * pq.q(-k));
    }
  }
  return value;
}

double hessian_direct(const SpectralField& u, const SpectralField& v, const Amplitude& a) {
  require_focusing_real(u, "hessian_direct u", 1e-10 * std::max(1.0, l2_norm(u)));
  require_focusing_real(v, "hessian_direct v", 1e-10 * std::max(1.0, l2_norm(v)));
  return omega(u, apply_Lc(v, a)).real();
}

FocusIntegrals focus_integrals(const BirkhoffPoint& pq, const Amplitude& a) {
  a.require_admissible();
  FocusIntegrals out;
  out.I[0] = 0.5 * pq.p(0) * pq.p(0);
  for (int k = 1; k <= pq.truncation(); ++k) {
    if (classify_mode(k, a.modulus()) == Regime::FocusFocus) {
      out.I[k] = pq.p(k) * pq.q(k) + pq.p(-k) * pq.q(-k);
      out.I[-k] = pq.p(k) * pq.q(-k) - pq.p(-k) * pq.q(k);
    } else {
      out.I[k] = 0.5 * (pq.p(k) * pq.p(k) + pq.q(k) * pq.q(k));
      out.I[-k] = 0.5 * (pq.p(-k) * pq.p(-k) + pq.q(-k) * pq.q(-k));
    }
  }
  return out;
}

Eigen::MatrixXd normal_block_exponential(int k, const Amplitude& a, double t) {
  a.require_admissible();
  if (k == 0) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(2, 2);
    m(1, 0) = 4.0 * a.modulus_squared() * t;
    return m;
  }
  const double lambda = std::abs(analytic_eigenvalue(k, a.modulus()));
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4, 4);
  if (classify_mode(k, a.modulus()) == Regime::FocusFocus) {
    const double grow = std::exp(lambda * t);
    const double decay = std::exp(-lambda * t);
    m.diagonal() << grow, decay, grow, decay;
  } else {
    const double c = std::cos(lambda * t);
    const double s = std::sin(lambda * t);
    m.block<2, 2>(0, 0) << c, s, -s, c;
    m.block<2, 2>(2, 2) << c, s, -s, c;
  }
  return m;
}

BirkhoffPoint linear_flow(const BirkhoffPoint& pq, const Amplitude& a, double t) {
  const int K = pq.truncation();
  BirkhoffPoint out(K);
  const Eigen::MatrixXd e0 = normal_block_exponential(0, a, t);
  const Eigen::Vector2d x0 = e0 * Eigen::Vector2d(pq.p(0), pq.q(0));
  out.p(0) = x0(0);
  out.q(0) = x0(1);
  for (int k = 1; k <= K; ++k) {
    const Eigen::Vector4d x =
        normal_block_exponential(k, a, t) * Eigen::Vector4d(pq.p(k), pq.q(k), pq.p(-k), pq.q(-k));
    out.p(k) = x(0);
    out.q(k) = x(1);
    out.p(-k) = x(2);
    out.q(-k) = x(3);
  }
  return out;
}

}  // namespace nlsnf
