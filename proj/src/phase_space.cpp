#include "nlsnf/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nlsnf/errors.hpp"

namespace nlsnf {

namespace {

void require_same_truncation(const SpectralField& f, const SpectralField& g) {
  if (f.truncation() != g.truncation()) {
    throw DimensionError("fields have different truncation orders (" +
                         std::to_string(f.truncation()) + " vs " +
                         std::to_string(g.truncation()) + ")");
  }
}

bool finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

}  // namespace

SpectralField::SpectralField(int K) : K_(K) {
  if (K < 0) throw ValidationError("truncation order must be non-negative");
  z_.assign(static_cast<std::size_t>(2 * K + 1), cplx{});
  w_.assign(static_cast<std::size_t>(2 * K + 1), cplx{});
}

SpectralField::SpectralField(int K, std::vector<cplx> z, std::vector<cplx> w)
    : K_(K), z_(std::move(z)), w_(std::move(w)) {
  if (K < 0) throw ValidationError("truncation order must be non-negative");
  const auto n = static_cast<std::size_t>(2 * K + 1);
  if (z_.size() != n || w_.size() != n) {
    throw ValidationError("coefficient arrays must have 2K+1 = " + std::to_string(n) +
                          " entries");
  }
  if (!all_finite()) throw ValidationError("non-finite coefficient");
}

bool SpectralField::all_finite() const {
  return std::all_of(z_.begin(), z_.end(), finite) &&
         std::all_of(w_.begin(), w_.end(), finite);
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  require_same_truncation(*this, other);
  for (std::size_t i = 0; i < z_.size(); ++i) {
    z_[i] += other.z_[i];
    w_[i] += other.w_[i];
  }
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  require_same_truncation(*this, other);
  for (std::size_t i = 0; i < z_.size(); ++i) {
    z_[i] -= other.z_[i];
    w_[i] -= other.w_[i];
  }
  return *this;
}

SpectralField& SpectralField::operator*=(cplx s) {
  for (auto& v : z_) v *= s;
  for (auto& v : w_) v *= s;
  return *this;
}

std::string_view to_string(RealityClass r) {
  switch (r) {
    case RealityClass::FocusingReal: return "FocusingReal";
    case RealityClass::DefocusingReal: return "DefocusingReal";
    case RealityClass::None: return "None";
  }
  return "None";
}

cplx omega(const SpectralField& f, const SpectralField& g) {
  require_same_truncation(f, g);
  const int K = f.truncation();
  cplx sum{};
  for (int k = -K; k <= K; ++k) {
    sum += f.z(k) * g.w(-k) - g.z(k) * f.w(-k);
  }
  return cplx{0.0, -1.0} * sum;
}

cplx pairing(const SpectralField& f, const SpectralField& g) {
  require_same_truncation(f, g);
  const int K = f.truncation();
  cplx sum{};
  for (int k = -K; k <= K; ++k) {
    sum += f.z(k) * g.z(-k) + f.w(k) * g.w(-k);
  }
  return sum;
}

cplx l2_inner(const SpectralField& f, const SpectralField& g) {
  require_same_truncation(f, g);
  const int K = f.truncation();
  cplx sum{};
  for (int k = -K; k <= K; ++k) {
    sum += f.z(k) * std::conj(g.z(k)) + f.w(k) * std::conj(g.w(k));
  }
  return sum;
}

double l2_norm(const SpectralField& f) { return std::sqrt(l2_inner(f, f).real()); }

double max_abs_diff(const SpectralField& f, const SpectralField& g) {
  require_same_truncation(f, g);
  double m = 0.0;
  for (int k = -f.truncation(); k <= f.truncation(); ++k) {
    m = std::max({m, std::abs(f.z(k) - g.z(k)), std::abs(f.w(k) - g.w(k))});
  }
  return m;
}

SpectralField sigma(const SpectralField& f) {
  const int K = f.truncation();
  SpectralField out(K);
  for (int k = -K; k <= K; ++k) {
    out.z(k) = -std::conj(f.w(-k));
    out.w(k) = -std::conj(f.z(-k));
  }
  return out;
}

RealityClass reality_class(const SpectralField& f, double tol) {
  if (tol < 0.0) throw PreconditionError("reality tolerance must be non-negative");
  const int K = f.truncation();
  double focusing = 0.0;
  double defocusing = 0.0;
  for (int k = -K; k <= K; ++k) {
    const cplx partner = std::conj(f.z(-k));
    focusing = std::max(focusing, std::abs(f.w(k) + partner));
    defocusing = std::max(defocusing, std::abs(f.w(k) - partner));
  }
  if (focusing <= tol) return RealityClass::FocusingReal;
  if (defocusing <= tol) return RealityClass::DefocusingReal;
  return RealityClass::None;
}

void require_focusing_real(const SpectralField& f, std::string_view what, double tol) {
  if (reality_class(f, tol) != RealityClass::FocusingReal) {
    throw RealityError(std::string(what) + " must lie in the focusing real subspace iL^2_r");
  }
}

SpectralField basis_vector(BasisKind kind, int K) {
  if (std::abs(kind.k) > K) {
    throw RangeError("basis index " + std::to_string(kind.k) + " outside [-" +
                     std::to_string(K) + ", " + std::to_string(K) + "]");
  }
  const double r = 1.0 / std::sqrt(2.0);
  const int k = kind.k;
  SpectralField f(K);
  switch (kind.family) {
    case BasisFamily::Xi:
      f.z(k) = 1.0;
      break;
    case BasisFamily::Eta:
      f.w(k) = 1.0;
      break;
    case BasisFamily::XiPrime:
      f.z(k) = r;
      f.w(-k) = -r;
      break;
    case BasisFamily::EtaPrime:
      f.z(k) = cplx{0.0, r};
      f.w(-k) += cplx{0.0, r};
      break;
  }
  return f;
}

double sobolev_norm(const SpectralField& f, double s) {
  double sum = 0.0;
  for (int k = -f.truncation(); k <= f.truncation(); ++k) {
    const double weight = std::pow(1.0 + static_cast<double>(k) * k, s);
    sum += weight * (std::norm(f.z(k)) + std::norm(f.w(k)));
  }
  return std::sqrt(sum);
}

SpectralField constant_field(cplx c1, cplx c2, int K) {
  SpectralField f(K);
  f.z(0) = c1;
  f.w(0) = c2;
  return f;
}

}  // namespace nlsnf
