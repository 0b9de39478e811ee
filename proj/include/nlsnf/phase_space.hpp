#pragma once

// Finite Fourier truncation of the NLS phase space L^2_c = L^2 x L^2 on the
// period-1 torus, with its pairing, Hermitian product, symplectic form and
// the conjugation that fixes the focusing real subspace.
//
// A point phi = (phi_1, phi_2) is stored through its coefficients
//
//     phi_1(x) = sum_{|k|<=K} z_k e^{2 pi i k x},
//     phi_2(x) = sum_{|k|<=K} w_k e^{2 pi i k x}.
//
// All integrals over [0, 1] reduce to exact finite sums over these
// coefficients.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace nlsnf {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr int kDefaultTruncation = 64;
inline constexpr double kDefaultRealityTolerance = 1e-12;

class SpectralField {
 public:
  // Zero field at truncation order K (K >= 0).
  explicit SpectralField(int K = 0);
  // Takes coefficient sequences ordered k = -K..K. Throws ValidationError on
  // a size mismatch or a non-finite entry.
  SpectralField(int K, std::vector<cplx> z, std::vector<cplx> w);

  int truncation() const { return K_; }
  std::size_t size() const { return z_.size(); }

  bool in_range(int k) const { return k >= -K_ && k <= K_; }

  // Unchecked accessors; k must lie in [-K, K].
  const cplx& z(int k) const { return z_[static_cast<std::size_t>(k + K_)]; }
  const cplx& w(int k) const { return w_[static_cast<std::size_t>(k + K_)]; }
  cplx& z(int k) { return z_[static_cast<std::size_t>(k + K_)]; }
  cplx& w(int k) { return w_[static_cast<std::size_t>(k + K_)]; }

  std::span<const cplx> z_coeffs() const { return z_; }
  std::span<const cplx> w_coeffs() const { return w_; }
  std::span<cplx> z_coeffs() { return z_; }
  std::span<cplx> w_coeffs() { return w_; }

  bool all_finite() const;

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(cplx s);

  friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
  friend SpectralField operator*(cplx s, SpectralField a) { return a *= s; }
  friend SpectralField operator*(SpectralField a, cplx s) { return a *= s; }
  friend SpectralField operator-(SpectralField a) { return a *= -1.0; }

  friend bool operator==(const SpectralField&, const SpectralField&) = default;

 private:
  int K_ = 0;
  std::vector<cplx> z_;
  std::vector<cplx> w_;
};

enum class RealityClass { FocusingReal, DefocusingReal, None };

std::string_view to_string(RealityClass r);

enum class BasisFamily { Xi, Eta, XiPrime, EtaPrime };

struct BasisKind {
  BasisFamily family;
  int k;
};

// omega(f, g) = -i int (f_1 g_2 - g_1 f_2) dx.
cplx omega(const SpectralField& f, const SpectralField& g);
// <f, g> = int (f_1 g_1 + f_2 g_2) dx.
cplx pairing(const SpectralField& f, const SpectralField& g);
// (f, g) = int (f_1 conj(g_1) + f_2 conj(g_2)) dx.
cplx l2_inner(const SpectralField& f, const SpectralField& g);
double l2_norm(const SpectralField& f);
// Largest coefficient modulus of f - g.
double max_abs_diff(const SpectralField& f, const SpectralField& g);

// (phi_1, phi_2) -> (-conj(phi_2), -conj(phi_1)).
SpectralField sigma(const SpectralField& f);

RealityClass reality_class(const SpectralField& f,
                           double tol = kDefaultRealityTolerance);

// Throws RealityError unless f is focusing-real within tol.
void require_focusing_real(const SpectralField& f, std::string_view what,
                           double tol = 1e-10);

// xi_k = (e_k, 0), eta_k = (0, e_k), xi'_k = (xi_k - eta_{-k})/sqrt2,
// eta'_k = i (xi_k + eta_{-k})/sqrt2.
SpectralField basis_vector(BasisKind kind, int K);

// (sum_k <k>^{2s} (|z_k|^2 + |w_k|^2))^{1/2}, <k> = sqrt(1 + k^2).
double sobolev_norm(const SpectralField& f, double s);

// Constant field (c1, c2).
SpectralField constant_field(cplx c1, cplx c2, int K);

}  // namespace nlsnf
