#pragma once

#include "nlsnf/phase_space.hpp"

namespace nlsnf {

// |c| closer than this to a point of pi*Z (other than 0) counts as excluded.
inline constexpr double kExcludedWindow = 1e-8;

// Amplitude c != 0 of the constant potential phi_c = (c, -conj(c)).
class Amplitude {
 public:
  // Throws ValidationError for c == 0 or non-finite c.
  explicit Amplitude(cplx c);
  static Amplitude from_modulus(double modulus) { return Amplitude(cplx{modulus, 0.0}); }

  cplx value() const { return c_; }
  double modulus() const { return modulus_; }
  double modulus_squared() const { return modulus_ * modulus_; }
  bool excluded() const { return excluded_; }

  // Throws ExcludedAmplitudeError when |c| is in pi*Z.
  void require_admissible() const;

  // phi_c at truncation K.
  SpectralField potential(int K) const;

 private:
  cplx c_;
  double modulus_;
  bool excluded_;
};

bool modulus_is_excluded(double modulus);

}  // namespace nlsnf
