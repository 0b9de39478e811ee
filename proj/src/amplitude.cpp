#include "nlsnf/amplitude.hpp"

#include <cmath>
#include <sstream>

#include "nlsnf/errors.hpp"

namespace nlsnf {

bool modulus_is_excluded(double modulus) {
  const double m = std::round(modulus / kPi);
  return m >= 1.0 && std::abs(modulus - kPi * m) < kExcludedWindow;
}

Amplitude::Amplitude(cplx c) : c_(c), modulus_(std::abs(c)) {
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
    throw ValidationError("amplitude must be finite");
  }
  if (modulus_ == 0.0) throw ValidationError("amplitude c must be nonzero");
  excluded_ = modulus_is_excluded(modulus_);
}

void Amplitude::require_admissible() const {
  if (excluded_) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "Excluded amplitude: |c| = " << modulus_ << " lies in pi*Z";
    throw ExcludedAmplitudeError(msg.str());
  }
}

SpectralField Amplitude::potential(int K) const { return constant_field(c_, -std::conj(c_), K); }

}  // namespace nlsnf
