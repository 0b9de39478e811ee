#include <doctest.h>

#include <random>

#include "nlsnf/errors.hpp"
#include "nlsnf/hamiltonians.hpp"
#include "nlsnf/linearized_operator.hpp"
#include "oracles.hpp"

using namespace nlsnf;

TEST_CASE("apply_Lc matches the pointwise linearization") {
  std::mt19937_64 rng(20);
  for (cplx c : {cplx{4.0, 0.0}, cplx{0.3, -1.7}}) {
    const Amplitude a(c);
    const auto v = oracle::random_field(4, 4, rng);
    CHECK(max_abs_diff(apply_Lc(v, a), oracle::Lc(v, c)) < 1e-10);
  }
}

TEST_CASE("apply_Lc is the derivative of X_Hc at phi_c") {
  std::mt19937_64 rng(21);
  const Amplitude a(cplx{1.2, 0.5});
  const auto phi = a.potential(4);
  const auto v = oracle::random_field(4, 3, rng);
  const double h = 1e-5;
  const auto fd = (1.0 / (2.0 * h)) * (field_X_Hc(phi + h * v, a) - field_X_Hc(phi - h * v, a));
  CHECK(max_abs_diff(fd, apply_Lc(v, a)) < 1e-6);
}

TEST_CASE("gauge conjugacy L_{|c|} S^t = S^t L_c with t = -arg c") {
  std::mt19937_64 rng(22);
  const Amplitude a(std::polar(3.0, 1.1));
  const ReducedAmplitude r = reduce_amplitude(a);
  CHECK(r.modulus == doctest::Approx(3.0));
  CHECK(r.phase == doctest::Approx(-1.1));
  const auto v = oracle::random_field(5, 5, rng);
  const auto lhs = apply_Lc(gauge_flow(v, r.phase), Amplitude::from_modulus(r.modulus));
  const auto rhs = gauge_flow(apply_Lc(v, a), r.phase);
  CHECK(max_abs_diff(lhs, rhs) < 1e-12);
}

TEST_CASE("closed-form eigenvalues") {
  CHECK(analytic_eigenvalue(1, 4.0).real() == doctest::Approx(4.0 * kPi * std::sqrt(16.0 - kPi * kPi)));
  CHECK(analytic_eigenvalue(1, 4.0).real() == doctest::Approx(31.114).epsilon(1e-4));
  CHECK(analytic_eigenvalue(1, 1.0).imag() == doctest::Approx(37.42501551271033).epsilon(1e-12));
  // 8 pi sqrt(49 - 4 pi^2) = 77.553.
  CHECK(analytic_eigenvalue(2, 7.0).real() == doctest::Approx(77.553).epsilon(1e-4));
  CHECK(analytic_eigenvalue(-1, 4.0).real() == doctest::Approx(-31.113875845590773));
  CHECK(analytic_eigenvalue(0, 4.0) == cplx{});
}

TEST_CASE("spectrum multiplicities and excluded amplitudes") {
  const auto s = spectrum_analytic(Amplitude::from_modulus(4.0), 3);
  REQUIRE(s.size() == 7);
  CHECK(s[3].k == 0);
  CHECK(s[3].algebraic_multiplicity == 2);
  CHECK(s[3].geometric_multiplicity == 1);
  CHECK(s[4].geometric_multiplicity == 2);
  CHECK_THROWS_AS(spectrum_analytic(Amplitude::from_modulus(kPi), 3), ExcludedAmplitudeError);
  CHECK_THROWS_AS(spectrum_analytic(Amplitude::from_modulus(3.14159265), 3), ExcludedAmplitudeError);
  CHECK(classify_mode(1, kPi) == Regime::Excluded);
  CHECK(classify_mode(1, 4.0) == Regime::FocusFocus);
  CHECK(classify_mode(2, 4.0) == Regime::Center);
  CHECK(classify_mode(0, 4.0) == Regime::Jordan);
}

TEST_CASE("kappa branches") {
  const KappaNorm center = kappa(1, Amplitude::from_modulus(1.0));
  CHECK(center.regime == Regime::Center);
  CHECK(center.value.imag() == 0.0);
  // a = 4 pi^2 - 2, b = 2, s = sqrt(a^2 - b^2), kappa = sqrt(s (a + s)).
  CHECK(center.value.real() == doctest::Approx(52.94584163427305).epsilon(1e-12));
  const KappaNorm ff = kappa(1, Amplitude::from_modulus(4.0));
  CHECK(ff.regime == Regime::FocusFocus);
  CHECK(ff.value.real() > 0.0);
  CHECK(ff.value.imag() < 0.0);
  CHECK_THROWS_AS(kappa(0, Amplitude::from_modulus(4.0)), PreconditionError);
}

TEST_CASE("eigenvectors solve the eigenvalue problem") {
  for (double c : {1.0, 4.0, 10.0}) {
    const Amplitude a = Amplitude::from_modulus(c);
    for (int k = -6; k <= 6; ++k) {
      if (k == 0) continue;
      for (EigenKind kind : {EigenKind::F, EigenKind::G}) {
        const EigenPair ep = eigenvector(k, kind, a, 6);
        const auto residual = oracle::Lc(ep.vec, cplx{c, 0.0}) - ep.lambda * ep.vec;
        CHECK(l2_norm(residual) < 1e-9 * std::max(1.0, std::abs(ep.lambda)) * l2_norm(ep.vec));
      }
    }
  }
  CHECK_THROWS_AS(eigenvector(0, EigenKind::F, Amplitude::from_modulus(4.0), 3), PreconditionError);
  CHECK_THROWS_AS(eigenvector(4, EigenKind::F, Amplitude::from_modulus(4.0), 3), RangeError);
}

TEST_CASE("truncated operator check") {
  const auto r = truncated_operator_check(Amplitude::from_modulus(4.0), 8);
  CHECK(r.count == 2 * 17);
  CHECK(r.zero_count == 2);
  CHECK(r.real_count == 4);
  CHECK(r.imaginary_count == 28);
  CHECK(r.positive_real_count == 1);
  CHECK(r.max_deviation < 1e-12);
  const auto r10 = truncated_operator_check(Amplitude::from_modulus(10.0), 8);
  CHECK(r10.positive_real_count == 3);
}
