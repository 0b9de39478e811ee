#include <doctest.h>

#include <cmath>

#include "nlsnf/errors.hpp"
#include "nlsnf/hamiltonians.hpp"
#include "nlsnf/nls_simulator.hpp"

using namespace nlsnf;

namespace {

SimConfig small(double T, double dt = 1e-4) {
  SimConfig cfg;
  cfg.K = 16;
  cfg.N = 128;
  cfg.T = T;
  cfg.dt = dt;
  return cfg;
}

}  // namespace

TEST_CASE("configuration validation") {
  SimConfig cfg = small(1.0);
  CHECK_NOTHROW(cfg.validate());
  cfg.dt = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  cfg = small(1e-5, 1e-4);
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  cfg = small(1.0);
  cfg.N = 64;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  CHECK(small(kPi).steps() == 31416);
}

TEST_CASE("step keeps the field on its real subspace") {
  const SpectralField phi = Amplitude(cplx{1.0, 0.3}).potential(8) + random_smooth_field(8, 3, 0.2, 1);
  const SpectralField next = step(phi, 1e-3, 64);
  CHECK(reality_class(next, 0.0) == RealityClass::FocusingReal);
  CHECK_THROWS_AS(step(constant_field(1.0, 1.0, 8), 1e-3, 64), RealityError);
  const SpectralField d = constant_field(1.0, 1.0, 8);
  CHECK(reality_class(step(d, 1e-3, 64, Branch::Defocusing), 0.0) == RealityClass::DefocusingReal);
  CHECK_THROWS_AS(step(phi, 1e-3, 16), AliasingError);
}

TEST_CASE("the constant potential follows gamma_c") {
  const Amplitude a(std::polar(1.0, -0.5));
  const SpectralField end = evolve_final(small(0.37), a.potential(16));
  CHECK(max_abs_diff(end, gamma_c(0.37, a, 16)) < 1e-12);
}

TEST_CASE("tiny single-mode data evolve linearly") {
  SpectralField phi(16);
  phi.z(3) = 1e-9;
  phi.w(-3) = -1e-9;
  const SpectralField end = evolve_final(small(0.01), phi);
  const cplx expected = 1e-9 * std::polar(1.0, -4.0 * kPi * kPi * 9.0 * 0.01);
  CHECK(std::abs(end.z(3) - expected) < 1e-20);
}

TEST_CASE("trajectory monitors") {
  SimConfig cfg = small(0.05);
  cfg.stride = 100;
  const SpectralField phi0 = Amplitude::from_modulus(1.0).potential(16) + random_smooth_field(16, 4, 0.1, 3);
  const Trajectory tr = evolve(cfg, phi0);
  CHECK(tr.t.size() == 6);
  CHECK(tr.t.back() == doctest::Approx(0.05));
  for (const Monitor& m : tr.monitors) {
    CHECK(std::abs(m.H1 - tr.monitors[0].H1) < 1e-12 * std::abs(tr.monitors[0].H1));
    CHECK(std::abs(m.H - tr.monitors[0].H) < 1e-6 * std::abs(tr.monitors[0].H));
  }
  CHECK_THROWS_AS(evolve(cfg, random_smooth_field(8, 2, 0.1, 1)), DimensionError);
}

TEST_CASE("gauge commutation") {
  const SpectralField phi0 = Amplitude::from_modulus(2.0).potential(16) + random_smooth_field(16, 5, 0.3, 9);
  CHECK(gauge_commutation_check(small(0.1), phi0, 1.3) < 1e-12);
}

TEST_CASE("growth rate preconditions") {
  const SimConfig cfg = small(1.0);
  CHECK_THROWS_AS(growth_rate(Amplitude::from_modulus(4.0), 2, 1e-7, cfg), PreconditionError);
  CHECK_THROWS_AS(growth_rate(Amplitude::from_modulus(1.0), 1, 1e-7, cfg), PreconditionError);
  CHECK_THROWS_AS(growth_rate(Amplitude::from_modulus(4.0), 1, 1e-3, cfg), PreconditionError);
  CHECK_THROWS_AS(growth_rate(Amplitude::from_modulus(4.0), 1, 4e-7, small(0.01)), NumericalError);
}

TEST_CASE("measured growth at small truncation") {
  const GrowthMeasurement g = growth_rate(Amplitude(std::polar(4.0, 2.5)), 1, 4e-7, small(1.0));
  CHECK(g.rel_err < 0.02);
  CHECK(g.samples_in_window >= 3);
  CHECK(g.window_start < g.window_end);
}

TEST_CASE("no growth on the defocusing branch") {
  // K = 16 keeps 4 pi^2 K^2 dt below pi, away from the split-step resonance.
  SimConfig cfg = small(1.0);
  cfg.branch = Branch::Defocusing;
  for (double c : {1.0, 4.0, 10.0}) {
    for (int k : {1, 2, 3}) CHECK(defocusing_growth_rate(Amplitude::from_modulus(c), k, 1e-6, cfg) < 0.1);
  }
}

TEST_CASE("random smooth fields are deterministic") {
  const auto a = random_smooth_field(8, 4, 0.5, 42);
  const auto b = random_smooth_field(8, 4, 0.5, 42);
  CHECK(a == b);
  CHECK(reality_class(a, 0.0) == RealityClass::FocusingReal);
  CHECK(reality_class(random_smooth_field(8, 4, 0.5, 42, Branch::Defocusing), 0.0) == RealityClass::DefocusingReal);
  CHECK(a.z(6) == cplx{});
}
