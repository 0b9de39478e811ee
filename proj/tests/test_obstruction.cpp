#include <doctest.h>

#include <algorithm>
#include <random>

#include "nlsnf/errors.hpp"
#include "nlsnf/obstruction.hpp"

using namespace nlsnf;

TEST_CASE("mode classification") {
  const auto one = classify(Amplitude::from_modulus(1.0), 6);
  REQUIRE(one.size() == 7);
  CHECK(one[0].regime == Regime::Jordan);
  for (int k = 1; k <= 6; ++k) CHECK(one[static_cast<std::size_t>(k)].regime == Regime::Center);
  const auto four = classify(Amplitude::from_modulus(4.0), 6);
  CHECK(four[1].regime == Regime::FocusFocus);
  CHECK(four[1].lambda.real() == doctest::Approx(31.113875845590773));
  for (int k = 2; k <= 6; ++k) CHECK(four[static_cast<std::size_t>(k)].regime == Regime::Center);
  CHECK(classify(Amplitude::from_modulus(kPi), 3)[1].regime == Regime::Excluded);
}

TEST_CASE("obstruction reports") {
  const auto r1 = obstruction_report(Amplitude::from_modulus(1.0), 64);
  CHECK(r1.verdict == Verdict::NoObstruction);
  CHECK(r1.real_pairs == 0);
  CHECK(r1.imaginary_pairs_reported == 64);
  CHECK(r1.jordan_at_zero);
  const auto r4 = obstruction_report(Amplitude(std::polar(4.0, 2.0)), 64);
  CHECK(r4.verdict == Verdict::Obstructed);
  CHECK(r4.real_pairs == 1);
  const auto r10 = obstruction_report(Amplitude::from_modulus(10.0), 64);
  CHECK(r10.verdict == Verdict::Obstructed);
  CHECK(r10.real_pairs == 3);
  // Unstable modes are counted even beyond the truncation.
  CHECK(obstruction_report(Amplitude::from_modulus(10.0), 1).real_pairs == 3);
  CHECK(obstruction_report(Amplitude::from_modulus(2.0 * kPi), 8).verdict == Verdict::Excluded);
}

TEST_CASE("verdict agrees with the sign test and real_pairs is monotone") {
  int previous = 0;
  for (int i = 1; i <= 30; ++i) {
    const double c = 0.5 * i;
    if (modulus_is_excluded(c)) continue;
    const Amplitude a = Amplitude::from_modulus(c);
    const auto r = obstruction_report(a, 16);
    const auto eigen = spectrum_analytic(a, 16);
    const bool has_real = std::any_of(eigen.begin(), eigen.end(), [](const ModeEigenvalue& e) {
      return std::abs(e.lambda.real()) > 1e-9;
    });
    CHECK((r.verdict == Verdict::Obstructed) == has_real);
    CHECK(r.real_pairs >= previous);
    previous = r.real_pairs;
  }
}

namespace {

std::vector<cplx> sorted(const Eigen::VectorXcd& v) {
  std::vector<cplx> out(v.data(), v.data() + v.size());
  std::sort(out.begin(), out.end(), [](cplx a, cplx b) {
    return a.imag() != b.imag() ? a.imag() < b.imag() : a.real() < b.real();
  });
  return out;
}

}  // namespace

TEST_CASE("L-tilde demo spectra") {
  const auto d = ltilde_structure_demo({1.0, 2.0});
  CHECK(d.matrix.rows() == 6);
  const auto s = sorted(d.spectrum);
  const std::vector<cplx> expected = {{0, -2}, {0, -1}, {0, 0}, {0, 0}, {0, 1}, {0, 2}};
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(std::abs(s[i] - expected[i]) < 1e-12);

  const auto five = sorted(ltilde_structure_demo({5.0}).spectrum);
  CHECK(std::abs(five[0] - cplx{0, -5}) < 1e-12);
  CHECK(std::abs(five[3] - cplx{0, 5}) < 1e-12);

  const auto jordan = ltilde_structure_demo({});
  CHECK(jordan.spectrum.size() == 2);
  CHECK(jordan.spectrum.cwiseAbs().maxCoeff() < 1e-12);

  CHECK_THROWS_AS(ltilde_structure_demo({1.0, 0.0}), PreconditionError);
  CHECK_THROWS_AS(ltilde_structure_demo(std::vector<double>(8, 1.0)), PreconditionError);
}

TEST_CASE("L-tilde spectra are imaginary for random B") {
  std::mt19937_64 rng(40);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  std::uniform_int_distribution<int> len(0, 7);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> B(static_cast<std::size_t>(len(rng)));
    for (auto& b : B) b = (rng() % 2 ? 1.0 : -1.0) * u(rng);
    const auto d = ltilde_structure_demo(B);
    int zeros = 0;
    for (Eigen::Index i = 0; i < d.spectrum.size(); ++i) {
      CHECK(std::abs(d.spectrum(i).real()) < 1e-10);
      if (std::abs(d.spectrum(i)) < 1e-10) ++zeros;
    }
    CHECK(zeros == 2);
  }
}
