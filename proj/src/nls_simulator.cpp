#include "nlsnf/nls_simulator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "nlsnf/errors.hpp"
#include "nlsnf/fourier_grid.hpp"
#include "nlsnf/hamiltonians.hpp"
#include "nlsnf/linearized_operator.hpp"
#include "nlsnf/normal_form.hpp"

namespace nlsnf {

namespace {

constexpr cplx kI{0.0, 1.0};

RealityClass required_class(Branch branch) {
  return branch == Branch::Focusing ? RealityClass::FocusingReal : RealityClass::DefocusingReal;
}

void require_branch_reality(const SpectralField& phi, Branch branch) {
  const double tol = 1e-10 * std::max(1.0, l2_norm(phi));
  if (reality_class(phi, tol) != required_class(branch)) {
    throw RealityError(branch == Branch::Focusing
                           ? "focusing integration requires a field in iL^2_r"
                           : "defocusing integration requires a field in L^2_r");
  }
}

// Works on the phi_1 coefficients only; phi_2 is rebuilt from the reality
// condition, so every step stays exactly on the real subspace.
class SplitStepper {
 public:
  SplitStepper(int K, int N, double dt, Branch branch)
      : K_(K), N_(N), dt_(dt), branch_(branch), half_(static_cast<std::size_t>(2 * K + 1)) {
    for (int k = -K; k <= K; ++k) {
      const double q = 4.0 * kPi * kPi * static_cast<double>(k) * k;
      half_[static_cast<std::size_t>(k + K)] = std::polar(1.0, -q * dt / 2.0);
    }
  }

  void advance(std::vector<cplx>& z) const {
    linear_half(z);
    auto u = fft::coefficients_to_samples(z, K_, N_);
    // phi_1 phi_2 = -|u|^2 (focusing) or +|u|^2 (defocusing).
    const double sign = branch_ == Branch::Focusing ? 2.0 : -2.0;
    for (auto& v : u) v *= std::polar(1.0, sign * std::norm(v) * dt_);
    z = fft::samples_to_coefficients(std::move(u), K_);
    linear_half(z);
  }

  SpectralField to_field(const std::vector<cplx>& z) const {
    std::vector<cplx> w(z.size());
    const double s = branch_ == Branch::Focusing ? -1.0 : 1.0;
    for (int k = -K_; k <= K_; ++k) {
      w[static_cast<std::size_t>(k + K_)] = s * std::conj(z[static_cast<std::size_t>(K_ - k)]);
    }
    return SpectralField(K_, z, std::move(w));
  }

  static bool finite(const std::vector<cplx>& z) {
    return std::all_of(z.begin(), z.end(), [](cplx v) {
      return std::isfinite(v.real()) && std::isfinite(v.imag());
    });
  }

 private:
  void linear_half(std::vector<cplx>& z) const {
    for (std::size_t i = 0; i < z.size(); ++i) z[i] *= half_[i];
  }

  int K_;
  int N_;
  double dt_;
  Branch branch_;
  std::vector<cplx> half_;
};

std::vector<cplx> phi1_coefficients(const SpectralField& phi) {
  return {phi.z_coeffs().begin(), phi.z_coeffs().end()};
}

void require_finite(const std::vector<cplx>& z, double t) {
  if (!SplitStepper::finite(z)) {
    throw BlowUpError("non-finite state at t = " + std::to_string(t));
  }
}

// omega(f, g) restricted to modes +-m, where g lives on those modes.
cplx omega_on_modes(const SpectralField& f, const SpectralField& g, int m) {
  cplx sum = f.z(m) * g.w(-m) - g.z(m) * f.w(-m);
  if (m != 0) sum += f.z(-m) * g.w(m) - g.z(-m) * f.w(m);
  return -kI * sum;
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

void SimConfig::validate() const {
  if (K < 0) throw ValidationError("K must be non-negative");
  if (!(dt > 0.0)) throw ValidationError("dt must be positive");
  if (!(T >= dt)) throw ValidationError("T must be at least dt");
  if (N < 2 * (2 * K + 1)) {
    throw ValidationError("N = " + std::to_string(N) + " below 2(2K+1) = " +
                          std::to_string(2 * (2 * K + 1)));
  }
  if (stride < 1) throw ValidationError("stride must be at least 1");
}

int SimConfig::steps() const { return std::max(1, static_cast<int>(std::llround(T / dt))); }

SpectralField step(const SpectralField& phi, double dt, int N, Branch branch) {
  require_branch_reality(phi, branch);
  if (N < min_grid_size(phi.truncation())) {
    throw AliasingError("grid too small for split-step integration");
  }
  SplitStepper stepper(phi.truncation(), N, dt, branch);
  auto z = phi1_coefficients(phi);
  stepper.advance(z);
  require_finite(z, dt);
  return stepper.to_field(z);
}

Trajectory evolve(const SimConfig& cfg, const SpectralField& phi0) {
  cfg.validate();
  if (phi0.truncation() != cfg.K) throw DimensionError("initial field truncation differs from K");
  require_branch_reality(phi0, cfg.branch);

  const int n = cfg.steps();
  const double h = cfg.T / n;
  SplitStepper stepper(cfg.K, cfg.N, h, cfg.branch);
  auto z = phi1_coefficients(phi0);

  Trajectory traj;
  auto record = [&](double t) {
    SpectralField f = stepper.to_field(z);
    traj.monitors.push_back({eval_H(f).real(), eval_H1(f).real()});
    traj.t.push_back(t);
    traj.samples.push_back(std::move(f));
  };
  record(0.0);
  for (int i = 1; i <= n; ++i) {
    stepper.advance(z);
    require_finite(z, i * h);
    if (i % cfg.stride == 0 || i == n) record(i * h);
  }
  return traj;
}

SpectralField evolve_final(const SimConfig& cfg, const SpectralField& phi0) {
  cfg.validate();
  if (phi0.truncation() != cfg.K) throw DimensionError("initial field truncation differs from K");
  require_branch_reality(phi0, cfg.branch);
  const int n = cfg.steps();
  const double h = cfg.T / n;
  SplitStepper stepper(cfg.K, cfg.N, h, cfg.branch);
  auto z = phi1_coefficients(phi0);
  for (int i = 1; i <= n; ++i) {
    stepper.advance(z);
    if (i % 64 == 0) require_finite(z, i * h);
  }
  require_finite(z, cfg.T);
  return stepper.to_field(z);
}

GrowthMeasurement growth_rate(const Amplitude& a, int k, double eps, const SimConfig& cfg) {
  cfg.validate();
  a.require_admissible();
  if (k < 1 || classify_mode(k, a.modulus()) != Regime::FocusFocus) {
    throw PreconditionError("mode " + std::to_string(k) + " is not unstable for |c| = " +
                            std::to_string(a.modulus()));
  }
  if (k > cfg.K) throw RangeError("mode outside truncation");
  if (!(eps > 0.0) || eps > 1e-6 * a.modulus() * (1.0 + 1e-12)) {
    throw PreconditionError("eps must lie in (0, 1e-6 |c|]");
  }
  if (cfg.branch != Branch::Focusing) throw PreconditionError("growth runs use the focusing branch");

  const Amplitude reduced = Amplitude::from_modulus(a.modulus());
  const DarbouxQuad quad = darboux_quad(k, reduced, cfg.K);
  const SpectralField base = reduced.potential(cfg.K);
  const double phase = std::arg(a.value());
  const double omega_rot = 2.0 * a.modulus_squared();

  const SpectralField phi0 = gauge_flow(base + eps * quad.alpha(1), phase);
  const double lo = 10.0 * eps;
  const double hi = 1e-3;

  const int n = cfg.steps();
  const double h = cfg.T / n;
  SplitStepper stepper(cfg.K, cfg.N, h, Branch::Focusing);
  auto z = phi1_coefficients(phi0);

  std::vector<double> ts;
  std::vector<double> logs;
  for (int i = 1; i <= n; ++i) {
    stepper.advance(z);
    if (i % 64 == 0) require_finite(z, i * h);
    const double t = i * h;
    const SpectralField delta =
        gauge_flow(stepper.to_field(z), -phase - omega_rot * t) - base;
    const double p_plus = omega_on_modes(delta, quad.beta(1), k).real();
    const double p_minus = omega_on_modes(delta, quad.beta(-1), k).real();
    const double amp = std::hypot(p_plus, p_minus);
    if (amp > hi) break;
    if (amp >= lo) {
      ts.push_back(t);
      logs.push_back(std::log(amp));
    }
  }
  if (ts.size() < 3) {
    throw NumericalError("growth fitting window is empty; increase T or decrease eps");
  }

  GrowthMeasurement m{};
  m.analytic = analytic_eigenvalue(k, a.modulus()).real();
  m.measured = least_squares_slope(ts, logs);
  m.rel_err = std::abs(m.measured - m.analytic) / m.analytic;
  m.window_start = ts.front();
  m.window_end = ts.back();
  m.samples_in_window = static_cast<int>(ts.size());
  return m;
}

double gauge_commutation_check(const SimConfig& cfg, const SpectralField& phi0, double t_gauge) {
  const SpectralField a = evolve_final(cfg, gauge_flow(phi0, t_gauge));
  const SpectralField b = gauge_flow(evolve_final(cfg, phi0), t_gauge);
  return max_abs_diff(a, b);
}

SpectralField random_smooth_field(int K, int modes, double amplitude, std::uint64_t seed,
                                  Branch branch) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  SpectralField f(K);
  const int top = std::min(modes, K);
  for (int k = -top; k <= top; ++k) {
    const double envelope = amplitude * std::exp(-std::abs(k));
    f.z(k) = envelope * cplx{normal(rng), normal(rng)};
  }
  const double s = branch == Branch::Focusing ? -1.0 : 1.0;
  for (int k = -K; k <= K; ++k) f.w(k) = s * std::conj(f.z(-k));
  return f;
}

double defocusing_growth_rate(const Amplitude& a, int k, double eps, const SimConfig& cfg) {
  cfg.validate();
  if (k < 1 || k > cfg.K) throw RangeError("mode outside truncation");
  const cplx c = a.value();
  SpectralField base = constant_field(c, std::conj(c), cfg.K);
  SpectralField bump(cfg.K);
  bump.z(k) = 1.0;
  bump.w(-k) = 1.0;
  const SpectralField phi0 = base + eps * bump;

  const int n = cfg.steps();
  const double h = cfg.T / n;
  SplitStepper stepper(cfg.K, cfg.N, h, Branch::Defocusing);
  auto z = phi1_coefficients(phi0);
  const double omega_rot = 2.0 * a.modulus_squared();

  std::vector<double> ts{0.0};
  std::vector<double> logs{std::log(l2_norm(phi0 - base))};
  for (int i = 1; i <= n; ++i) {
    stepper.advance(z);
    if (i % 64 == 0) require_finite(z, i * h);
    if (i % cfg.stride != 0 && i != n) continue;
    const double t = i * h;
    const SpectralField delta = gauge_flow(stepper.to_field(z), omega_rot * t) - base;
    ts.push_back(t);
    logs.push_back(std::log(l2_norm(delta)));
  }
  return least_squares_slope(ts, logs);
}

}  // namespace nlsnf
