#pragma once

// Strang split-step integration of the NLS system on the real subspaces.
//
// On iL^2_r (phi_1 = u, phi_2 = -conj(u)) the system is the focusing NLS
// i u_t = -u_xx - 2|u|^2 u; on L^2_r it is the defocusing one. Both substeps
// are solved exactly: the linear flow is a Fourier multiplier and the
// nonlinear flow is the pointwise phase rotation u -> u e^{-2i phi_1 phi_2 dt}.

#include <cstdint>
#include <optional>
#include <vector>

#include "nlsnf/amplitude.hpp"
#include "nlsnf/phase_space.hpp"

namespace nlsnf {

enum class Branch { Focusing, Defocusing };

struct SimConfig {
  int K = kDefaultTruncation;
  int N = 512;
  double dt = 1e-4;
  double T = 1.0;
  Branch branch = Branch::Focusing;
  // Monitors are recorded every `stride` steps (and at the final time).
  int stride = 100;
  std::uint64_t seed = 0;

  // Throws ValidationError on dt <= 0, T < dt, N < 2(2K+1) or stride < 1.
  void validate() const;
  // Number of steps and the matching step size T / steps.
  int steps() const;
};

struct Monitor {
  double H;
  double H1;
};

struct Trajectory {
  std::vector<double> t;
  std::vector<SpectralField> samples;
  std::vector<Monitor> monitors;
};

// One Strang step: half linear, full nonlinear, half linear. Throws
// RealityError unless phi lies on the subspace of the chosen branch.
SpectralField step(const SpectralField& phi, double dt, int N, Branch branch = Branch::Focusing);

// Integrates phi0 to cfg.T. Throws BlowUpError when a non-finite value
// appears.
Trajectory evolve(const SimConfig& cfg, const SpectralField& phi0);

// Final state only, without storing samples.
SpectralField evolve_final(const SimConfig& cfg, const SpectralField& phi0);

struct GrowthMeasurement {
  double analytic;
  double measured;
  double rel_err;
  double window_start;
  double window_end;
  int samples_in_window;
};

// Evolves S^{arg c}(phi_{|c|} + eps alpha_k), projects the deviation from the
// rotating orbit onto span{alpha_k, alpha_{-k}} through the Darboux duality,
// and fits the slope of log|projection| over the samples where the
// projection lies in [10 eps, 1e-3]. cfg.T bounds the integration time.
// Throws PreconditionError if mode k is not of focus-focus type or
// eps > 1e-6 |c|, and NumericalError if the fitting window is empty.
GrowthMeasurement growth_rate(const Amplitude& a, int k, double eps, const SimConfig& cfg);

// Largest coefficient deviation between evolve(S^s phi0) and S^s evolve(phi0)
// at cfg.T.
double gauge_commutation_check(const SimConfig& cfg, const SpectralField& phi0, double t_gauge);

// Smooth random focusing-real field with coefficients ~ amplitude e^{-|k|}
// on |k| <= modes (deterministic in seed).
SpectralField random_smooth_field(int K, int modes, double amplitude, std::uint64_t seed,
                                  Branch branch = Branch::Focusing);

// Least-squares slope of log|deviation| for a defocusing run started at
// (c, conj(c)) + eps * perturbation; used to confirm the absence of
// exponential growth on L^2_r.
double defocusing_growth_rate(const Amplitude& a, int k, double eps, const SimConfig& cfg);

}  // namespace nlsnf
