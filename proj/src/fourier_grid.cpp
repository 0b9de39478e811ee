#include "nlsnf/fourier_grid.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "nlsnf/errors.hpp"

namespace nlsnf {

namespace fft {

namespace {

// FFTW planning is not thread-safe; execution through fftw_execute_dft is.
// Plans are created once per (size, direction) and kept for the process
// lifetime.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  fftw_plan get(int n, int sign) {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(n, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    std::vector<cplx> scratch_in(static_cast<std::size_t>(n));
    std::vector<cplx> scratch_out(static_cast<std::size_t>(n));
    fftw_plan plan = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(scratch_in.data()),
                                      reinterpret_cast<fftw_complex*>(scratch_out.data()), sign,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(key, plan);
    return plan;
  }

  PlanCache(const PlanCache&) = delete;
  PlanCache& operator=(const PlanCache&) = delete;

 private:
  PlanCache() = default;
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  std::mutex mutex_;
  std::map<std::pair<int, int>, fftw_plan> plans_;
};

void execute(std::vector<cplx>& data, int sign) {
  const int n = static_cast<int>(data.size());
  if (n == 0) return;
  fftw_plan plan = PlanCache::instance().get(n, sign);
  std::vector<cplx> out(data.size());
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(data.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  data.swap(out);
}

}  // namespace

void synthesize(std::vector<cplx>& data) { execute(data, FFTW_BACKWARD); }
void analyze(std::vector<cplx>& data) { execute(data, FFTW_FORWARD); }

std::vector<cplx> coefficients_to_samples(std::span<const cplx> coeffs, int K, int N) {
  std::vector<cplx> data(static_cast<std::size_t>(N), cplx{});
  for (int k = -K; k <= K; ++k) {
    data[static_cast<std::size_t>((k % N + N) % N)] += coeffs[static_cast<std::size_t>(k + K)];
  }
  synthesize(data);
  return data;
}

std::vector<cplx> samples_to_coefficients(std::vector<cplx> samples, int K) {
  const int N = static_cast<int>(samples.size());
  analyze(samples);
  std::vector<cplx> coeffs(static_cast<std::size_t>(2 * K + 1));
  const double scale = 1.0 / N;
  for (int k = -K; k <= K; ++k) {
    coeffs[static_cast<std::size_t>(k + K)] =
        samples[static_cast<std::size_t>((k % N + N) % N)] * scale;
  }
  return coeffs;
}

}  // namespace fft

GridField to_grid(const SpectralField& f, int N) {
  const int K = f.truncation();
  if (N < min_grid_size(K)) {
    throw AliasingError("grid size " + std::to_string(N) + " below 2(2K+1) = " +
                        std::to_string(min_grid_size(K)));
  }
  return GridField{N, fft::coefficients_to_samples(f.z_coeffs(), K, N),
                   fft::coefficients_to_samples(f.w_coeffs(), K, N)};
}

SpectralField from_grid(const GridField& g, int K) {
  if (g.N < min_grid_size(K)) {
    throw AliasingError("grid size " + std::to_string(g.N) + " below 2(2K+1) = " +
                        std::to_string(min_grid_size(K)));
  }
  if (static_cast<int>(g.phi1.size()) != g.N || static_cast<int>(g.phi2.size()) != g.N) {
    throw DimensionError("grid sample arrays do not match N");
  }
  return SpectralField(K, fft::samples_to_coefficients(g.phi1, K),
                       fft::samples_to_coefficients(g.phi2, K));
}

}  // namespace nlsnf
