#pragma once

#include <complex>
#include <span>
#include <vector>

#include <fftw3.h>

namespace twave::detail {

// Real <-> half-complex transform pair for one grid size.
// Planning goes through a global lock (the FFTW planner is not thread-safe);
// execution uses the new-array interface and is safe to call concurrently.
class FftPlan {
 public:
  explicit FftPlan(int n);
  ~FftPlan();
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;

  int size() const noexcept { return n_; }

  // Unnormalized forward transform: out[m] = sum_j in[j] exp(-2 pi i j m / n).
  void forward(std::span<const double> in, std::span<std::complex<double>> out) const;
  // Inverse including the 1/n factor, so inverse(forward(v)) == v.
  void inverse(std::span<const std::complex<double>> in, std::span<double> out) const;

 private:
  int n_;
  fftw_plan r2c_ = nullptr;
  fftw_plan c2r_ = nullptr;
};

}  // namespace twave::detail
