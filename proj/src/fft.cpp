#include "fft.hpp"

#include <algorithm>
#include <mutex>

namespace twave::detail {

namespace {
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

FftPlan::FftPlan(int n) : n_(n) {
  std::vector<double> r(n);
  std::vector<std::complex<double>> c(n / 2 + 1);
  auto* cp = reinterpret_cast<fftw_complex*>(c.data());
  std::lock_guard lock(planner_mutex());
  r2c_ = fftw_plan_dft_r2c_1d(n, r.data(), cp, FFTW_ESTIMATE | FFTW_UNALIGNED);
  c2r_ = fftw_plan_dft_c2r_1d(n, cp, r.data(),
                              FFTW_ESTIMATE | FFTW_UNALIGNED | FFTW_DESTROY_INPUT);
}

FftPlan::~FftPlan() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(r2c_);
  fftw_destroy_plan(c2r_);
}

void FftPlan::forward(std::span<const double> in, std::span<std::complex<double>> out) const {
  std::vector<double> buf(in.begin(), in.end());
  fftw_execute_dft_r2c(r2c_, buf.data(), reinterpret_cast<fftw_complex*>(out.data()));
}

void FftPlan::inverse(std::span<const std::complex<double>> in, std::span<double> out) const {
  // c2r overwrites its input
  std::vector<std::complex<double>> buf(in.begin(), in.end());
  fftw_execute_dft_c2r(c2r_, reinterpret_cast<fftw_complex*>(buf.data()), out.data());
  const double scale = 1.0 / n_;
  std::transform(out.begin(), out.end(), out.begin(), [scale](double v) { return v * scale; });
}

}  // namespace twave::detail
