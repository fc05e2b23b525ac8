#include "twave/sweep.hpp"

#include "twave/errors.hpp"

namespace twave {

std::vector<RegionCell> region_map(const RegionMapSpec& spec, ExecPolicy policy) {
  if (spec.n_cs < 1 || spec.n_g < 1) throw ParameterError("region map needs at least one point per axis");
  if (!(spec.cs_min > 0.0) || spec.cs_max < spec.cs_min) throw ParameterError("invalid cs range");
  if (spec.g_max < spec.g_min) throw ParameterError("invalid g range");

  const long total = static_cast<long>(spec.n_cs) * spec.n_g;
  std::vector<RegionCell> out(total);
  auto axis = [](double lo, double hi, int n, int i) {
    return n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  };
  auto cell = [&](long idx) {
    RegionCell& c = out[idx];
    c.cs = axis(spec.cs_min, spec.cs_max, spec.n_cs, static_cast<int>(idx / spec.n_g));
    c.g = axis(spec.g_min, spec.g_max, spec.n_g, static_cast<int>(idx % spec.n_g));
    const double g1 = (c.cs + 1.0) * (c.cs + 1.0) / 3.0;
    if (c.g > g1) return;
    c.valid = true;
    c.coefficients = coefficients(c.cs, c.g, spec.branch);
    c.region = classify_region(c.coefficients.a, c.coefficients.b, c.coefficients.Delta);
    c.predicted = c.g < g1 ? predicted_wave_type(c.cs, c.g, spec.branch) : WaveType::Unclassified;
  };

  if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < total; ++i) cell(i);
  } else {
    for (long i = 0; i < total; ++i) cell(i);
  }
  return out;
}

}  // namespace twave
