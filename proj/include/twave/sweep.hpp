#pragma once

#include <optional>
#include <vector>

#include "twave/equilibria.hpp"
#include "twave/spectral.hpp"

namespace twave {

struct RegionCell {
  double cs = 0;
  double g = 0;
  bool valid = false;  // false when g > g1(cs)
  Region region = Region::C0;
  WaveType predicted = WaveType::Unclassified;
  CoefficientSet coefficients;
};

/// Row-major (cs outer, g inner) map of the (b, a) region of one branch over
/// cs in [cs_min, cs_max] and g in [g_min, g_max], both inclusive, n_cs x n_g
/// points. Cells with g > g1(cs) are marked invalid.
struct RegionMapSpec {
  double cs_min = 0.1, cs_max = 4.0;
  double g_min = -2.0, g_max = 2.0;
  int n_cs = 100, n_g = 100;
  Branch branch = Branch::Minus;
};

std::vector<RegionCell> region_map(const RegionMapSpec& spec,
                                   ExecPolicy policy = ExecPolicy::Parallel);

}  // namespace twave
