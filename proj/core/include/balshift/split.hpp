#pragma once

#include <cstdint>

#include "balshift/dataset.hpp"

namespace balshift {

struct SplitPair {
  Dataset train;
  Dataset test;
  double test_fraction = 0.2;
  std::uint64_t seed = 0;
};

// Stratified partition. Per-class test counts follow a largest-remainder
// allocation of round(test_fraction * n) total rows, so the overall split is
// exact and per-class proportions are off by at most one sample. Each class
// keeps at least one row on both sides. Deterministic given seed.
SplitPair stratified_split(const Dataset& d, double test_fraction, std::uint64_t seed);

}  // namespace balshift
