#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "balshift/dataset.hpp"

namespace balshift {

// Logistic data generator: z = beta0 + c1*X1 + c2*X2 + c3*X3 + eps,
// X ~ N(0,1) iid, eps ~ N(0, error_variance), Y ~ Bernoulli(sigmoid(z)).
// With beta0 > 0 class 1 is the majority; the minority of interest is 0.
struct SimulationScenario {
  double beta0 = 1.5;
  double error_variance = 1.0;
  std::size_t n_samples = 10000;
  std::uint64_t seed = 0;
};

inline constexpr std::array<double, 3> kSimulationCoefficients{2.9, -3.7, 1.2};

Dataset simulate(const SimulationScenario& scenario);

// Coefficient override used only by tests.
Dataset simulate(const SimulationScenario& scenario, const std::array<double, 3>& coefficients);

inline constexpr std::array<double, 4> kScenarioBeta0{1.5, 2.5, 3.5, 4.5};
inline constexpr std::array<double, 3> kScenarioVariance{1.0, 2.0, 3.0};

// The 12-scenario grid: beta0 group i (1..4) crossed with error variance
// var j (1..3). Dataset names are "sim_group{i}_var{j}"; each scenario's
// seed derives from (master_seed, i, j).
std::vector<std::pair<SimulationScenario, Dataset>> scenario_grid(std::size_t n_samples,
                                                                  std::uint64_t master_seed);

}  // namespace balshift
