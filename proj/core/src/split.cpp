#include "balshift/split.hpp"

#include <algorithm>
#include <cmath>

#include "balshift/common.hpp"
#include "balshift/rng.hpp"

namespace balshift {

SplitPair stratified_split(const Dataset& d, double test_fraction, std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw Error("stratified_split: test_fraction must be in (0,1)");
  }

  std::vector<std::size_t> class_rows[2];
  for (std::size_t r = 0; r < d.n_rows(); ++r) {
    class_rows[d.target[r]].push_back(r);
  }
  for (int cls = 0; cls < 2; ++cls) {
    if (class_rows[cls].size() < 2) {
      throw Error("stratified_split: class " + std::to_string(cls) +
                  " has fewer than 2 rows; cannot place one on each side");
    }
  }

  const auto total_test =
      static_cast<std::size_t>(std::llround(test_fraction * static_cast<double>(d.n_rows())));

  // Largest-remainder allocation of total_test across the two classes.
  std::size_t take[2];
  double remainder[2];
  std::size_t allocated = 0;
  for (int cls = 0; cls < 2; ++cls) {
    const double exact = test_fraction * static_cast<double>(class_rows[cls].size());
    take[cls] = static_cast<std::size_t>(std::floor(exact));
    remainder[cls] = exact - std::floor(exact);
    allocated += take[cls];
  }
  while (allocated < total_test) {
    int cls = remainder[0] > remainder[1]       ? 0
              : remainder[1] > remainder[0]     ? 1
              : class_rows[0].size() >= class_rows[1].size() ? 0
                                                             : 1;
    ++take[cls];
    remainder[cls] = -1.0;
    ++allocated;
  }
  for (int cls = 0; cls < 2; ++cls) {
    take[cls] = std::clamp<std::size_t>(take[cls], 1, class_rows[cls].size() - 1);
  }

  Rng rng(derive_seed(seed, "stratified_split"));
  std::vector<std::size_t> test_rows, train_rows;
  for (int cls = 0; cls < 2; ++cls) {
    auto rows = class_rows[cls];
    rng.shuffle(rows);
    test_rows.insert(test_rows.end(), rows.begin(), rows.begin() + static_cast<long>(take[cls]));
    train_rows.insert(train_rows.end(), rows.begin() + static_cast<long>(take[cls]), rows.end());
  }
  std::sort(test_rows.begin(), test_rows.end());
  std::sort(train_rows.begin(), train_rows.end());

  SplitPair pair;
  pair.train = d.take_rows(train_rows, d.name + "#train");
  pair.test = d.take_rows(test_rows, d.name + "#test");
  pair.test_fraction = test_fraction;
  pair.seed = seed;
  return pair;
}

}  // namespace balshift
