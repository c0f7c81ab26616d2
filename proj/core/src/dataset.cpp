#include "balshift/dataset.hpp"

#include <cmath>
#include <unordered_set>

#include "balshift/common.hpp"
#include "balshift/hash.hpp"

namespace balshift {

const char* source_kind_name(SourceKind kind) {
  switch (kind) {
    case SourceKind::csv: return "csv";
    case SourceKind::openml: return "openml";
    case SourceKind::simulated: return "simulated";
    case SourceKind::derived: return "derived";
  }
  return "unknown";
}

Dataset Dataset::create(std::string name, Matrix features,
                        std::vector<std::string> feature_names, std::vector<int> target,
                        SourceKind source) {
  if (features.rows() == 0) throw Error("Dataset '" + name + "': no rows");
  if (feature_names.size() != features.cols()) {
    throw Error("Dataset '" + name + "': feature_names length " +
                std::to_string(feature_names.size()) + " != column count " +
                std::to_string(features.cols()));
  }
  if (target.size() != features.rows()) {
    throw Error("Dataset '" + name + "': target length != row count");
  }

  std::unordered_set<std::string> seen;
  for (const auto& fname : feature_names) {
    if (!seen.insert(fname).second) {
      throw Error("Dataset '" + name + "': duplicate feature name '" + fname + "'");
    }
  }

  for (std::size_t r = 0; r < features.rows(); ++r) {
    for (std::size_t c = 0; c < features.cols(); ++c) {
      if (!std::isfinite(features(r, c))) {
        throw Error("Dataset '" + name + "': non-finite value at row " + std::to_string(r) +
                    ", column '" + feature_names[c] + "'");
      }
    }
  }

  std::size_t count0 = 0, count1 = 0;
  for (int y : target) {
    if (y == 0) {
      ++count0;
    } else if (y == 1) {
      ++count1;
    } else {
      throw Error("Dataset '" + name + "': target value outside {0,1}");
    }
  }
  if (count0 == 0 || count1 == 0) {
    throw Error("Dataset '" + name + "': target contains a single class");
  }

  Dataset d;
  d.name = std::move(name);
  d.features = std::move(features);
  d.feature_names = std::move(feature_names);
  d.target = std::move(target);
  d.source = source;
  return d;
}

std::size_t Dataset::class_count(int label) const {
  std::size_t count = 0;
  for (int y : target) count += static_cast<std::size_t>(y == label);
  return count;
}

std::size_t Dataset::feature_index(const std::string& feature_name) const {
  for (std::size_t c = 0; c < feature_names.size(); ++c) {
    if (feature_names[c] == feature_name) return c;
  }
  throw Error("Dataset '" + name + "': unknown feature '" + feature_name + "'");
}

Dataset Dataset::take_rows(const std::vector<std::size_t>& indices, std::string new_name) const {
  std::vector<int> new_target(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= n_rows()) throw Error("Dataset::take_rows: index out of range");
    new_target[i] = target[indices[i]];
  }
  return create(std::move(new_name), features.take_rows(indices), feature_names,
                std::move(new_target), SourceKind::derived);
}

std::uint64_t Dataset::content_checksum() const {
  Fnv1a h;
  h.update(name);
  for (const auto& fname : feature_names) h.update(fname);
  for (double v : features.values()) h.update(v);
  for (int y : target) h.update(static_cast<std::uint64_t>(y));
  return h.digest();
}

ImbalanceSummary summarize(const Dataset& d) {
  const std::size_t count0 = d.class_count(0);
  const std::size_t count1 = d.class_count(1);
  ImbalanceSummary s;
  s.n_rows = d.n_rows();
  s.n_cols = d.n_cols();
  // Tie broken toward class 1 so perfectly balanced data has a defined minority.
  s.minority_class = count1 <= count0 ? 1 : 0;
  s.imbalance_ratio = static_cast<double>(std::max(count0, count1)) /
                      static_cast<double>(std::min(count0, count1));
  return s;
}

}  // namespace balshift
