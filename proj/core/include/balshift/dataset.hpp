#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "balshift/matrix.hpp"

namespace balshift {

enum class SourceKind { csv, openml, simulated, derived };

const char* source_kind_name(SourceKind kind);

// Named continuous feature matrix with a binary target. Immutable by
// convention: every transform in the project returns a new Dataset.
//
// Construction enforces the invariants everything downstream relies on:
// all values finite, both classes present, unique feature names.
struct Dataset {
  std::string name;
  Matrix features;
  std::vector<std::string> feature_names;
  std::vector<int> target;  // values in {0, 1}
  SourceKind source = SourceKind::derived;

  static Dataset create(std::string name, Matrix features,
                        std::vector<std::string> feature_names, std::vector<int> target,
                        SourceKind source);

  std::size_t n_rows() const { return features.rows(); }
  std::size_t n_cols() const { return features.cols(); }

  std::size_t class_count(int label) const;
  std::size_t feature_index(const std::string& feature_name) const;

  // Rows selected by index (order preserved), source becomes derived.
  Dataset take_rows(const std::vector<std::size_t>& indices, std::string new_name) const;

  std::uint64_t content_checksum() const;
};

struct ImbalanceSummary {
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  int minority_class = 1;
  double imbalance_ratio = 1.0;  // majority count / minority count, >= 1
};

// IR tie at exactly 1.0 designates class 1 as the minority.
ImbalanceSummary summarize(const Dataset& d);

}  // namespace balshift
