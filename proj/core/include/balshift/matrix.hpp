#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "balshift/common.hpp"

namespace balshift {

// Dense row-major matrix of doubles. Deliberately minimal: the project only
// needs row access, column extraction and cheap copies.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), values_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<std::vector<double>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_) throw Error("Matrix::from_rows: ragged input");
      for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return values_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const {
    return {values_.data() + r * cols_, cols_};
  }
  std::span<double> row(std::size_t r) { return {values_.data() + r * cols_, cols_}; }

  std::vector<double> column(std::size_t c) const {
    std::vector<double> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = values_[r * cols_ + c];
    return out;
  }

  void set_column(std::size_t c, double value) {
    for (std::size_t r = 0; r < rows_; ++r) values_[r * cols_ + c] = value;
  }

  // Rows of `this` selected by index, in the given order.
  Matrix take_rows(const std::vector<std::size_t>& indices) const {
    Matrix out(indices.size(), cols_);
    for (std::size_t r = 0; r < indices.size(); ++r) {
      const double* src = values_.data() + indices[r] * cols_;
      double* dst = out.values_.data() + r * cols_;
      for (std::size_t c = 0; c < cols_; ++c) dst[c] = src[c];
    }
    return out;
  }

  void append_row(std::span<const double> row_values) {
    if (rows_ == 0 && cols_ == 0) cols_ = row_values.size();
    if (row_values.size() != cols_) throw Error("Matrix::append_row: width mismatch");
    values_.insert(values_.end(), row_values.begin(), row_values.end());
    ++rows_;
  }

  const std::vector<double>& values() const { return values_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

}  // namespace balshift
