#include "balshift/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "balshift/common.hpp"
#include "balshift/stats.hpp"

namespace balshift {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  for (char ch : line) {
    if (ch == ',') {
      cells.push_back(cell);
      cell.clear();
    } else if (ch != '\r') {
      cell.push_back(ch);
    }
  }
  cells.push_back(cell);
  return cells;
}

std::optional<double> parse_number(const std::string& cell) {
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
  while (end > begin && (*(end - 1) == ' ' || *(end - 1) == '\t')) --end;
  if (begin == end) return std::nullopt;
  double value = 0.0;
  auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc() || res.ptr != end) return std::nullopt;
  return value;
}

}  // namespace

Dataset load_csv(const std::filesystem::path& path, const std::string& target_column) {
  std::ifstream in(path);
  if (!in) throw Error("load_csv: cannot open '" + path.string() + "'");

  std::string line;
  if (!std::getline(in, line)) throw Error("load_csv: '" + path.string() + "' is empty");
  const auto header = split_line(line);

  std::size_t target_idx = header.size();
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == target_column) {
      target_idx = i;
      break;
    }
  }
  if (target_idx == header.size()) {
    throw Error("load_csv: target column '" + target_column + "' not found in '" +
                path.string() + "'");
  }

  std::vector<std::string> feature_names;
  std::vector<std::size_t> feature_cols;
  bool has_synthetic_col = false;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i == target_idx) continue;
    if (header[i] == "__synthetic") {
      has_synthetic_col = true;
      continue;  // annotation column from a previous balance run, not a feature
    }
    feature_names.push_back(header[i]);
    feature_cols.push_back(i);
  }
  (void)has_synthetic_col;
  if (feature_names.empty()) throw Error("load_csv: no feature columns in '" + path.string() + "'");

  Matrix features(0, feature_names.size());
  std::vector<std::string> raw_labels;
  std::vector<double> row_buf(feature_names.size());
  std::size_t row_number = 1;  // header is row 1
  while (std::getline(in, line)) {
    ++row_number;
    if (line.empty() || (line.size() == 1 && line[0] == '\r')) continue;
    const auto cells = split_line(line);
    if (cells.size() != header.size()) {
      throw Error("load_csv: row " + std::to_string(row_number) + " has " +
                  std::to_string(cells.size()) + " cells, expected " +
                  std::to_string(header.size()));
    }
    for (std::size_t f = 0; f < feature_cols.size(); ++f) {
      const auto& cell = cells[feature_cols[f]];
      auto value = parse_number(cell);
      if (!value) {
        throw Error("load_csv: unparsable cell at row " + std::to_string(row_number) +
                    ", column '" + header[feature_cols[f]] + "' ('" + cell + "')");
      }
      row_buf[f] = *value;
    }
    features.append_row(row_buf);
    raw_labels.push_back(cells[target_idx]);
  }
  if (features.rows() == 0) throw Error("load_csv: no data rows in '" + path.string() + "'");

  // Numeric 0/1 targets pass through; anything else is treated as a pair of
  // labels with the minority mapped to 1.
  std::vector<int> target(raw_labels.size());
  bool numeric01 = true;
  for (const auto& label : raw_labels) {
    auto value = parse_number(label);
    if (!value || (*value != 0.0 && *value != 1.0)) {
      numeric01 = false;
      break;
    }
  }
  if (numeric01) {
    for (std::size_t i = 0; i < raw_labels.size(); ++i) {
      target[i] = static_cast<int>(*parse_number(raw_labels[i]));
    }
  } else {
    std::string first_label, second_label;
    std::size_t first_count = 0, second_count = 0;
    for (const auto& label : raw_labels) {
      if (label.empty()) throw Error("load_csv: empty target cell");
      if (first_count == 0 || label == first_label) {
        first_label = label;
        ++first_count;
      } else if (second_count == 0 || label == second_label) {
        second_label = label;
        ++second_count;
      } else {
        throw Error("load_csv: target column '" + target_column +
                    "' has more than two labels ('" + first_label + "', '" + second_label +
                    "', '" + label + "')");
      }
    }
    if (second_count == 0) {
      throw Error("load_csv: target column '" + target_column + "' has a single class");
    }
    std::string label_one;
    if (first_count != second_count) {
      label_one = first_count < second_count ? first_label : second_label;
    } else {
      label_one = std::max(first_label, second_label);
    }
    for (std::size_t i = 0; i < raw_labels.size(); ++i) {
      target[i] = raw_labels[i] == label_one ? 1 : 0;
    }
  }

  return Dataset::create(path.stem().string(), std::move(features), std::move(feature_names),
                         std::move(target), SourceKind::csv);
}

std::string to_csv_string(const Dataset& d, const std::string& target_column,
                          const std::vector<std::uint8_t>* synthetic_mask) {
  if (synthetic_mask && synthetic_mask->size() != d.n_rows()) {
    throw Error("to_csv_string: synthetic mask length mismatch");
  }
  std::ostringstream out;
  for (const auto& fname : d.feature_names) out << fname << ',';
  out << target_column;
  if (synthetic_mask) out << ",__synthetic";
  out << '\n';
  for (std::size_t r = 0; r < d.n_rows(); ++r) {
    for (std::size_t c = 0; c < d.n_cols(); ++c) {
      out << format_double(d.features(r, c)) << ',';
    }
    out << d.target[r];
    if (synthetic_mask) out << ',' << static_cast<int>((*synthetic_mask)[r]);
    out << '\n';
  }
  return out.str();
}

void write_csv(const Dataset& d, const std::filesystem::path& path,
               const std::string& target_column,
               const std::vector<std::uint8_t>* synthetic_mask) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("write_csv: cannot open '" + path.string() + "' for writing");
  out << to_csv_string(d, target_column, synthetic_mask);
  if (!out) throw Error("write_csv: failed writing '" + path.string() + "'");
}

}  // namespace balshift
