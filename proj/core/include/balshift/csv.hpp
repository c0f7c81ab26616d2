#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "balshift/dataset.hpp"

namespace balshift {

// UTF-8, comma separated, header row, decimal point, no quoting of numerics.
//
// Target mapping: numeric {0,1} cells are taken as-is. Otherwise the column
// must hold exactly two distinct labels; the minority label maps to 1, and
// when class sizes are equal the lexicographically larger label maps to 1.
Dataset load_csv(const std::filesystem::path& path, const std::string& target_column);

// Features, then the target column (0/1), then an optional __synthetic 0/1
// column when a mask is supplied. Values use shortest round-trip formatting.
void write_csv(const Dataset& d, const std::filesystem::path& path,
               const std::string& target_column = "target",
               const std::vector<std::uint8_t>* synthetic_mask = nullptr);

std::string to_csv_string(const Dataset& d, const std::string& target_column = "target",
                          const std::vector<std::uint8_t>* synthetic_mask = nullptr);

}  // namespace balshift
