#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace mvrcg {

/// n observations of named variables; column order is the declared variable order.
struct Dataset {
    std::vector<std::string> columns;
    Eigen::MatrixXd rows;  // n x columns.size()

    long sample_count() const { return static_cast<long>(rows.rows()); }
};

/// CSV with a header row of names and one observation per row. Missing or
/// non-numeric cells are a ParseError.
Dataset parse_csv(std::string_view text);
Dataset read_csv(const std::filesystem::path& path);
/// Shortest round-trip decimal formatting, "\n" line endings.
std::string format_csv(const Dataset& data);
void write_csv(const std::filesystem::path& path, const Dataset& data);

}  // namespace mvrcg
