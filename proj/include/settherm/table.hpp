#pragma once

// Column-oriented numeric output with an optional leading text column.
// CSV numbers use %.17g; infinities are written as inf / -inf in both CSV and
// JSON (as strings there).

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace settherm {

class Table {
 public:
  explicit Table(std::vector<std::string> columns, std::string label_column = {});

  void add_row(std::vector<double> values, std::string label = {});

  std::size_t rows() const noexcept { return data_.size(); }
  std::size_t cols() const noexcept { return columns_.size(); }
  const std::vector<std::string>& columns() const noexcept { return columns_; }
  bool has_labels() const noexcept { return !label_column_.empty(); }
  const std::string& label_column() const noexcept { return label_column_; }
  const std::string& label(std::size_t row) const { return labels_.at(row); }
  double value(std::size_t row, std::size_t col) const { return data_.at(row).at(col); }

  std::string to_csv() const;
  /// {"columns": [...], "data": [[...], ...]}; the label column comes first.
  nlohmann::ordered_json to_json() const;

 private:
  std::vector<std::string> columns_;
  std::string label_column_;
  std::vector<std::string> labels_;
  std::vector<std::vector<double>> data_;
};

std::string format_number(double v);
nlohmann::ordered_json json_number(double v);

}  // namespace settherm
