#include "settherm/table.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "settherm/error.hpp"

namespace settherm {

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::ordered_json json_number(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

Table::Table(std::vector<std::string> columns, std::string label_column)
    : columns_(std::move(columns)), label_column_(std::move(label_column)) {}

void Table::add_row(std::vector<double> values, std::string label) {
  if (values.size() != columns_.size()) {
    std::ostringstream msg;
    msg << "row has " << values.size() << " values, table has " << columns_.size() << " columns";
    throw InvalidArgument(msg.str());
  }
  data_.push_back(std::move(values));
  labels_.push_back(std::move(label));
}

std::string Table::to_csv() const {
  std::string out;
  if (has_labels()) out += label_column_ + ",";
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (c) out += ',';
    out += columns_[c];
  }
  out += '\n';
  for (std::size_t r = 0; r < data_.size(); ++r) {
    if (has_labels()) out += labels_[r] + ",";
    for (std::size_t c = 0; c < data_[r].size(); ++c) {
      if (c) out += ',';
      out += format_number(data_[r][c]);
    }
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json Table::to_json() const {
  nlohmann::ordered_json j;
  auto cols = nlohmann::ordered_json::array();
  if (has_labels()) cols.push_back(label_column_);
  for (const auto& c : columns_) cols.push_back(c);
  j["columns"] = std::move(cols);
  auto data = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < data_.size(); ++r) {
    auto row = nlohmann::ordered_json::array();
    if (has_labels()) row.push_back(labels_[r]);
    for (double v : data_[r]) row.push_back(json_number(v));
    data.push_back(std::move(row));
  }
  j["data"] = std::move(data);
  return j;
}

}  // namespace settherm
