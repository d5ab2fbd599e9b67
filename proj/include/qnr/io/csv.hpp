#pragma once

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "qnr/errors.hpp"
#include "qnr/real_matrix.hpp"
#include "qnr/regress/linear.hpp"

namespace qnr::io {

// A parsed CSV file: header names plus numeric rows.  Data rows are numbered
// from 1 in error messages, the header row not counted.  Raw cell text is
// kept so consumers that need exact values can reparse without a double
// round trip.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  std::vector<std::vector<std::string>> raw;

  std::size_t n_rows() const { return rows.size(); }
  std::size_t n_cols() const { return header.size(); }
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string> split_comma(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

inline double parse_cell(const std::string& cell, std::size_t row, const std::string& column) {
  double value = 0.0;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc{} || res.ptr != end || !std::isfinite(value))
    throw CsvError("csv: non-numeric cell \"" + cell + "\" at row " + std::to_string(row) +
                   ", column " + column);
  return value;
}

}  // namespace detail

inline CsvTable read_csv(std::istream& in, const std::string& origin = "<stream>") {
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw CsvError("csv: " + origin + " is empty, header row required");
  table.header = detail::split_comma(line);
  if (table.header.empty() || (table.header.size() == 1 && table.header[0].empty()))
    throw CsvError("csv: " + origin + " has an empty header row");

  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (detail::trim(line).empty()) continue;
    ++row;
    const auto cells = detail::split_comma(line);
    if (cells.size() != table.header.size())
      throw CsvError("csv: row " + std::to_string(row) + " has " + std::to_string(cells.size()) +
                     " cells, expected " + std::to_string(table.header.size()));
    std::vector<double> values;
    values.reserve(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c)
      values.push_back(detail::parse_cell(cells[c], row, table.header[c]));
    table.rows.push_back(std::move(values));
    table.raw.push_back(cells);
  }
  if (table.rows.empty()) throw CsvError("csv: " + origin + " contains no data rows");
  return table;
}

inline CsvTable read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CsvError("csv: cannot open " + path);
  return read_csv(in, path);
}

// Resolves a column reference that is either a header name or a 0-based index.
inline std::size_t resolve_column(const CsvTable& table, const std::string& y_column) {
  for (std::size_t c = 0; c < table.header.size(); ++c)
    if (table.header[c] == y_column) return c;
  std::size_t index = 0;
  const auto res =
      std::from_chars(y_column.data(), y_column.data() + y_column.size(), index);
  if (res.ec == std::errc{} && res.ptr == y_column.data() + y_column.size() &&
      index < table.header.size())
    return index;
  throw ConfigError("config: no column \"" + y_column + "\" in CSV header");
}

// Dataset for the global linear model: every non-response column, in header
// order, becomes a predictor.
struct NamedDataset {
  regress::Dataset data;
  std::vector<std::string> predictor_names;
  std::string response_name;
};

inline NamedDataset to_dataset(const CsvTable& table, const std::string& y_column) {
  const std::size_t yc = resolve_column(table, y_column);
  if (table.n_cols() < 2)
    throw ConfigError("config: need at least one predictor column besides the response");

  const std::size_t n = table.n_rows(), p = table.n_cols() - 1;
  RealMatrix design(n, p);
  std::vector<double> response(n);
  std::vector<std::string> names;
  for (std::size_t c = 0, j = 0; c < table.n_cols(); ++c) {
    if (c == yc) continue;
    names.push_back(table.header[c]);
    for (std::size_t i = 0; i < n; ++i) design.at(i, j) = table.rows[i][c];
    ++j;
  }
  for (std::size_t i = 0; i < n; ++i) response[i] = table.rows[i][yc];
  return {regress::Dataset(design, std::move(response)), std::move(names), table.header[yc]};
}

// Single-predictor view for local regression; requires exactly one column
// besides the response.
struct XySeries {
  std::vector<double> xs;
  std::vector<double> ys;
  std::string x_name;
  std::string y_name;
};

inline XySeries to_xy(const CsvTable& table, const std::string& y_column) {
  const std::size_t yc = resolve_column(table, y_column);
  if (table.n_cols() != 2)
    throw ConfigError("config: local regression needs exactly one predictor column, CSV has " +
                      std::to_string(table.n_cols() == 0 ? 0 : table.n_cols() - 1));
  const std::size_t xc = yc == 0 ? 1 : 0;
  XySeries s;
  s.x_name = table.header[xc];
  s.y_name = table.header[yc];
  for (const auto& row : table.rows) {
    s.xs.push_back(row[xc]);
    s.ys.push_back(row[yc]);
  }
  return s;
}

// Square or rectangular numeric matrix from all CSV columns, for the rref
// subcommand.
inline std::vector<std::vector<double>> to_matrix(const CsvTable& table) { return table.rows; }

}  // namespace qnr::io
