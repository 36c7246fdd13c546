// Copyright 2026 The WLC Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wlc/scan_io.h"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "wlc/error.h"
#include "wlc/parse.h"

namespace wlc {

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

void write_comment_header(std::ostream& os,
                          const std::vector<std::pair<std::string, std::string>>& entries) {
  for (const auto& [k, v] : entries) os << "# " << k << ": " << v << '\n';
}

void write_csv(std::ostream& os, const ScanTable& table) {
  for (std::size_t k = 0; k < table.columns.size(); ++k)
    os << (k ? "," : "") << table.columns[k];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << format_double(row[k]);
    os << '\n';
  }
}

void write_mesh(std::ostream& os, const ScanTable& table) {
  os << "# columns:";
  for (const std::string& c : table.columns) os << ' ' << c;
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << format_double(row[k]);
    os << '\n';
  }
}

namespace {

std::vector<double> parse_row(std::string_view line, bool csv, std::size_t line_no) {
  std::vector<double> row;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    std::size_t end;
    if (csv) {
      end = line.find(',', pos);
      if (end == std::string_view::npos) end = line.size();
    } else {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
      if (pos == line.size()) break;
      end = line.find_first_of(" \t", pos);
      if (end == std::string_view::npos) end = line.size();
    }
    const std::string cell(trim(line.substr(pos, end - pos)));
    double v = 0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size())
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": bad number '" +
                                         cell + "'");
    row.push_back(v);
    pos = end + 1;
  }
  return row;
}

}  // namespace

ScanTable load_scan(std::istream& is) {
  ScanTable t;
  std::string raw;
  std::size_t line_no = 0;
  bool have_columns = false;
  while (std::getline(is, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      constexpr std::string_view kCols = "# columns:";
      if (!have_columns && line.substr(0, kCols.size()) == kCols) {
        std::istringstream names{std::string(line.substr(kCols.size()))};
        for (std::string n; names >> n;) t.columns.push_back(n);
        have_columns = true;
      }
      continue;
    }
    const bool csv = line.find(',') != std::string_view::npos;
    if (!have_columns && csv) {
      for (std::string_view c : split_top_level(line, ',')) t.columns.emplace_back(c);
      have_columns = true;
      continue;
    }
    t.rows.push_back(parse_row(line, csv, line_no));
    if (have_columns && t.rows.back().size() != t.columns.size())
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected " +
                                         std::to_string(t.columns.size()) + " values");
  }
  return t;
}

nlohmann::ordered_json to_json(const InvarianceReport& r) {
  nlohmann::ordered_json j;
  j["function"] = r.function;
  j["group"] = r.group;
  j["samples"] = r.samples;
  j["elements"] = r.elements;
  j["seed"] = r.seed;
  j["tol"] = r.tol;
  j["max_abs_deviation"] = r.max_abs_deviation;
  j["worst_point"] = {r.worst_point.z().real(), r.worst_point.z().imag(), r.worst_point.t()};
  j["worst_word"] = r.worst_word;
  j["passed"] = r.passed();
  return j;
}

}  // namespace wlc
