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

#ifndef WLC_SCAN_IO_H_
#define WLC_SCAN_IO_H_

// Tabular point data (CSV and whitespace mesh), run headers, and JSON
// rendering of invariance reports.

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "wlc/embeddings.h"

namespace wlc {

struct ScanTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// "# <key>: <value>" lines. Values are single-line.
void write_comment_header(std::ostream& os,
                          const std::vector<std::pair<std::string, std::string>>& entries);

// Full-precision CSV with a header row.
void write_csv(std::ostream& os, const ScanTable& table);
// "# columns: a b c" followed by one whitespace-separated line per row.
void write_mesh(std::ostream& os, const ScanTable& table);

// Reads either format; '#' lines are comments except "# columns:".
// Throws kParse on malformed rows.
ScanTable load_scan(std::istream& is);

nlohmann::ordered_json to_json(const InvarianceReport& r);

// Shortest decimal text that round-trips.
std::string format_double(double v);

}  // namespace wlc

#endif  // WLC_SCAN_IO_H_
