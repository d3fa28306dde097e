// Copyright 2026 The opcost Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Comma-separated numeric tables: first line is a header, '#' lines are
// comments, numbers are written with 17 significant digits so a write/read
// round trip is exact.

#ifndef OPCOST_IO_H_
#define OPCOST_IO_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "opcost/model.h"

namespace opcost {

struct Table {
  std::vector<std::string> header;
  Matrix values;

  // Index of `name` in the header, or -1.
  int Column(const std::string& name) const;
};

std::string FormatNumber(double value);

// Accepts "nan" cells. Throws kParse with the line number on malformed input.
Table ParseTable(std::istream& in, const std::string& source_name);
Table LoadTable(const std::string& path);

void WriteTable(std::ostream& out, const Table& table);
void SaveTable(const std::string& path, const Table& table);

// Label column must be named "y"; every other column is a feature.
Dataset LoadDataset(const std::string& path);
// A "y" column is rejected.
UnlabeledSet LoadUnlabeled(const std::string& path);

Table DatasetTable(const Dataset& data);
Table UnlabeledTable(const UnlabeledSet& unlabeled,
                     const std::vector<std::string>& feature_names = {});

}  // namespace opcost

#endif  // OPCOST_IO_H_
