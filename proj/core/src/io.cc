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

#include "opcost/io.h"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "opcost/error.h"

namespace opcost {
namespace {

std::string Trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> SplitCells(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream stream(line);
  std::string cell;
  while (std::getline(stream, cell, ',')) cells.push_back(Trim(cell));
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

double ParseCell(const std::string& cell, const std::string& where) {
  if (cell == "nan" || cell == "NaN" || cell == "NAN") {
    return std::numeric_limits<double>::quiet_NaN();
  }
  Require(!cell.empty(), ErrorCode::kParse, where + ": empty cell");
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(cell.c_str(), &end);
  Require(end != nullptr && *end == '\0' && errno != ERANGE, ErrorCode::kParse,
          where + ": '" + cell + "' is not a number");
  return value;
}

}  // namespace

int Table::Column(const std::string& name) const {
  for (size_t j = 0; j < header.size(); ++j) {
    if (header[j] == name) return static_cast<int>(j);
  }
  return -1;
}

std::string FormatNumber(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

Table ParseTable(std::istream& in, const std::string& source_name) {
  Table table;
  std::vector<std::vector<double>> rows;
  std::string line;
  int line_number = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    const std::string where = source_name + ":" + std::to_string(line_number);
    std::vector<std::string> cells = SplitCells(trimmed);
    if (!have_header) {
      for (const std::string& name : cells) {
        Require(!name.empty(), ErrorCode::kParse, where + ": empty column name");
      }
      table.header = std::move(cells);
      have_header = true;
      continue;
    }
    Require(cells.size() == table.header.size(), ErrorCode::kParse,
            where + ": expected " + std::to_string(table.header.size()) + " cells, found " +
                std::to_string(cells.size()));
    std::vector<double> row;
    for (const std::string& cell : cells) row.push_back(ParseCell(cell, where));
    rows.push_back(std::move(row));
  }
  Require(have_header, ErrorCode::kParse, source_name + ": missing header line");
  table.values = Matrix(rows.size(), table.header.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < rows[i].size(); ++j) table.values(i, j) = rows[i][j];
  }
  return table;
}

Table LoadTable(const std::string& path) {
  std::ifstream in(path);
  Require(in.good(), ErrorCode::kParse, "cannot open '" + path + "'");
  return ParseTable(in, path);
}

void WriteTable(std::ostream& out, const Table& table) {
  for (size_t j = 0; j < table.header.size(); ++j) {
    out << (j ? "," : "") << table.header[j];
  }
  out << '\n';
  for (Eigen::Index i = 0; i < table.values.rows(); ++i) {
    for (Eigen::Index j = 0; j < table.values.cols(); ++j) {
      out << (j ? "," : "") << FormatNumber(table.values(i, j));
    }
    out << '\n';
  }
}

void SaveTable(const std::string& path, const Table& table) {
  std::ofstream out(path);
  Require(out.good(), ErrorCode::kInvalidInput, "cannot write '" + path + "'");
  WriteTable(out, table);
  Require(out.good(), ErrorCode::kInvalidInput, "failed writing '" + path + "'");
}

Dataset LoadDataset(const std::string& path) {
  const Table table = LoadTable(path);
  const int label = table.Column("y");
  Require(label >= 0, ErrorCode::kParse, path + ": no label column named 'y'");
  Require(table.values.rows() >= 1, ErrorCode::kParse, path + ": no data rows");
  Require(table.header.size() >= 2, ErrorCode::kParse, path + ": no feature columns");
  Require(table.values.allFinite(), ErrorCode::kParse, path + ": non-finite entries");
  const Eigen::Index p = static_cast<Eigen::Index>(table.header.size()) - 1;
  Matrix X(table.values.rows(), p);
  std::vector<std::string> names;
  Eigen::Index out = 0;
  for (Eigen::Index j = 0; j < table.values.cols(); ++j) {
    if (j == label) continue;
    X.col(out++) = table.values.col(j);
    names.push_back(table.header[j]);
  }
  return Dataset::Make(std::move(X), table.values.col(label), std::move(names));
}

UnlabeledSet LoadUnlabeled(const std::string& path) {
  const Table table = LoadTable(path);
  Require(table.Column("y") < 0, ErrorCode::kParse,
          path + ": unlabeled data must not have a 'y' column");
  Require(table.values.rows() >= 1, ErrorCode::kParse, path + ": no data rows");
  Require(table.values.allFinite(), ErrorCode::kParse, path + ": non-finite entries");
  return UnlabeledSet::Make(table.values);
}

Table DatasetTable(const Dataset& data) {
  Table table;
  table.header = data.feature_names;
  table.header.push_back("y");
  table.values = Matrix(data.n(), data.p() + 1);
  table.values.leftCols(data.p()) = data.X;
  table.values.col(data.p()) = data.y;
  return table;
}

Table UnlabeledTable(const UnlabeledSet& unlabeled,
                     const std::vector<std::string>& feature_names) {
  Table table;
  if (feature_names.empty()) {
    for (int j = 0; j < unlabeled.p(); ++j) table.header.push_back("x" + std::to_string(j + 1));
  } else {
    table.header = feature_names;
  }
  table.values = unlabeled.X;
  return table;
}

}  // namespace opcost
