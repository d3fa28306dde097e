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

#include "opcost/config.h"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <istream>
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

}  // namespace

double ParseDouble(const std::string& text, const std::string& what) {
  const std::string t = Trim(text);
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(t.c_str(), &end);
  Require(!t.empty() && *end == '\0' && errno != ERANGE, ErrorCode::kParse,
          what + ": '" + text + "' is not a number");
  return value;
}

std::int64_t ParseInt(const std::string& text, const std::string& what) {
  const std::string t = Trim(text);
  errno = 0;
  char* end = nullptr;
  const long long value = std::strtoll(t.c_str(), &end, 10);
  Require(!t.empty() && *end == '\0' && errno != ERANGE, ErrorCode::kParse,
          what + ": '" + text + "' is not an integer");
  return value;
}

std::vector<std::string> SplitList(const std::string& text, char separator) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, separator)) {
    part = Trim(part);
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

KeyValueConfig KeyValueConfig::Parse(std::istream& in, const std::string& source_name) {
  KeyValueConfig config;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = Trim(line);
    if (line.empty()) continue;
    const std::string where = source_name + ":" + std::to_string(line_number);
    const auto eq = line.find('=');
    Require(eq != std::string::npos, ErrorCode::kParse, where + ": expected 'key = value'");
    const std::string key = Trim(line.substr(0, eq));
    const std::string value = Trim(line.substr(eq + 1));
    Require(!key.empty(), ErrorCode::kParse, where + ": empty key");
    Require(!config.Has(key), ErrorCode::kParse, where + ": duplicate key '" + key + "'");
    config.values_[key] = value;
  }
  return config;
}

KeyValueConfig KeyValueConfig::Load(const std::string& path) {
  std::ifstream in(path);
  Require(in.good(), ErrorCode::kParse, "cannot open config '" + path + "'");
  return Parse(in, path);
}

void KeyValueConfig::Set(const std::string& key, const std::string& value) {
  values_[key] = value;
}

void KeyValueConfig::Merge(const KeyValueConfig& other) {
  for (const auto& [key, value] : other.values_) values_[key] = value;
}

std::string KeyValueConfig::GetString(const std::string& key,
                                      const std::string& fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

std::string KeyValueConfig::RequireString(const std::string& key) const {
  auto it = values_.find(key);
  Require(it != values_.end() && !it->second.empty(), ErrorCode::kInvalidInput,
          "missing required setting '" + key + "'");
  return it->second;
}

double KeyValueConfig::GetDouble(const std::string& key, double fallback) const {
  return Has(key) ? ParseDouble(values_.at(key), key) : fallback;
}

double KeyValueConfig::RequireDouble(const std::string& key) const {
  return ParseDouble(RequireString(key), key);
}

std::int64_t KeyValueConfig::GetInt(const std::string& key, std::int64_t fallback) const {
  return Has(key) ? ParseInt(values_.at(key), key) : fallback;
}

std::int64_t KeyValueConfig::RequireInt(const std::string& key) const {
  return ParseInt(RequireString(key), key);
}

bool KeyValueConfig::GetBool(const std::string& key, bool fallback) const {
  if (!Has(key)) return fallback;
  const std::string& v = values_.at(key);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  Fail(ErrorCode::kParse, key + ": '" + v + "' is not a boolean");
}

std::vector<double> KeyValueConfig::GetDoubleList(const std::string& key) const {
  std::vector<double> out;
  if (!Has(key)) return out;
  for (const std::string& part : SplitList(values_.at(key), ',')) {
    out.push_back(ParseDouble(part, key));
  }
  return out;
}

void KeyValueConfig::RejectUnknown(const std::set<std::string>& allowed) const {
  for (const auto& [key, value] : values_) {
    Require(allowed.count(key) > 0, ErrorCode::kParse, "unknown setting '" + key + "'");
  }
}

}  // namespace opcost
