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

// Flat "key = value" configuration files. '#' starts a comment; keys are
// unique; list values are comma separated.

#ifndef OPCOST_CONFIG_H_
#define OPCOST_CONFIG_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace opcost {

class KeyValueConfig {
 public:
  static KeyValueConfig Parse(std::istream& in, const std::string& source_name);
  static KeyValueConfig Load(const std::string& path);

  // Later values replace earlier ones.
  void Set(const std::string& key, const std::string& value);
  void Merge(const KeyValueConfig& other);

  bool Has(const std::string& key) const { return values_.count(key) > 0; }
  const std::map<std::string, std::string>& values() const { return values_; }

  std::string GetString(const std::string& key, const std::string& fallback) const;
  std::string RequireString(const std::string& key) const;
  double GetDouble(const std::string& key, double fallback) const;
  double RequireDouble(const std::string& key) const;
  std::int64_t GetInt(const std::string& key, std::int64_t fallback) const;
  std::int64_t RequireInt(const std::string& key) const;
  bool GetBool(const std::string& key, bool fallback) const;
  std::vector<double> GetDoubleList(const std::string& key) const;

  // Throws kParse naming the first key not in `allowed`.
  void RejectUnknown(const std::set<std::string>& allowed) const;

 private:
  std::map<std::string, std::string> values_;
};

double ParseDouble(const std::string& text, const std::string& what);
std::int64_t ParseInt(const std::string& text, const std::string& what);
std::vector<std::string> SplitList(const std::string& text, char separator);

}  // namespace opcost

#endif  // OPCOST_CONFIG_H_
