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

// Command-line front end. Each subcommand accepts --config <file>, one
// --<key> flag per config key it understands, and repeatable --set key=value.
// Command-line values override the config file.

#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "opcost/commands.h"
#include "opcost/config.h"

namespace {

struct SubcommandArgs {
  std::string config_path;
  std::vector<std::string> overrides;
  std::map<std::string, std::string> flags;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Operational-cost regularized regression and covering-number bounds"};
  app.require_subcommand(1);

  std::map<std::string, SubcommandArgs> args;
  const std::map<std::string, std::string> descriptions = {
      {"fit", "fit one model at a single C1"},
      {"sweep", "sweep C1 over a grid and report the cost range"},
      {"bound", "covering-number and generalization bound report"},
      {"count", "count integer points in a constrained l1 ball"},
      {"rocheck", "compare the pessimistic fit with the robust counterpart"},
      {"gen", "generate a synthetic scenario directory"}};
  for (const std::string& name : opcost::CommandNames()) {
    CLI::App* sub = app.add_subcommand(name, descriptions.at(name));
    SubcommandArgs& a = args[name];
    sub->add_option("--config", a.config_path, "key = value config file")
        ->check(CLI::ExistingFile);
    sub->add_option("--set", a.overrides, "override a config key (key=value)");
    for (const std::string& key : opcost::AllowedKeys(name)) {
      sub->add_option("--" + key, a.flags[key], "config key '" + key + "'");
    }
  }

  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  const CLI::App* sub = app.get_subcommands().front();
  const SubcommandArgs& a = args[command];
  try {
    opcost::KeyValueConfig config;
    std::string base_dir;
    if (!a.config_path.empty()) {
      config = opcost::KeyValueConfig::Load(a.config_path);
      base_dir = std::filesystem::path(a.config_path).parent_path().string();
    }
    for (const auto& [key, value] : a.flags) {
      if (sub->count("--" + key) > 0) config.Set(key, value);
    }
    for (const std::string& item : a.overrides) {
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) {
        std::cerr << "error: --set expects key=value, got '" << item << "'\n";
        return 1;
      }
      config.Set(item.substr(0, eq), item.substr(eq + 1));
    }
    return opcost::RunCommand(command, config, base_dir, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
