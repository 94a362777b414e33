// Copyright 2026 The rqbench Authors.
//
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

#ifndef RQBENCH_CONFIG_HPP_
#define RQBENCH_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rqbench {

/// Invalid user configuration: bad flag value, unknown key, unknown agent or
/// environment. The CLI maps it to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ParamMap = std::map<std::string, std::string, std::less<>>;

/// Parses "J=20,kappa=1.0,n0=auto". Whitespace around keys and values is
/// ignored; an empty string gives an empty map.
ParamMap parse_param_list(std::string_view text);

/// Sections of a config file: "[name]" headers followed by key=value lines.
/// '#' and ';' start comments. Keys before the first header are an error.
using ConfigSections = std::map<std::string, ParamMap, std::less<>>;

ConfigSections parse_config_text(std::istream& in);
ConfigSections load_config_file(const std::filesystem::path& path);

// Typed lookups; each throws ConfigError naming the key on a malformed value.
double parse_double(std::string_view key, std::string_view value);
std::int64_t parse_int(std::string_view key, std::string_view value);
bool parse_bool(std::string_view key, std::string_view value);

}  // namespace rqbench

#endif  // RQBENCH_CONFIG_HPP_
