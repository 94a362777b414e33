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

#include "rqbench/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>

namespace rqbench {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

void put_pair(ParamMap& out, std::string_view item, std::string_view context) {
  const auto eq = item.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError("expected key=value in " + std::string(context) + ", got '" +
                      std::string(item) + "'");
  }
  const std::string_view key = trim(item.substr(0, eq));
  const std::string_view value = trim(item.substr(eq + 1));
  if (key.empty()) throw ConfigError("empty key in " + std::string(context));
  out[std::string(key)] = std::string(value);
}

}  // namespace

ParamMap parse_param_list(std::string_view text) {
  ParamMap out;
  while (!trim(text).empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    if (!trim(item).empty()) put_pair(out, item, "parameter list");
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

ConfigSections parse_config_text(std::istream& in) {
  ConfigSections sections;
  ParamMap* current = nullptr;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto cut = line.find_first_of("#;"); cut != std::string_view::npos) {
      line = line.substr(0, cut);
    }
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("config line " + std::to_string(line_no) + ": unterminated section");
      }
      current = &sections[std::string(trim(line.substr(1, line.size() - 2)))];
      continue;
    }
    if (current == nullptr) {
      throw ConfigError("config line " + std::to_string(line_no) + ": key outside a section");
    }
    put_pair(*current, line, "config line " + std::to_string(line_no));
  }
  return sections;
}

ConfigSections load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  return parse_config_text(in);
}

double parse_double(std::string_view key, std::string_view value) {
  const std::string text(trim(value));
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (text.empty() || used != text.size() || !std::isfinite(out)) {
    throw ConfigError("'" + std::string(key) + "' expects a number, got '" + text + "'");
  }
  return out;
}

std::int64_t parse_int(std::string_view key, std::string_view value) {
  const std::string_view text = trim(value);
  std::int64_t out = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("'" + std::string(key) + "' expects an integer, got '" + std::string(text) +
                      "'");
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  std::string text(trim(value));
  std::transform(text.begin(), text.end(), text.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (text == "1" || text == "true" || text == "yes" || text == "on") return true;
  if (text == "0" || text == "false" || text == "no" || text == "off") return false;
  throw ConfigError("'" + std::string(key) + "' expects a boolean, got '" + text + "'");
}

}  // namespace rqbench
