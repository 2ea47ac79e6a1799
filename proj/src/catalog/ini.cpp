/* Copyright 2026 The symkit Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "symkit/catalog/ini.hpp"

#include <fstream>

#include "symkit/error.hpp"

namespace symkit {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

const std::string* IniSection::find(const std::string& key) const {
  auto it = values.find(key);
  return it == values.end() ? nullptr : &it->second;
}

std::string IniSection::get(const std::string& key,
                            const std::string& fallback) const {
  const std::string* v = find(key);
  return v ? *v : fallback;
}

std::vector<IniSection> read_ini(std::istream& in, const std::string& origin) {
  std::vector<IniSection> out;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ParseError(origin + ":" + std::to_string(lineno) +
                             ": unterminated section header",
                         static_cast<int>(line.size()));
      }
      out.push_back({trim(line.substr(1, line.size() - 2)), lineno, {}});
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError(origin + ":" + std::to_string(lineno) +
                           ": expected key = value",
                       1);
    }
    if (out.empty()) {
      throw ParseError(origin + ":" + std::to_string(lineno) +
                           ": key outside a section",
                       1);
    }
    std::string key = trim(line.substr(0, eq));
    if (!out.back().values.emplace(key, trim(line.substr(eq + 1))).second) {
      throw ParseError(origin + ":" + std::to_string(lineno) +
                           ": duplicate key '" + key + "'",
                       1);
    }
  }
  return out;
}

std::vector<IniSection> read_ini_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw NotFound("cannot open " + path);
  return read_ini(in, path);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    std::string item = trim(s.substr(start, comma - start));
    if (!item.empty()) out.push_back(item);
    start = comma + 1;
  }
  return out;
}

}  // namespace symkit
