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

// Minimal INI reader: repeated section names allowed, order preserved,
// '#' and ';' start comment lines.

#pragma once

#include <istream>
#include <map>
#include <string>
#include <vector>

namespace symkit {

struct IniSection {
  std::string name;
  int line = 0;
  std::map<std::string, std::string> values;

  const std::string* find(const std::string& key) const;
  std::string get(const std::string& key, const std::string& fallback = "") const;
};

std::vector<IniSection> read_ini(std::istream& in, const std::string& origin = "<ini>");
std::vector<IniSection> read_ini_file(const std::string& path);

// Splits on commas, trimming blanks; empty items dropped.
std::vector<std::string> split_list(const std::string& s);
std::string trim(const std::string& s);

}  // namespace symkit
