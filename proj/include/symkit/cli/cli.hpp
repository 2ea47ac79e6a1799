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

// Command-line front end. execute() never exits the process; it returns the
// report text and the exit code (0 pass, 1 verification failure, 2 usage
// error, 3 file not found).

#pragma once

#include <string>
#include <vector>

namespace symkit::cli {

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2, kFileMissing = 3 };

struct RunReport {
  std::string command;  // echo of the arguments
  std::string body;     // report, written to stdout or --output
  std::string errors;   // diagnostics for stderr
  int exit_code = kPass;
  double wall_seconds = 0;
};

// argv without the program name.
RunReport execute(const std::vector<std::string>& argv);

}  // namespace symkit::cli
