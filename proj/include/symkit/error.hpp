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

#pragma once

#include <stdexcept>
#include <string>

namespace symkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int column)
      : Error(msg + " at column " + std::to_string(column)), column_(column) {}
  int column() const { return column_; }

 private:
  int column_;
};

// Unbound symbol or non-finite value during numeric evaluation.
class EvalError : public Error {
 public:
  using Error::Error;
};

// A denominator or radicand fell below the evaluation guard.
class GuardViolation : public EvalError {
 public:
  GuardViolation(const std::string& msg, std::string subexpr)
      : EvalError(msg + ": " + subexpr), subexpr_(std::move(subexpr)) {}
  const std::string& subexpression() const { return subexpr_; }

 private:
  std::string subexpr_;
};

// Input outside the supported domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

}  // namespace symkit
