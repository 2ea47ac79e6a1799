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

// Recursive-descent parser for the expression grammar:
//
//   expression ::= term (('+'|'-') term)*
//   term       ::= factor (('*'|'/') factor)*
//   factor     ::= base ('^' integer)?
//   base       ::= number | identifier | call | '(' expression ')' | '-' base
//   call       ::= ('exp'|'sin'|'cos'|'sqrt') '(' expression ')'
//
// Numbers are integers, decimals (converted exactly) or rationals "3/2".
// Extensions: a signed exponent "x^-1" and the call head "tan".

#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "symkit/expr/expr.hpp"

namespace symkit {

struct Scope {
  // Names resolved to opaque function symbols (e.g. "eta1_u").
  std::map<std::string, Symbol, std::less<>> functions;
  // Parameters accepted on top of the standard list.
  std::set<std::string, std::less<>> extra_parameters;

  // t, x, jet variables, pi, the standard parameter list and the alpha/lambda
  // families.
  static const Scope& standard();

  // Declares `base` with dependency mask `deps` plus all its derivatives up to
  // total order `max_order`, named base_txuv.
  void declare_function(const std::string& base, std::uint8_t deps,
                        int max_order = 2);
  bool is_parameter(std::string_view name) const;
};

Expr parse(std::string_view text, const Scope& scope = Scope::standard());

// Parses "k=v" expression bindings used on command lines and in data files.
SubstMap parse_bindings(const std::map<std::string, std::string>& kv,
                        const Scope& scope = Scope::standard());

}  // namespace symkit
