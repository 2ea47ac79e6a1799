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

#include <unordered_map>

#include "symkit/expr/expr.hpp"

namespace symkit {

using NumericBindings = std::unordered_map<Symbol, double, SymbolHash>;

// Double-precision value of `e`. Every denominator factor must satisfy
// |value| >= guard and every sqrt radicand must be >= guard; otherwise
// GuardViolation names the offending subexpression. pi needs no binding.
double eval_numeric(const Expr& e, const NumericBindings& bindings,
                    double guard = 0.0);

// Binds by name: "u" -> 2.0 etc. Names resolve through the standard scope.
NumericBindings bind_by_name(
    const std::unordered_map<std::string, double>& by_name);

}  // namespace symkit
