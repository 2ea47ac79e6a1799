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

// Point transformations of the form
//
//   t* = T(t),  x* = k x,  (u*, v*) = A(t) (u, v) + b(t)
//
// with T either affine or a*exp(c t), and their action on systems and
// vector fields. Stars are dropped on the image.

#pragma once

#include <array>
#include <optional>
#include <string>

#include "symkit/invariance/skt.hpp"

namespace symkit {

struct PointTransformation {
  std::string id;
  Expr t_map = Expr(sym::t());  // T(t)
  Expr x_scale = Expr(1);       // k
  std::array<std::array<Expr, 2>, 2> A = {{{Expr(1), Expr(0)}, {Expr(0), Expr(1)}}};
  std::array<Expr, 2> b = {Expr(0), Expr(0)};

  static PointTransformation identity();
  // (u*, v*) = A (u, v) + b with constant entries.
  static PointTransformation linear(Expr a11, Expr a12, Expr a21, Expr a22,
                                    Expr b1 = Expr(0), Expr b2 = Expr(0));

  Expr det() const;
  // Inverse of T when T is affine in t.
  std::optional<Expr> t_inverse() const;
  // Forward map of (u, v): [u*, v*].
  std::array<Expr, 2> forward(const Expr& u, const Expr& v) const;
  // (u, v) in terms of (t, u*, v*); symbols u, v stand for u*, v*.
  std::array<Expr, 2> backward() const;

  // Inverse transformation when T is affine.
  PointTransformation inverse() const;
  std::string str() const;
};

struct TransformResult {
  EvolutionSystem raw;           // image, rhs in the starred variables
  std::optional<SKTSystem> skt;  // present when the image fits the template
  std::string note;              // offending term when it does not
};

// Throws DomainError for a singular (u, v) block, or for an image that still
// depends on t when T is not affine in t.
TransformResult transform_evolution(const EvolutionSystem& sys,
                                    const PointTransformation& T);
TransformResult transform_system(const SKTSystem& sys,
                                 const PointTransformation& T);

// Reads off the twelve parameters; nullopt (with `why` set) if the rhs are
// not of template form.
std::optional<SKTSystem> fit_template(const EvolutionSystem& sys,
                                      std::string* why = nullptr);

// Image of a vector field under T, in the starred coordinates. Requires T
// affine in t whenever the image depends on t.
VectorField pushforward(const VectorField& X, const PointTransformation& T);

}  // namespace symkit
