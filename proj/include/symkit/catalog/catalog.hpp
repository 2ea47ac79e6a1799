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

// The classification tables as data: systems, restrictions, operator
// registry and equivalence substitutions, loaded from catalog.ini.

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symkit/catalog/ini.hpp"
#include "symkit/invariance/algebra.hpp"
#include "symkit/invariance/skt.hpp"
#include "symkit/invariance/transform.hpp"

namespace symkit {

// "lhs != rhs" or "lhs > rhs".
struct Restriction {
  enum class Op { kNotEqual, kGreater };
  std::string text;
  Expr lhs;
  Expr rhs;
  Op op = Op::kNotEqual;

  static Restriction parse(const std::string& text);
  // nullopt while the predicate is still symbolic under `b`.
  std::optional<bool> holds(const SubstMap& b) const;
};

struct CatalogEntry {
  int table = 0;
  int case_id = 0;
  SKTSystem system;
  std::vector<Restriction> restrictions;
  std::vector<std::string> operators;
  std::vector<std::string> substitutions;

  std::string id() const;  // "T1.3"
};

class Catalog {
 public:
  static Catalog load(const std::string& path);
  static Catalog from_sections(const std::vector<IniSection>& sections);
  // $SYMKIT_CATALOG, else the installed data file.
  static std::string default_path();

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry& find(int table, int case_id) const;

  bool has_operator(const std::string& name) const;
  // All encodings registered for `name`; the first is the printed one.
  const std::vector<VectorField>& candidates(const std::string& name) const;
  std::vector<std::string> operator_names() const;

  bool has_transform(const std::string& id) const;
  const PointTransformation& transform(const std::string& id) const;
  std::vector<std::string> transform_ids() const;

  // Keeps the entries accepted by `keep`.
  Catalog filtered(const std::function<bool(const CatalogEntry&)>& keep) const;

 private:
  std::vector<CatalogEntry> entries_;
  std::map<std::string, std::vector<VectorField>> operators_;
  std::map<std::string, PointTransformation> transforms_;
};

// Builds a point transformation from forward maps t*, x*, u*, v*.
PointTransformation make_transformation(const std::string& id,
                                        const Expr& t_star, const Expr& x_star,
                                        const Expr& u_star, const Expr& v_star);

struct Instance {
  SKTSystem system;
  std::vector<VectorField> operators;
  std::vector<std::string> notes;  // encoding choices
};

// Binds parameters and resolves operators. Throws DomainError when a
// restriction becomes decidably false, NotFound for an unknown case.
Instance instantiate(const Catalog& cat, int table, int case_id,
                     const SubstMap& bindings = {});

struct OperatorRow {
  std::string name;
  bool invariant = false;
  std::size_t witnesses = 0;
  std::size_t assumptions = 0;
  std::string note;
};

struct EntryResult {
  int table = 0;
  int case_id = 0;
  std::vector<OperatorRow> rows;
  bool trivial_present = false;
  bool closes = false;
  std::string closure;  // structure constants or failure
  bool pass() const;
};

struct ValidationReport {
  std::vector<EntryResult> entries;
  bool pass() const;
  std::string text() const;
  std::string csv() const;
};

ValidationReport validate_all(const Catalog& cat, bool parallel = true);
EntryResult validate_entry(const Catalog& cat, const CatalogEntry& e);

// Negative control: searches single sign flips (one system parameter, or
// one operator coefficient) until the verdict of the entry changes.
struct MutationResult {
  bool flipped = false;
  std::string description;
};
MutationResult mutation_control(const Catalog& cat, const CatalogEntry& e);

TransformResult apply_substitution(const SKTSystem& sys,
                                   const PointTransformation& T);

}  // namespace symkit
