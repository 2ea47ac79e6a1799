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

#include "symkit/catalog/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <sstream>

#include "symkit/expr/parse.hpp"

#ifndef SYMKIT_DATA_DIR
#define SYMKIT_DATA_DIR "data"
#endif

namespace symkit {

namespace {

constexpr const char* kGate = "d12^2+d21^2 != 0";

int to_int(const IniSection& s, const char* key) {
  const std::string* v = s.find(key);
  if (!v) {
    throw ParseError("catalog line " + std::to_string(s.line) + ": missing " +
                         key,
                     1);
  }
  try {
    return std::stoi(*v);
  } catch (const std::exception&) {
    throw ParseError("catalog line " + std::to_string(s.line) + ": bad " + key,
                     1);
  }
}

bool is_trivial(const std::string& name) {
  return name == "P_t" || name == "P_x";
}

bool coordinate_free(const Expr& e, std::initializer_list<Symbol> syms) {
  for (Symbol s : syms) {
    if (e.depends_on(s)) return false;
  }
  return true;
}

}  // namespace

Restriction Restriction::parse(const std::string& text) {
  Restriction r;
  r.text = trim(text);
  std::size_t pos = r.text.find("!=");
  std::size_t len = 2;
  if (pos == std::string::npos) {
    pos = r.text.find('>');
    len = 1;
    r.op = Op::kGreater;
  }
  if (pos == std::string::npos) {
    throw ParseError("restriction '" + r.text + "': expected != or >", 1);
  }
  r.lhs = symkit::parse(r.text.substr(0, pos));
  r.rhs = symkit::parse(r.text.substr(pos + len));
  return r;
}

std::optional<bool> Restriction::holds(const SubstMap& b) const {
  Expr d = substitute(lhs - rhs, b);
  if (!d.is_constant()) return std::nullopt;
  if (op == Op::kNotEqual) return !d.is_zero();
  return d.constant_value() > 0;
}

std::string CatalogEntry::id() const {
  return "T" + std::to_string(table) + "." + std::to_string(case_id);
}

std::string Catalog::default_path() {
  if (const char* env = std::getenv("SYMKIT_CATALOG")) return env;
  return std::string(SYMKIT_DATA_DIR) + "/catalog.ini";
}

Catalog Catalog::load(const std::string& path) {
  return from_sections(read_ini_file(path));
}

PointTransformation make_transformation(const std::string& id,
                                        const Expr& t_star, const Expr& x_star,
                                        const Expr& u_star,
                                        const Expr& v_star) {
  Symbol t = sym::t(), x = sym::x(), u = sym::u(), v = sym::v();
  PointTransformation T;
  T.id = id;
  T.t_map = t_star;
  if (!coordinate_free(t_star, {x, u, v})) {
    throw DomainError(id + ": t* may depend on t only");
  }
  T.x_scale = diff(x_star, x);
  if (!coordinate_free(T.x_scale, {t, x, u, v}) ||
      !(x_star - T.x_scale * Expr(x)).is_zero()) {
    throw DomainError(id + ": x* must be a constant multiple of x");
  }
  const Expr* star[2] = {&u_star, &v_star};
  for (int i = 0; i < 2; ++i) {
    T.A[i][0] = diff(*star[i], u);
    T.A[i][1] = diff(*star[i], v);
    T.b[i] = *star[i] - T.A[i][0] * Expr(u) - T.A[i][1] * Expr(v);
    for (const Expr* e : {&T.A[i][0], &T.A[i][1], &T.b[i]}) {
      if (!coordinate_free(*e, {x, u, v})) {
        throw DomainError(id + ": (u*, v*) must be affine in (u, v)");
      }
    }
  }
  return T;
}

Catalog Catalog::from_sections(const std::vector<IniSection>& sections) {
  Catalog cat;
  for (const IniSection& s : sections) {
    if (s.name == "entry") {
      CatalogEntry e;
      e.table = to_int(s, "table");
      e.case_id = to_int(s, "case");
      std::map<std::string, Expr> params;
      for (const char* p : SKTSystem::parameter_names()) {
        if (const std::string* v = s.find(p)) params[p] = parse(*v);
      }
      e.system = SKTSystem::from_map(params);
      for (const auto& r : split_list(s.get("restrictions"))) {
        e.restrictions.push_back(Restriction::parse(r));
      }
      e.system.restrictions.push_back(kGate);
      for (const auto& r : e.restrictions) e.system.restrictions.push_back(r.text);
      e.operators = split_list(s.get("operators"));
      e.substitutions = split_list(s.get("substitutions"));
      cat.entries_.push_back(std::move(e));
    } else if (s.name.rfind("operator.", 0) == 0) {
      std::string name = s.name.substr(9);
      std::string base = name.substr(0, name.find('#'));
      VectorField X = VectorField::parse_text(s.values);
      X.name = base;
      cat.operators_[base].push_back(std::move(X));
    } else if (s.name.rfind("transform.", 0) == 0) {
      std::string id = s.name.substr(10);
      auto get = [&](const char* k, const char* fallback) {
        return parse(s.get(k, fallback));
      };
      cat.transforms_[id] = make_transformation(
          id, get("t", "t"), get("x", "x"), get("u", "u"), get("v", "v"));
    } else {
      throw ParseError("catalog line " + std::to_string(s.line) +
                           ": unknown section [" + s.name + "]",
                       1);
    }
  }
  for (const auto& e : cat.entries_) {
    for (const auto& op : e.operators) {
      if (!cat.has_operator(op)) {
        throw NotFound(e.id() + ": unknown operator " + op);
      }
    }
    for (const auto& t : e.substitutions) {
      if (!cat.has_transform(t)) {
        throw NotFound(e.id() + ": unknown substitution " + t);
      }
    }
  }
  std::stable_sort(cat.entries_.begin(), cat.entries_.end(),
                   [](const CatalogEntry& a, const CatalogEntry& b) {
                     return std::pair(a.table, a.case_id) <
                            std::pair(b.table, b.case_id);
                   });
  return cat;
}

const CatalogEntry& Catalog::find(int table, int case_id) const {
  for (const auto& e : entries_) {
    if (e.table == table && e.case_id == case_id) return e;
  }
  throw NotFound("no catalog entry for table " + std::to_string(table) +
                 " case " + std::to_string(case_id));
}

bool Catalog::has_operator(const std::string& name) const {
  return operators_.count(name) != 0;
}

const std::vector<VectorField>& Catalog::candidates(
    const std::string& name) const {
  auto it = operators_.find(name);
  if (it == operators_.end()) throw NotFound("unknown operator " + name);
  return it->second;
}

std::vector<std::string> Catalog::operator_names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : operators_) out.push_back(k);
  return out;
}

bool Catalog::has_transform(const std::string& id) const {
  return transforms_.count(id) != 0;
}

const PointTransformation& Catalog::transform(const std::string& id) const {
  auto it = transforms_.find(id);
  if (it == transforms_.end()) throw NotFound("unknown substitution " + id);
  return it->second;
}

std::vector<std::string> Catalog::transform_ids() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : transforms_) out.push_back(k);
  return out;
}

Catalog Catalog::filtered(
    const std::function<bool(const CatalogEntry&)>& keep) const {
  Catalog c = *this;
  c.entries_.clear();
  for (const auto& e : entries_) {
    if (keep(e)) c.entries_.push_back(e);
  }
  return c;
}

namespace {

// First candidate encoding that leaves the system invariant.
std::pair<VectorField, std::string> resolve(const Catalog& cat,
                                            const std::string& name,
                                            const SKTSystem& sys,
                                            const SubstMap& bindings) {
  const auto& cands = cat.candidates(name);
  auto bind = [&](const VectorField& X) {
    if (bindings.empty()) return X;
    VectorField Y{substitute(X.xi0, bindings), substitute(X.xi1, bindings),
                  substitute(X.eta1, bindings), substitute(X.eta2, bindings),
                  X.name};
    return Y;
  };
  if (cands.size() == 1) return {bind(cands[0]), ""};
  for (std::size_t k = 0; k < cands.size(); ++k) {
    VectorField X = bind(cands[k]);
    if (check_invariance(sys, X).invariant) {
      std::string note = name + ": encoding " + std::to_string(k + 1) + " of " +
                         std::to_string(cands.size()) + " selected";
      if (k > 0) note += " (printed encoding is not invariant)";
      return {X, note};
    }
  }
  return {bind(cands[0]), name + ": no encoding is invariant"};
}

}  // namespace

Instance instantiate(const Catalog& cat, int table, int case_id,
                     const SubstMap& bindings) {
  const CatalogEntry& e = cat.find(table, case_id);
  for (const auto& r : e.restrictions) {
    auto ok = r.holds(bindings);
    if (ok && !*ok) {
      throw DomainError(e.id() + ": binding violates restriction " + r.text);
    }
  }
  Instance inst;
  inst.system = e.system.substituted(bindings);
  for (const auto& name : e.operators) {
    auto [X, note] = resolve(cat, name, inst.system, bindings);
    inst.operators.push_back(std::move(X));
    if (!note.empty()) inst.notes.push_back(note);
  }
  return inst;
}

bool EntryResult::pass() const {
  if (!trivial_present || !closes) return false;
  return std::all_of(rows.begin(), rows.end(),
                     [](const OperatorRow& r) { return r.invariant; });
}

EntryResult validate_entry(const Catalog& cat, const CatalogEntry& e) {
  EntryResult res;
  res.table = e.table;
  res.case_id = e.case_id;
  Instance inst = instantiate(cat, e.table, e.case_id);
  bool has_t = false, has_x = false;
  for (std::size_t k = 0; k < inst.operators.size(); ++k) {
    const VectorField& X = inst.operators[k];
    Verdict v = check_invariance(inst.system, X);
    OperatorRow row;
    row.name = e.operators[k];
    row.invariant = v.invariant;
    row.witnesses = v.witnesses.size();
    row.assumptions = v.assumptions.size();
    for (const auto& n : inst.notes) {
      if (n.rfind(row.name + ":", 0) == 0) row.note = n;
    }
    has_t = has_t || row.name == "P_t";
    has_x = has_x || row.name == "P_x";
    res.rows.push_back(std::move(row));
  }
  res.trivial_present = has_t && has_x;
  ClosureReport cr = closure_check(inst.operators);
  res.closes = cr.closes;
  res.closure = cr.str(inst.operators);
  return res;
}

ValidationReport validate_all(const Catalog& cat, bool parallel) {
  ValidationReport rep;
  if (!parallel) {
    for (const auto& e : cat.entries()) rep.entries.push_back(validate_entry(cat, e));
    return rep;
  }
  std::vector<std::future<EntryResult>> jobs;
  for (const auto& e : cat.entries()) {
    jobs.push_back(std::async(std::launch::async,
                              [&cat, &e] { return validate_entry(cat, e); }));
  }
  for (auto& j : jobs) rep.entries.push_back(j.get());
  return rep;
}

bool ValidationReport::pass() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const EntryResult& e) { return e.pass(); });
}

std::string ValidationReport::text() const {
  std::ostringstream os;
  int passed = 0;
  for (const auto& e : entries) {
    os << "T" << e.table << "." << e.case_id << "  "
       << (e.pass() ? "PASS" : "FAIL") << "  dim=" << e.rows.size() << "  ";
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
      const auto& r = e.rows[k];
      os << (k ? ", " : "") << r.name << (r.invariant ? "" : "[x]");
    }
    if (!e.trivial_present) os << "  (trivial operators missing)";
    if (!e.closes) os << "  (algebra does not close)";
    os << "\n";
    for (const auto& r : e.rows) {
      if (!r.note.empty()) os << "    note: " << r.note << "\n";
      if (!r.invariant) {
        os << "    " << r.name << ": " << r.witnesses << " nonzero coefficient(s)\n";
      }
    }
    passed += e.pass();
  }
  os << passed << "/" << entries.size() << " entries pass\n";
  return os.str();
}

std::string ValidationReport::csv() const {
  std::ostringstream os;
  os << "table,case,operator,status,witnesses,assumptions\n";
  for (const auto& e : entries) {
    for (const auto& r : e.rows) {
      os << e.table << "," << e.case_id << "," << r.name << ","
         << (r.invariant ? "invariant" : "not-invariant") << "," << r.witnesses
         << "," << r.assumptions << "\n";
    }
  }
  return os.str();
}

MutationResult mutation_control(const Catalog& cat, const CatalogEntry& e) {
  Instance inst = instantiate(cat, e.table, e.case_id);
  auto all_invariant = [&](const SKTSystem& s,
                           const std::vector<VectorField>& ops) {
    for (const auto& X : ops) {
      if (!check_invariance(s, X).invariant) return false;
    }
    return true;
  };
  // Parameter sign flips.
  const auto& names = SKTSystem::parameter_names();
  for (int i = 0; i < 12; ++i) {
    if (inst.system.params()[i].is_zero()) continue;
    SKTSystem s = inst.system;
    s.set(names[i], -s.params()[i]);
    if (!all_invariant(s, inst.operators)) {
      return {true, std::string("negated ") + names[i]};
    }
  }
  // Operator coefficient sign flips.
  for (std::size_t k = 0; k < inst.operators.size(); ++k) {
    if (is_trivial(e.operators[k])) continue;
    for (int c = 0; c < 4; ++c) {
      if (inst.operators[k].coeffs()[c]->is_zero()) continue;
      std::vector<VectorField> ops = inst.operators;
      Expr* slot[4] = {&ops[k].xi0, &ops[k].xi1, &ops[k].eta1, &ops[k].eta2};
      *slot[c] = -*slot[c];
      if (!all_invariant(inst.system, ops)) {
        static const char* kComp[4] = {"xi0", "xi1", "eta1", "eta2"};
        return {true, "negated " + std::string(kComp[c]) + " of " +
                          e.operators[k]};
      }
    }
  }
  return {false, "no single sign flip changes the verdict"};
}

TransformResult apply_substitution(const SKTSystem& sys,
                                   const PointTransformation& T) {
  return transform_system(sys, T);
}

}  // namespace symkit
