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

#include "symkit/expr/symbol.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include "symkit/expr/expr.hpp"

namespace symkit {

namespace {

// Key prefixes fix the relative order of symbol kinds.
constexpr char kBaseTag = 'a';
constexpr char kJetTag = 'b';
constexpr char kFunctionTag = 'c';
constexpr char kParamTag = 'd';
constexpr char kConstTag = 'e';
constexpr char kAtomTag = 'f';

class SymbolTable {
 public:
  static SymbolTable& instance() {
    static SymbolTable table;
    return table;
  }

  const SymbolData* find(const std::string& key) {
    std::shared_lock lock(mu_);
    auto it = table_.find(key);
    return it == table_.end() ? nullptr : it->second.get();
  }

  // Inserts `d` unless its key is already present; returns the interned data.
  const SymbolData* insert(std::unique_ptr<SymbolData> d) {
    std::unique_lock lock(mu_);
    auto [it, inserted] = table_.try_emplace(d->key, nullptr);
    if (inserted) it->second = std::move(d);
    return it->second.get();
  }

  // Inserts a sin/cos pair atomically and links the partners.
  std::pair<const SymbolData*, const SymbolData*> insert_pair(
      std::unique_ptr<SymbolData> s, std::unique_ptr<SymbolData> c) {
    std::unique_lock lock(mu_);
    auto si = table_.find(s->key);
    if (si != table_.end()) {
      return {si->second.get(), si->second->partner};
    }
    s->partner = c.get();
    c->partner = s.get();
    const SymbolData* sp = s.get();
    const SymbolData* cp = c.get();
    table_.emplace(s->key, std::move(s));
    table_.emplace(c->key, std::move(c));
    return {sp, cp};
  }

 private:
  std::shared_mutex mu_;
  std::unordered_map<std::string, std::unique_ptr<SymbolData>> table_;
};

Symbol intern(SymbolKind kind, std::string name, std::string key) {
  auto& table = SymbolTable::instance();
  if (const SymbolData* d = table.find(key)) return Symbol(d);
  auto d = std::make_unique<SymbolData>();
  d->kind = kind;
  d->name = std::move(name);
  d->key = std::move(key);
  return Symbol(table.insert(std::move(d)));
}

std::string function_name(std::string_view base, std::array<int, 4> multi) {
  std::string name(base);
  static constexpr char kCoordChars[4] = {'t', 'x', 'u', 'v'};
  bool any = false;
  for (int c = 0; c < 4; ++c) {
    for (int k = 0; k < multi[c]; ++k) {
      if (!any) name += '_';
      any = true;
      name += kCoordChars[c];
    }
  }
  return name;
}

}  // namespace

const char* head_name(AtomHead h) {
  switch (h) {
    case AtomHead::kExp:
      return "exp";
    case AtomHead::kSin:
      return "sin";
    case AtomHead::kCos:
      return "cos";
    case AtomHead::kSqrt:
      return "sqrt";
  }
  return "?";
}

namespace sym {

Symbol base(std::string_view name) {
  if (name != "t" && name != "x") {
    throw std::invalid_argument("base variable must be t or x");
  }
  return intern(SymbolKind::kBase, std::string(name),
                std::string(1, kBaseTag) + std::string(name));
}

std::string jet_name(int component, int t_order, int x_order) {
  std::string n = component == 1 ? "u" : "v";
  if (t_order + x_order == 0) return n;
  n += '_';
  n.append(static_cast<std::size_t>(t_order), 't');
  n.append(static_cast<std::size_t>(x_order), 'x');
  return n;
}

Symbol jet(int component, int t_order, int x_order) {
  if ((component != 1 && component != 2) || t_order < 0 || x_order < 0 ||
      t_order + x_order > 2) {
    throw std::invalid_argument("jet variable outside second-order jet space");
  }
  std::string name = jet_name(component, t_order, x_order);
  // Order key: total order, then component, then t-order.
  std::string key{kJetTag, static_cast<char>('0' + t_order + x_order),
                  static_cast<char>('0' + component),
                  static_cast<char>('0' + t_order)};
  auto& table = SymbolTable::instance();
  if (const SymbolData* d = table.find(key)) return Symbol(d);
  auto d = std::make_unique<SymbolData>();
  d->kind = SymbolKind::kJet;
  d->name = name;
  d->key = key;
  d->component = component;
  d->t_order = t_order;
  d->x_order = x_order;
  return Symbol(table.insert(std::move(d)));
}

Symbol parameter(std::string_view name) {
  return intern(SymbolKind::kParameter, std::string(name),
                std::string(1, kParamTag) + std::string(name));
}

Symbol pi() { return intern(SymbolKind::kConstant, "pi", std::string(1, kConstTag) + "pi"); }

Symbol function(std::string_view base, std::uint8_t deps,
                std::array<int, 4> multi) {
  std::string name = function_name(base, multi);
  std::string key(1, kFunctionTag);
  key += base;
  key += '[';
  key += static_cast<char>('a' + deps);
  key += ']';
  for (int m : multi) key += static_cast<char>('0' + m);
  auto& table = SymbolTable::instance();
  if (const SymbolData* d = table.find(key)) return Symbol(d);
  auto d = std::make_unique<SymbolData>();
  d->kind = SymbolKind::kFunction;
  d->name = std::move(name);
  d->key = std::move(key);
  d->fn_base = std::string(base);
  d->deps = deps;
  d->multi = multi;
  return Symbol(table.insert(std::move(d)));
}

std::optional<Symbol> function_derivative(Symbol f, Coord c) {
  const SymbolData& d = f.data();
  int idx = static_cast<int>(c);
  if (!(d.deps & (1u << idx))) return std::nullopt;
  auto multi = d.multi;
  ++multi[idx];
  return function(d.fn_base, d.deps, multi);
}

Symbol atom(AtomHead head, const Expr& arg) {
  std::string arg_text = arg.str();
  std::string key(1, kAtomTag);
  key += head_name(head);
  key += '(';
  key += arg_text;
  key += ')';
  auto& table = SymbolTable::instance();
  if (const SymbolData* d = table.find(key)) return Symbol(d);

  auto make = [&](AtomHead h) {
    auto d = std::make_unique<SymbolData>();
    d->kind = SymbolKind::kAtom;
    d->head = h;
    d->name = std::string(head_name(h)) + "(" + arg_text + ")";
    d->key = std::string(1, kAtomTag) + head_name(h) + "(" + arg_text + ")";
    d->arg = std::make_shared<const Expr>(arg.without_assumptions());
    return d;
  };

  if (head == AtomHead::kSin || head == AtomHead::kCos) {
    auto [s, c] = table.insert_pair(make(AtomHead::kSin), make(AtomHead::kCos));
    return Symbol(head == AtomHead::kSin ? s : c);
  }
  if (head == AtomHead::kSqrt) {
    if (!arg.is_polynomial()) {
      throw std::invalid_argument("sqrt atom radicand must be polynomial");
    }
    auto d = make(head);
    d->radicand = std::make_shared<const Poly>(arg.num());
    return Symbol(table.insert(std::move(d)));
  }
  return Symbol(table.insert(make(head)));
}

Symbol sqrt_atom(const Poly& radicand) {
  return atom(AtomHead::kSqrt, Expr::from_poly(radicand));
}

}  // namespace sym
}  // namespace symkit
