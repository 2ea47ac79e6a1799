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

// Interned symbols of the expression kernel.
//
// Every symbol lives in a process-wide table and is referred to through a
// cheap handle. Ordering between symbols never depends on interning order:
// it is the lexicographic order of a key string that encodes kind and name
// (atoms use head plus the rendered canonical argument), so the normal forms
// built on top are independent of the order in which atoms were introduced.

#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace symkit {

class Expr;
class Poly;

enum class SymbolKind : std::uint8_t {
  kBase,       // t, x
  kJet,        // u, v and their derivatives up to total order 2
  kFunction,   // opaque function (or one of its partial derivatives)
  kParameter,  // d1, a1, alpha1, lambda2, ...
  kConstant,   // pi
  kAtom,       // exp/sin/cos/sqrt application
};

enum class AtomHead : std::uint8_t { kExp, kSin, kCos, kSqrt };

// Bits of an opaque function's dependency set.
enum DepBit : std::uint8_t { kDepT = 1, kDepX = 2, kDepU = 4, kDepV = 8 };

// Index into the (t, x, u, v) derivative multi-index.
enum class Coord : std::uint8_t { kT = 0, kX = 1, kU = 2, kV = 3 };

struct SymbolData {
  SymbolKind kind;
  std::string name;  // rendered name
  std::string key;   // total order key, unique per symbol

  // kJet: component 1 = u, 2 = v.
  int component = 0;
  int t_order = 0;
  int x_order = 0;

  // kFunction
  std::string fn_base;
  std::uint8_t deps = 0;
  std::array<int, 4> multi{0, 0, 0, 0};

  // kAtom
  AtomHead head = AtomHead::kExp;
  std::shared_ptr<const Expr> arg;       // canonical argument
  std::shared_ptr<const Poly> radicand;  // kSqrt only
  const SymbolData* partner = nullptr;   // sin <-> cos with the same argument
};

class Symbol {
 public:
  Symbol() = default;
  explicit Symbol(const SymbolData* d) : d_(d) {}

  const SymbolData& data() const { return *d_; }
  const SymbolData* raw() const { return d_; }
  const std::string& name() const { return d_->name; }
  const std::string& key() const { return d_->key; }
  SymbolKind kind() const { return d_->kind; }
  bool valid() const { return d_ != nullptr; }

  bool is_atom() const { return d_->kind == SymbolKind::kAtom; }
  bool is_atom(AtomHead h) const { return is_atom() && d_->head == h; }
  bool is_jet() const { return d_->kind == SymbolKind::kJet; }
  int jet_order() const { return d_->t_order + d_->x_order; }

  friend bool operator==(Symbol a, Symbol b) { return a.d_ == b.d_; }
  friend bool operator!=(Symbol a, Symbol b) { return a.d_ != b.d_; }
  friend bool operator<(Symbol a, Symbol b) {
    return a.d_ != b.d_ && a.d_->key < b.d_->key;
  }
  friend bool operator>(Symbol a, Symbol b) { return b < a; }

 private:
  const SymbolData* d_ = nullptr;
};

struct SymbolHash {
  std::size_t operator()(Symbol s) const noexcept {
    return std::hash<const void*>{}(s.raw());
  }
};

namespace sym {

Symbol base(std::string_view name);  // "t" or "x"
Symbol jet(int component, int t_order, int x_order);
Symbol parameter(std::string_view name);
Symbol pi();
// Opaque function `base` with dependency mask `deps`, differentiated
// multi[c] times in coordinate c.
Symbol function(std::string_view base, std::uint8_t deps,
                std::array<int, 4> multi = {0, 0, 0, 0});
// Partial derivative of an opaque function symbol in one coordinate; empty
// when the function does not depend on that coordinate.
std::optional<Symbol> function_derivative(Symbol f, Coord c);

// Atom interning. `arg` must already be canonical. Creating a sin or cos atom
// creates its partner with the same argument.
Symbol atom(AtomHead head, const Expr& arg);
Symbol sqrt_atom(const Poly& radicand);

inline Symbol t() { return base("t"); }
inline Symbol x() { return base("x"); }
inline Symbol u() { return jet(1, 0, 0); }
inline Symbol v() { return jet(2, 0, 0); }
inline Symbol u_t() { return jet(1, 1, 0); }
inline Symbol v_t() { return jet(2, 1, 0); }
inline Symbol u_x() { return jet(1, 0, 1); }
inline Symbol v_x() { return jet(2, 0, 1); }
inline Symbol u_xx() { return jet(1, 0, 2); }
inline Symbol v_xx() { return jet(2, 0, 2); }
inline Symbol u_tx() { return jet(1, 1, 1); }
inline Symbol v_tx() { return jet(2, 1, 1); }
inline Symbol u_tt() { return jet(1, 2, 0); }
inline Symbol v_tt() { return jet(2, 2, 0); }

// Name of the jet variable, e.g. "u_tx".
std::string jet_name(int component, int t_order, int x_order);

}  // namespace sym

const char* head_name(AtomHead h);

}  // namespace symkit
