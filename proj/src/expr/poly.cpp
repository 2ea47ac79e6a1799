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

#include "symkit/expr/poly.hpp"

#include <algorithm>
#include <cassert>

namespace symkit {

Monomial::Monomial(Symbol s, int e) {
  if (e != 0) f_.emplace_back(s, e);
}

int Monomial::degree(Symbol s) const {
  for (const auto& [sym, e] : f_) {
    if (sym == s) return e;
  }
  return 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [sym, e] : f_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  auto a = f_.begin();
  auto b = o.f_.begin();
  while (a != f_.end() || b != o.f_.end()) {
    if (b == o.f_.end() || (a != f_.end() && a->first < b->first)) {
      r.f_.push_back(*a++);
    } else if (a == f_.end() || b->first < a->first) {
      r.f_.push_back(*b++);
    } else {
      int e = a->second + b->second;
      if (e != 0) r.f_.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  return r;
}

Monomial Monomial::pow(int e) const {
  Monomial r;
  if (e == 0) return r;
  r.f_ = f_;
  for (auto& f : r.f_) f.second *= e;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (const auto& [s, e] : f_) {
    if (o.degree(s) < e) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  return o * pow(-1);
}

Monomial Monomial::without(Symbol s) const {
  Monomial r;
  for (const auto& f : f_) {
    if (f.first != s) r.f_.push_back(f);
  }
  return r;
}

Monomial Monomial::with(Symbol s, int e) const {
  return without(s) * Monomial(s, e);
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  auto i = a.f_.rbegin();
  auto j = b.f_.rbegin();
  for (; i != a.f_.rend() && j != b.f_.rend(); ++i, ++j) {
    if (i->first != j->first) {
      // The monomial carrying the larger symbol wins when its exponent is
      // positive; negative (Laurent) exponents flip the comparison.
      if (j->first < i->first) return i->second > 0 ? 1 : -1;
      return j->second > 0 ? -1 : 1;
    }
    if (i->second != j->second) return i->second > j->second ? 1 : -1;
  }
  if (i != a.f_.rend()) return i->second > 0 ? 1 : -1;
  if (j != b.f_.rend()) return j->second > 0 ? -1 : 1;
  return 0;
}

Poly::Poly(const Rational& c) {
  if (c != 0) t_.emplace(Monomial(), c);
}

Poly Poly::symbol(Symbol s, int e) {
  Poly p;
  p.t_.emplace(Monomial(s, e), Rational(1));
  return p;
}

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p;
  if (c != 0) p.t_.emplace(m, c);
  return p;
}

bool Poly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty());
}

Rational Poly::constant_value() const {
  if (t_.empty()) return 0;
  assert(is_constant());
  return t_.begin()->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = t_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

Poly Poly::mul_free(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ma, ca] : a.t_) {
    for (const auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

namespace {

bool reducible(const Monomial& m) {
  for (const auto& [s, e] : m.factors()) {
    if (e >= 2 && (s.is_atom(AtomHead::kSqrt) || s.is_atom(AtomHead::kSin))) {
      return true;
    }
  }
  return false;
}

}  // namespace

Poly Poly::reduced() const {
  bool any = false;
  for (const auto& [m, c] : t_) {
    if (reducible(m)) {
      any = true;
      break;
    }
  }
  if (!any) return *this;

  Poly out;
  for (const auto& [m, c] : t_) {
    if (!reducible(m)) {
      out.add_term(m, c);
      continue;
    }
    Monomial keep;
    Poly factor(c);
    for (const auto& [s, e] : m.factors()) {
      if (e >= 2 && s.is_atom(AtomHead::kSqrt)) {
        keep = keep * Monomial(s, e % 2);
        factor = factor * s.data().radicand->pow(e / 2);
      } else if (e >= 2 && s.is_atom(AtomHead::kSin)) {
        keep = keep * Monomial(s, e % 2);
        Symbol cosine(s.data().partner);
        Poly one_minus_c2 = Poly(1) - Poly::symbol(cosine, 2);
        factor = factor * one_minus_c2.pow(e / 2);
      } else {
        keep = keep * Monomial(s, e);
      }
    }
    out += factor.times(keep).reduced();
  }
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  return Poly::mul_free(a, b).reduced();
}

Poly Poly::scaled(const Rational& c) const {
  Poly r;
  if (c == 0) return r;
  r.t_ = t_;
  for (auto& [m, k] : r.t_) k *= c;
  return r;
}

Poly Poly::times(const Monomial& m) const {
  Poly r;
  for (const auto& [mm, c] : t_) r.add_term(mm * m, c);
  return r;
}

Poly Poly::pow(int e) const {
  assert(e >= 0);
  Poly result(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

namespace {

// Monomial that lifts every exp-atom exponent of p to >= 0.
Monomial laurent_shift(const Poly& p) {
  std::map<Symbol, int> mins;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [s, e] : m.factors()) {
      if (s.is_atom(AtomHead::kExp) && e < 0) {
        auto it = mins.find(s);
        if (it == mins.end() || e < it->second) mins[s] = e;
      }
    }
  }
  Monomial shift;
  for (const auto& [s, e] : mins) shift = shift * Monomial(s, -e);
  return shift;
}

constexpr std::size_t kDivisionStepLimit = 200000;

}  // namespace

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  assert(!d.is_zero());
  if (is_zero()) return Poly();
  if (d.is_constant()) return scaled(1 / d.constant_value());

  Monomial shift = laurent_shift(*this);
  Monomial dshift = laurent_shift(d);
  Poly r = times(shift);
  Poly dd = d.times(dshift);

  const Monomial& lm_d = dd.leading_monomial();
  const Rational& lc_d = dd.leading_coefficient();
  Poly q;
  std::size_t steps = 0;
  while (!r.is_zero()) {
    if (++steps > kDivisionStepLimit) return std::nullopt;
    const Monomial lm = r.leading_monomial();
    if (!lm_d.divides(lm)) return std::nullopt;
    Monomial tm = lm_d.quotient_of(lm);
    Rational tc = r.leading_coefficient() / lc_d;
    q.add_term(tm, tc);
    for (const auto& [m, c] : dd.t_) r.add_term(tm * m, -tc * c);
  }
  // this * shift = q * d * dshift  =>  this = q * d * dshift / shift
  return q.times(dshift * shift.pow(-1));
}

Poly Poly::partial(Symbol s) const {
  Poly r;
  for (const auto& [m, c] : t_) {
    int e = m.degree(s);
    if (e == 0) continue;
    r.add_term(m.with(s, e - 1), c * e);
  }
  return r;
}

int Poly::max_degree(Symbol s) const {
  int d = 0;
  bool first = true;
  for (const auto& [m, c] : t_) {
    int e = m.degree(s);
    if (first || e > d) d = e;
    first = false;
  }
  return d;
}

int Poly::min_degree(Symbol s) const {
  int d = 0;
  bool first = true;
  for (const auto& [m, c] : t_) {
    int e = m.degree(s);
    if (first || e < d) d = e;
    first = false;
  }
  return d;
}

Rational Poly::content() const {
  if (t_.empty()) return 1;
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& [m, c] : t_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational r(num_gcd, den_lcm);
  r.canonicalize();
  return r;
}

Rational Poly::make_primitive() {
  if (t_.empty()) return 1;
  Rational c = content();
  if (leading_coefficient() < 0) c = -c;
  for (auto& [m, k] : t_) k /= c;
  return c;
}

int Poly::compare(const Poly& a, const Poly& b) {
  auto i = a.t_.begin();
  auto j = b.t_.begin();
  for (; i != a.t_.end() && j != b.t_.end(); ++i, ++j) {
    int mc = Monomial::compare(i->first, j->first);
    if (mc != 0) return mc;
    int cc = cmp(i->second, j->second);
    if (cc != 0) return cc < 0 ? -1 : 1;
  }
  if (i != a.t_.end()) return 1;
  if (j != b.t_.end()) return -1;
  return 0;
}

}  // namespace symkit
