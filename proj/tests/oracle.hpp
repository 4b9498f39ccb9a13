// Copyright 2026 The deglab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test oracles. Nothing here calls into the library's checkers: values are
// recomputed from raw tables by brute force or by evaluating formal terms.

#ifndef DEGLAB_TESTS_ORACLE_HPP
#define DEGLAB_TESTS_ORACLE_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using Elem = std::size_t;
inline constexpr Elem kNone = static_cast<Elem>(-1);
using Table = std::vector<std::vector<Elem>>;

// ---------------------------------------------------------------------------
// Monoids from raw tables

inline bool is_monoid(const Table& t, Elem unit) {
  const std::size_t n = t.size();
  if (unit >= n) return false;
  for (const auto& row : t) {
    if (row.size() != n) return false;
    for (Elem v : row)
      if (v >= n) return false;
  }
  for (Elem x = 0; x < n; ++x)
    if (t[unit][x] != x || t[x][unit] != x) return false;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (t[t[x][y]][z] != t[x][t[y][z]]) return false;
  return true;
}

inline bool is_commutative(const Table& t) {
  for (Elem x = 0; x < t.size(); ++x)
    for (Elem y = 0; y < t.size(); ++y)
      if (t[x][y] != t[y][x]) return false;
  return true;
}

inline bool is_hom(const Table& x, Elem ex, const Table& y, Elem ey, const std::vector<Elem>& f) {
  if (f.size() != x.size() || f[ex] != ey) return false;
  for (Elem a = 0; a < x.size(); ++a)
    for (Elem b = 0; b < x.size(); ++b)
      if (f[x[a][b]] != y[f[a]][f[b]]) return false;
  return true;
}

/// The one-object naturality condition d·F(x) = G(x)·d for every x.
inline bool is_natural(const Table& y, const std::vector<Elem>& F, const std::vector<Elem>& G,
                       Elem d) {
  for (Elem x = 0; x < F.size(); ++x)
    if (y[d][F[x]] != y[G[x]][d]) return false;
  return true;
}

/// Relabeling by p: (p·t)[p x][p y] = p(t[x][y]), flattened.
inline std::vector<Elem> relabel(const Table& t, const std::vector<Elem>& p) {
  const std::size_t n = t.size();
  std::vector<Elem> out(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) out[p[x] * n + p[y]] = p[t[x][y]];
  return out;
}

/// Smallest flattened table over all relabelings that fix the unit 0.
inline std::vector<Elem> min_relabeling(const Table& t) {
  const std::size_t n = t.size();
  std::vector<Elem> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Elem> best = relabel(t, p);
  while (std::next_permutation(p.begin() + 1, p.end())) best = std::min(best, relabel(t, p));
  return best;
}

/// Isomorphism classes of monoids of order n by exhaustive search over every
/// table with unit 0. Feasible for n <= 4 (4^9 candidates).
struct MonoidClasses {
  std::set<std::vector<Elem>> all;
  std::set<std::vector<Elem>> commutative;
};

inline MonoidClasses brute_force_monoids(std::size_t n) {
  if (n == 0 || n > 4) throw std::invalid_argument("brute force covers orders 1..4");
  MonoidClasses out;
  const std::size_t k = n - 1;
  const std::size_t free = k * k;
  std::vector<Elem> digits(free, 0);
  Table t(n, std::vector<Elem>(n));
  for (Elem x = 0; x < n; ++x) t[0][x] = t[x][0] = x;
  for (;;) {
    for (std::size_t i = 0; i < free; ++i) t[1 + i / k][1 + i % k] = digits[i];
    if (is_monoid(t, 0)) {
      auto key = min_relabeling(t);
      if (is_commutative(t)) out.commutative.insert(key);
      out.all.insert(std::move(key));
    }
    std::size_t i = 0;
    while (i < free && ++digits[i] == n) digits[i++] = 0;
    if (i == free) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Formal composites in a monoidal structure

/// Object words over variables.
struct Word {
  enum class Kind { Var, Unit, Tensor } kind = Kind::Unit;
  int var = 0;
  std::shared_ptr<const Word> left, right;
};
using W = std::shared_ptr<const Word>;

inline W var(int i) { return std::make_shared<Word>(Word{Word::Kind::Var, i, nullptr, nullptr}); }
inline W unit_word() { return std::make_shared<Word>(Word{}); }
inline W operator*(W a, W b) {
  return std::make_shared<Word>(Word{Word::Kind::Tensor, 0, std::move(a), std::move(b)});
}

inline bool same(const W& a, const W& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Word::Kind::Var: return a->var == b->var;
    case Word::Kind::Unit: return true;
    case Word::Kind::Tensor: return same(a->left, b->left) && same(a->right, b->right);
  }
  return false;
}

/// 2-cell expressions built from identities and constraint generators.
struct Cell;
using C = std::shared_ptr<const Cell>;
struct Cell {
  enum class Kind { Id, Assoc, LUnit, RUnit, Tensor, Compose } kind = Kind::Id;
  W a, b, c;
  C f, g;  // Tensor(f, g) is f ⊗ g; Compose(g, f) is g after f
  W src, tgt;
};

inline C id(W a) { return std::make_shared<Cell>(Cell{Cell::Kind::Id, a, {}, {}, {}, {}, a, a}); }
/// (a⊗b)⊗c -> a⊗(b⊗c)
inline C assoc(W a, W b, W c) {
  return std::make_shared<Cell>(Cell{Cell::Kind::Assoc, a, b, c, {}, {}, (a * b) * c, a * (b * c)});
}
/// I⊗a -> a
inline C lunit(W a) {
  return std::make_shared<Cell>(Cell{Cell::Kind::LUnit, a, {}, {}, {}, {}, unit_word() * a, a});
}
/// a⊗I -> a
inline C runit(W a) {
  return std::make_shared<Cell>(Cell{Cell::Kind::RUnit, a, {}, {}, {}, {}, a * unit_word(), a});
}
inline C tensor(C f, C g) {
  W s = f->src * g->src, t = f->tgt * g->tgt;
  return std::make_shared<Cell>(Cell{Cell::Kind::Tensor, {}, {}, {}, std::move(f), std::move(g), s, t});
}
/// g after f; the formal boundaries must match.
inline C then(C g, C f) {
  if (!same(f->tgt, g->src)) throw std::logic_error("formal composite is ill-typed");
  W s = f->src, t = g->tgt;
  return std::make_shared<Cell>(Cell{Cell::Kind::Compose, {}, {}, {}, std::move(f), std::move(g), s, t});
}

/// A concrete interpretation: objects and morphisms are indices.
struct Model {
  std::size_t objects = 0;
  Elem unit = 0;
  std::function<Elem(Elem, Elem)> tensor_obj;
  std::function<Elem(Elem)> identity;
  std::function<Elem(Elem, Elem, Elem)> assoc;
  std::function<Elem(Elem)> lunit;
  std::function<Elem(Elem)> runit;
  std::function<Elem(Elem, Elem)> tensor_mor;
  std::function<Elem(Elem, Elem)> compose;  // g after f
  std::function<Elem(Elem)> src;
  std::function<Elem(Elem)> tgt;
};

inline Elem eval(const Model& m, const W& w, const std::vector<Elem>& env) {
  switch (w->kind) {
    case Word::Kind::Var: return env.at(static_cast<std::size_t>(w->var));
    case Word::Kind::Unit: return m.unit;
    case Word::Kind::Tensor: return m.tensor_obj(eval(m, w->left, env), eval(m, w->right, env));
  }
  return kNone;
}

/// Evaluates a formal cell; kNone when the model cannot type it.
inline Elem eval(const Model& m, const C& c, const std::vector<Elem>& env) {
  Elem out = kNone;
  switch (c->kind) {
    case Cell::Kind::Id: out = m.identity(eval(m, c->a, env)); break;
    case Cell::Kind::Assoc: out = m.assoc(eval(m, c->a, env), eval(m, c->b, env), eval(m, c->c, env)); break;
    case Cell::Kind::LUnit: out = m.lunit(eval(m, c->a, env)); break;
    case Cell::Kind::RUnit: out = m.runit(eval(m, c->a, env)); break;
    case Cell::Kind::Tensor: {
      const Elem f = eval(m, c->f, env), g = eval(m, c->g, env);
      if (f != kNone && g != kNone) out = m.tensor_mor(f, g);
      break;
    }
    case Cell::Kind::Compose: {
      const Elem f = eval(m, c->f, env), g = eval(m, c->g, env);
      if (f != kNone && g != kNone && m.tgt(f) == m.src(g)) out = m.compose(g, f);
      break;
    }
  }
  if (out == kNone) return kNone;
  if (m.src(out) != eval(m, c->src, env) || m.tgt(out) != eval(m, c->tgt, env)) return kNone;
  return out;
}

/// The two sides of the pentagon at variables W, X, Y, Z = 0..3.
inline std::pair<C, C> pentagon_terms() {
  const W w = var(0), x = var(1), y = var(2), z = var(3);
  C two = then(assoc(w, x, y * z), assoc(w * x, y, z));
  C three = then(tensor(id(w), assoc(x, y, z)), then(assoc(w, x * y, z), tensor(assoc(w, x, y), id(z))));
  return {two, three};
}

/// The two sides of the triangle at variables X, Y = 0, 1.
inline std::pair<C, C> triangle_terms() {
  const W x = var(0), y = var(1);
  return {then(tensor(id(x), lunit(y)), assoc(x, unit_word(), y)), tensor(runit(x), id(y))};
}

/// Instantiations where the two sides differ (or fail to type).
inline std::vector<std::vector<Elem>> failing_instances(const Model& m, const std::pair<C, C>& sides,
                                                        std::size_t arity) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> env(arity, 0);
  for (;;) {
    const Elem lhs = eval(m, sides.first, env), rhs = eval(m, sides.second, env);
    if (lhs == kNone || rhs == kNone || lhs != rhs) out.push_back(env);
    std::size_t i = arity;
    while (i > 0 && ++env[i - 1] == m.objects) env[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

inline std::vector<std::vector<Elem>> pentagon_failures(const Model& m) {
  return failing_instances(m, pentagon_terms(), 4);
}

inline std::vector<std::vector<Elem>> triangle_failures(const Model& m) {
  return failing_instances(m, triangle_terms(), 2);
}

// ---------------------------------------------------------------------------
// Composition of weak functors between one-object, one-1-cell bicategories

struct RawDDFunctor {
  std::vector<Elem> map;
  Elem m2 = 0;
  Elem m0 = 0;
  bool operator==(const RawDDFunctor&) const = default;
};

/// (GF, G m_F · m_G) with unit constraint G m0_F · m0_G, evaluated in the
/// target table of G.
inline RawDDFunctor compose_raw(const RawDDFunctor& g, const RawDDFunctor& f, const Table& target) {
  RawDDFunctor out;
  for (Elem v : f.map) out.map.push_back(g.map[v]);
  out.m2 = target[g.map[f.m2]][g.m2];
  out.m0 = target[g.map[f.m0]][g.m0];
  return out;
}

}  // namespace oracle

#endif  // DEGLAB_TESTS_ORACLE_HPP
