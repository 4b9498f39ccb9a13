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

#include "deglab/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <string>

namespace deglab {

// ---------------------------------------------------------------------------
// CayleyTable / FiniteMonoid

CayleyTable::CayleyTable(const std::vector<std::vector<Elem>>& rows)
    : n_(rows.size()) {
  if (n_ == 0) throw StructuralError("table is empty");
  cells_.reserve(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) {
      throw StructuralError("table is not square: row " + std::to_string(i) +
                                " has " + std::to_string(rows[i].size()) +
                                " entries, expected " + std::to_string(n_),
                            "/" + std::to_string(i));
    }
    for (std::size_t j = 0; j < n_; ++j) {
      if (rows[i][j] >= n_) {
        throw StructuralError("entry " + std::to_string(rows[i][j]) +
                                  " out of range [0," + std::to_string(n_) + ")",
                              "/" + std::to_string(i) + "/" + std::to_string(j));
      }
      cells_.push_back(rows[i][j]);
    }
  }
}

CayleyTable::CayleyTable(std::size_t n, std::vector<Elem> cells)
    : n_(n), cells_(std::move(cells)) {
  if (n_ == 0) throw StructuralError("table is empty");
  if (cells_.size() != n_ * n_) throw StructuralError("table is not square");
  for (Elem c : cells_) {
    if (c >= n_) throw StructuralError("table entry out of range");
  }
}

std::vector<std::vector<Elem>> CayleyTable::rows() const {
  std::vector<std::vector<Elem>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    out[i].assign(cells_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                  cells_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
  }
  return out;
}

FiniteMonoid::FiniteMonoid(CayleyTable table, Elem unit)
    : table_(std::move(table)), unit_(unit) {
  if (unit_ >= table_.size()) {
    throw StructuralError("unit index " + std::to_string(unit_) + " out of range",
                          "/unit");
  }
}

FiniteMonoid trivial_monoid() { return FiniteMonoid(CayleyTable(1, {0}), 0); }

FiniteMonoid cyclic_group(std::size_t n) {
  if (n == 0) throw PreconditionError("cyclic group of order 0");
  std::vector<Elem> cells(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cells[i * n + j] = (i + j) % n;
  return FiniteMonoid(CayleyTable(n, std::move(cells)), 0);
}

FiniteMonoid boolean_or() { return FiniteMonoid({{0, 1}, {1, 1}}, 0); }

FiniteMonoid left_zero_with_unit() {
  return FiniteMonoid({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, 0);
}

// ---------------------------------------------------------------------------
// Checks

ValidationReport check_monoid(const FiniteMonoid& m) {
  ValidationReport report;
  const std::size_t n = m.size();
  const Elem e = m.unit();
  for (Elem x = 0; x < n; ++x) {
    if (m.mul(e, x) != x) report.add("left_unit", {x});
    if (m.mul(x, e) != x) report.add("right_unit", {x});
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (m.mul(m.mul(x, y), z) != m.mul(x, m.mul(y, z)))
          report.add("associativity", {x, y, z});
  return report;
}

ValidationReport check_monoid(const std::vector<std::vector<Elem>>& rows, Elem unit) {
  return check_monoid(FiniteMonoid(rows, unit));
}

std::vector<std::pair<Elem, Elem>> check_commutative(const FiniteMonoid& m) {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem x = 0; x < m.size(); ++x)
    for (Elem y = x + 1; y < m.size(); ++y)
      if (m.mul(x, y) != m.mul(y, x)) out.emplace_back(x, y);
  return out;
}

bool is_commutative(const FiniteMonoid& m) { return check_commutative(m).empty(); }

std::optional<Elem> invert(const FiniteMonoid& m, Elem x) {
  for (Elem y = 0; y < m.size(); ++y)
    if (m.mul(x, y) == m.unit() && m.mul(y, x) == m.unit()) return y;
  return std::nullopt;
}

std::vector<Elem> invertible_elements(const FiniteMonoid& m) {
  std::vector<Elem> out;
  for (Elem x = 0; x < m.size(); ++x)
    if (invert(m, x)) out.push_back(x);
  return out;
}

std::vector<Elem> center(const FiniteMonoid& m) {
  std::vector<Elem> out;
  for (Elem x = 0; x < m.size(); ++x) {
    bool central = true;
    for (Elem y = 0; y < m.size() && central; ++y)
      central = m.mul(x, y) == m.mul(y, x);
    if (central) out.push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms

MonoidHom identity_hom(const FiniteMonoid& m) {
  std::vector<Elem> map(m.size());
  std::iota(map.begin(), map.end(), Elem{0});
  return {m, m, std::move(map)};
}

MonoidHom trivial_hom(const FiniteMonoid& source, const FiniteMonoid& target) {
  return {source, target, std::vector<Elem>(source.size(), target.unit())};
}

namespace {

void check_hom_shape(const MonoidHom& h) {
  if (h.map.size() != h.source.size()) {
    throw StructuralError("hom map has " + std::to_string(h.map.size()) +
                              " entries, source has " +
                              std::to_string(h.source.size()) + " elements",
                          "/map");
  }
  for (std::size_t i = 0; i < h.map.size(); ++i) {
    if (h.map[i] >= h.target.size()) {
      throw StructuralError("hom value out of range", "/map/" + std::to_string(i));
    }
  }
}

bool hom_laws_hold(const FiniteMonoid& s, const FiniteMonoid& t,
                   const std::vector<Elem>& map) {
  if (map[s.unit()] != t.unit()) return false;
  for (Elem x = 0; x < s.size(); ++x)
    for (Elem y = 0; y < s.size(); ++y)
      if (map[s.mul(x, y)] != t.mul(map[x], map[y])) return false;
  return true;
}

}  // namespace

ValidationReport check_hom(const MonoidHom& h) {
  check_hom_shape(h);
  ValidationReport report;
  if (h.map[h.source.unit()] != h.target.unit()) {
    report.add("preserves_unit", {h.source.unit()},
               "maps unit to " + std::to_string(h.map[h.source.unit()]));
  }
  for (Elem x = 0; x < h.source.size(); ++x)
    for (Elem y = 0; y < h.source.size(); ++y)
      if (h.map[h.source.mul(x, y)] != h.target.mul(h.map[x], h.map[y]))
        report.add("preserves_multiplication", {x, y});
  return report;
}

MonoidHom compose(const MonoidHom& g, const MonoidHom& f) {
  if (!(f.target == g.source)) {
    throw PreconditionError("cannot compose homs: target of first != source of second");
  }
  std::vector<Elem> map(f.map.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = g.map[f.map[i]];
  return {f.source, g.target, std::move(map)};
}

std::vector<MonoidHom> enumerate_homs(const FiniteMonoid& source,
                                      const FiniteMonoid& target) {
  std::vector<MonoidHom> out;
  const std::size_t n = source.size();
  const std::size_t k = target.size();
  std::vector<Elem> map(n, 0);
  while (true) {
    if (hom_laws_hold(source, target, map)) out.push_back({source, target, map});
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++map[i] < k) break;
      map[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

// ---------------------------------------------------------------------------
// CMonDIE

Elem CMonDIE::die_inverse() const {
  if (die_inv) return *die_inv;
  if (auto inv = invert(monoid, die)) return *inv;
  throw InvalidInput("distinguished element has no inverse", check_cmon_die(*this));
}

CMonDIE make_cmon_die(FiniteMonoid m, Elem die) {
  if (die >= m.size()) throw StructuralError("die out of range", "/die");
  auto inv = invert(m, die);
  return {std::move(m), die, inv};
}

ValidationReport check_cmon_die(const CMonDIE& s) {
  if (s.die >= s.monoid.size()) throw StructuralError("die out of range", "/die");
  if (s.die_inv && *s.die_inv >= s.monoid.size()) {
    throw StructuralError("die_inv out of range", "/die_inv");
  }
  ValidationReport report = check_monoid(s.monoid);
  for (auto [x, y] : check_commutative(s.monoid)) report.add("commutativity", {x, y});
  const FiniteMonoid& m = s.monoid;
  if (s.die_inv) {
    Elem inv = *s.die_inv;
    if (m.mul(s.die, inv) != m.unit() || m.mul(inv, s.die) != m.unit()) {
      report.add("inverse_witness", {s.die, inv},
                 "die * die_inv = " + std::to_string(m.mul(s.die, inv)) +
                     ", unit is " + std::to_string(m.unit()));
    }
  } else if (!invert(m, s.die)) {
    report.add("die_invertible", {s.die}, "no inverse exists");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Canonical forms and enumeration

namespace {

/// Relabeled cells: perm[old] = new.
std::vector<Elem> relabel(const FiniteMonoid& m, const std::vector<Elem>& perm) {
  const std::size_t n = m.size();
  std::vector<Elem> cells(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) cells[perm[x] * n + perm[y]] = perm[m.mul(x, y)];
  return cells;
}

std::vector<Elem> canonical_cells(const FiniteMonoid& m) {
  const std::size_t n = m.size();
  std::vector<Elem> others;
  for (Elem x = 0; x < n; ++x)
    if (x != m.unit()) others.push_back(x);
  // `others` lists old labels in the order they receive new labels 1..n-1.
  std::vector<Elem> best;
  std::vector<Elem> perm(n);
  do {
    perm[m.unit()] = 0;
    for (std::size_t i = 0; i < others.size(); ++i) perm[others[i]] = i + 1;
    auto cells = relabel(m, perm);
    if (best.empty() || cells < best) best = std::move(cells);
  } while (std::next_permutation(others.begin(), others.end()));
  return best;
}

class MonoidSearch {
 public:
  MonoidSearch(std::size_t n, bool commutative) : n_(n), commutative_(commutative) {
    cells_.assign(n * n, kUndefined);
    for (Elem x = 0; x < n; ++x) {
      at(0, x) = x;
      at(x, 0) = x;
    }
    for (Elem x = 1; x < n; ++x)
      for (Elem y = commutative ? x : 1; y < n; ++y) slots_.emplace_back(x, y);
  }

  std::vector<FiniteMonoid> run() {
    extend(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  Elem& at(Elem x, Elem y) { return cells_[x * n_ + y]; }

  bool consistent() const {
    auto get = [&](Elem x, Elem y) { return cells_[x * n_ + y]; };
    for (Elem x = 1; x < n_; ++x)
      for (Elem y = 1; y < n_; ++y) {
        Elem xy = get(x, y);
        if (xy == kUndefined) continue;
        for (Elem z = 1; z < n_; ++z) {
          Elem yz = get(y, z);
          if (yz == kUndefined) continue;
          Elem l = get(xy, z);
          Elem r = get(x, yz);
          if (l != kUndefined && r != kUndefined && l != r) return false;
        }
      }
    return true;
  }

  void extend(std::size_t slot) {
    if (slot == slots_.size()) {
      FiniteMonoid m(CayleyTable(n_, cells_), 0);
      if (canonical_cells(m) == cells_) found_.push_back(std::move(m));
      return;
    }
    auto [x, y] = slots_[slot];
    for (Elem v = 0; v < n_; ++v) {
      at(x, y) = v;
      if (commutative_) at(y, x) = v;
      if (consistent()) extend(slot + 1);
    }
    at(x, y) = kUndefined;
    if (commutative_) at(y, x) = kUndefined;
  }

  std::size_t n_;
  bool commutative_;
  std::vector<Elem> cells_;
  std::vector<std::pair<Elem, Elem>> slots_;
  std::vector<FiniteMonoid> found_;
};

}  // namespace

FiniteMonoid canonical_form(const FiniteMonoid& m) {
  return FiniteMonoid(CayleyTable(m.size(), canonical_cells(m)), 0);
}

bool isomorphic(const FiniteMonoid& a, const FiniteMonoid& b) {
  return a.size() == b.size() && canonical_cells(a) == canonical_cells(b);
}

std::size_t max_enumeration_size() {
  if (const char* env = std::getenv("DEGLAB_MAX_SIZE")) {
    std::size_t value = 0;
    std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc() && ptr == s.data() + s.size() && value > 0) return value;
  }
  return 5;
}

std::vector<FiniteMonoid> enumerate_monoids(std::size_t n, bool commutative_only,
                                            std::optional<std::size_t> bound) {
  const std::size_t cap = bound.value_or(max_enumeration_size());
  if (n == 0) throw PreconditionError("monoid order must be positive");
  if (n > cap) {
    throw PreconditionError("refusing to enumerate monoids of order " +
                            std::to_string(n) + ": enumeration bound is " +
                            std::to_string(cap) + " (set DEGLAB_MAX_SIZE to raise it)");
  }
  return MonoidSearch(n, commutative_only).run();
}

std::vector<CMonDIE> enumerate_cmon_dies(std::size_t max_order) {
  std::vector<CMonDIE> out;
  for (std::size_t n = 1; n <= max_order; ++n)
    for (auto& m : enumerate_monoids(n, true))
      for (Elem d : invertible_elements(m)) out.push_back(make_cmon_die(m, d));
  return out;
}

}  // namespace deglab
