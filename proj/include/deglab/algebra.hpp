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

// Finite monoids given by Cayley tables, their homomorphisms, and the
// exhaustive small-instance enumeration every other module uses as its
// oracle layer.

#ifndef DEGLAB_ALGEBRA_HPP
#define DEGLAB_ALGEBRA_HPP

#include <optional>
#include <utility>
#include <vector>

#include "deglab/report.hpp"

namespace deglab {

/// Square row-major table with entries in [0, size). Construction checks shape
/// and range only.
class CayleyTable {
 public:
  CayleyTable() = default;
  explicit CayleyTable(const std::vector<std::vector<Elem>>& rows);
  CayleyTable(std::size_t n, std::vector<Elem> cells);

  std::size_t size() const noexcept { return n_; }
  Elem operator()(Elem x, Elem y) const { return cells_[x * n_ + y]; }
  const std::vector<Elem>& cells() const noexcept { return cells_; }
  std::vector<std::vector<Elem>> rows() const;

  bool operator==(const CayleyTable&) const = default;
  auto operator<=>(const CayleyTable&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Elem> cells_;
};

/// A monoid candidate: a Cayley table plus an explicit unit index. Whether the
/// axioms hold is decided by check_monoid, not by construction.
class FiniteMonoid {
 public:
  FiniteMonoid() = default;
  FiniteMonoid(CayleyTable table, Elem unit);
  FiniteMonoid(const std::vector<std::vector<Elem>>& rows, Elem unit)
      : FiniteMonoid(CayleyTable(rows), unit) {}

  std::size_t size() const noexcept { return table_.size(); }
  Elem unit() const noexcept { return unit_; }
  Elem mul(Elem x, Elem y) const { return table_(x, y); }
  const CayleyTable& table() const noexcept { return table_; }

  bool operator==(const FiniteMonoid&) const = default;
  auto operator<=>(const FiniteMonoid&) const = default;

 private:
  CayleyTable table_;
  Elem unit_ = 0;
};

/// Stock instances.
FiniteMonoid trivial_monoid();
FiniteMonoid cyclic_group(std::size_t n);  // additive Z/n, unit 0
FiniteMonoid boolean_or();                 // {0,1} under max, unit 0
/// {e, a, b}: e the unit, a and b left zeros (x*y = x for x,y in {a,b}).
FiniteMonoid left_zero_with_unit();

ValidationReport check_monoid(const FiniteMonoid& m);
/// Builds the candidate and checks it. Malformed tables throw StructuralError.
ValidationReport check_monoid(const std::vector<std::vector<Elem>>& rows, Elem unit);

/// Pairs (x, y), x < y, with x*y != y*x.
std::vector<std::pair<Elem, Elem>> check_commutative(const FiniteMonoid& m);
bool is_commutative(const FiniteMonoid& m);

std::optional<Elem> invert(const FiniteMonoid& m, Elem x);
std::vector<Elem> invertible_elements(const FiniteMonoid& m);
std::vector<Elem> center(const FiniteMonoid& m);

struct MonoidHom {
  FiniteMonoid source;
  FiniteMonoid target;
  std::vector<Elem> map;

  Elem operator()(Elem x) const { return map[x]; }
  bool operator==(const MonoidHom&) const = default;
};

MonoidHom identity_hom(const FiniteMonoid& m);
/// The hom sending everything to the unit of `target`.
MonoidHom trivial_hom(const FiniteMonoid& source, const FiniteMonoid& target);

/// Throws StructuralError when the map has the wrong length or range.
ValidationReport check_hom(const MonoidHom& h);

/// g after f. Throws PreconditionError when f.target != g.source.
MonoidHom compose(const MonoidHom& g, const MonoidHom& f);

/// Every map source -> target passing check_hom, in lexicographic order.
std::vector<MonoidHom> enumerate_homs(const FiniteMonoid& source,
                                      const FiniteMonoid& target);

/// Commutative monoid with a distinguished invertible element. `die_inv` is
/// an optional witness; when absent the inverse is searched for.
struct CMonDIE {
  FiniteMonoid monoid;
  Elem die = 0;
  std::optional<Elem> die_inv;

  /// The inverse of `die`: the stored witness if present, otherwise a scan.
  Elem die_inverse() const;

  bool operator==(const CMonDIE&) const = default;
};

/// Builds (m, d) with the inverse witness filled in by invert().
CMonDIE make_cmon_die(FiniteMonoid m, Elem die);

ValidationReport check_cmon_die(const CMonDIE& s);

/// Relabels so that the unit is 0 and the table is lexicographically minimal
/// over all permutations of the remaining elements.
FiniteMonoid canonical_form(const FiniteMonoid& m);
bool isomorphic(const FiniteMonoid& a, const FiniteMonoid& b);

/// Enumeration cap: DEGLAB_MAX_SIZE when set to a positive integer, else 5.
std::size_t max_enumeration_size();

/// All monoids of order n up to isomorphism, each in canonical form, sorted.
/// Throws PreconditionError when n is 0 or exceeds `bound` (defaults to
/// max_enumeration_size()).
std::vector<FiniteMonoid> enumerate_monoids(std::size_t n, bool commutative_only,
                                            std::optional<std::size_t> bound = {});

/// Every (M, d) with M a commutative monoid of order <= max_order (up to
/// isomorphism) and d ranging over all invertible elements of M.
std::vector<CMonDIE> enumerate_cmon_dies(std::size_t max_order);

}  // namespace deglab

#endif  // DEGLAB_ALGEBRA_HPP
