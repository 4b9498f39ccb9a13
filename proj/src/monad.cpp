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

#include "deglab/monad.hpp"

#include <random>

#include "deglab/algebra.hpp"
#include "deglab/degenerate_cat.hpp"

namespace deglab {

namespace {

void check_components(const std::vector<Elem>& v, std::size_t n, std::size_t range,
                      const char* where) {
  if (v.size() != n) throw StructuralError("need one component per object", where);
  for (Elem i = 0; i < n; ++i)
    if (v[i] >= range) throw StructuralError("component out of range", where + ("/" + std::to_string(i)));
}

bool typed(const FiniteCategory& c, Elem f, Elem src, Elem tgt) {
  return c.src(f) == src && c.tgt(f) == tgt;
}

}  // namespace

ValidationReport check_monad(const FinMonad& m) {
  const FiniteCategory& c = m.base();
  if (!(m.T.source == m.T.target)) throw StructuralError("T is not an endofunctor", "/T");
  check_functor_shape(m.T);
  check_components(m.eta, c.objects, c.morphism_count(), "/eta");
  check_components(m.mu, c.objects, c.morphism_count(), "/mu");

  ValidationReport report;
  report.merge(check_category(c), "base");
  if (!report.ok()) return report;
  report.merge(check_functor(m.T), "functor");
  if (!report.ok()) return report;
  const FinFunctor& T = m.T;
  for (Elem a = 0; a < c.objects; ++a) {
    if (!typed(c, m.eta[a], a, T.obj(a))) report.add("eta_boundary", {a});
    if (!typed(c, m.mu[a], T.obj(T.obj(a)), T.obj(a))) report.add("mu_boundary", {a});
  }
  if (!report.ok()) return report;

  for (Elem f = 0; f < c.morphism_count(); ++f) {
    const Elem s = c.src(f), t = c.tgt(f);
    if (c.c(T(f), m.eta[s]) != c.c(m.eta[t], f)) report.add("eta_naturality", {f});
    if (c.c(T(f), m.mu[s]) != c.c(m.mu[t], T(T(f)))) report.add("mu_naturality", {f});
  }
  for (Elem a = 0; a < c.objects; ++a) {
    const Elem ta = T.obj(a);
    if (c.c(m.mu[a], m.eta[ta]) != c.id(ta)) report.add("left_unit", {a});
    if (c.c(m.mu[a], T(m.eta[a])) != c.id(ta)) report.add("right_unit", {a});
    if (c.c(m.mu[a], T(m.mu[a])) != c.c(m.mu[a], m.mu[ta])) {
      report.add("associativity", {a},
                 "μ∘Tμ = " + std::to_string(c.c(m.mu[a], T(m.mu[a]))) + ", μ∘μT = " +
                     std::to_string(c.c(m.mu[a], m.mu[ta])));
    }
  }
  return report;
}

FinMonad identity_monad(const FiniteCategory& c) {
  FinMonad m{identity_functor(c), c.identities, c.identities};
  return m;
}

FinMonad terminal_object_monad() {
  FiniteCategory c = arrow_category();
  FinFunctor T{c, c, {1, 1}, {1, 1, 1}};
  return FinMonad{T, {2, 1}, {1, 1}};
}

// ---------------------------------------------------------------------------
// Monad functors

ValidationReport check_monad_functor(const MonadFunctor& f) {
  const FinMonad& S = f.source;
  const FinMonad& T = f.target;
  const FiniteCategory& c = S.base();
  const FiniteCategory& d = T.base();
  if (!(f.U.source == c) || !(f.U.target == d)) throw StructuralError("U has the wrong endpoints", "/U");
  check_functor_shape(f.U);
  check_components(f.phi, c.objects, d.morphism_count(), "/phi");

  ValidationReport report;
  report.merge(check_monad(S), "source");
  report.merge(check_monad(T), "target");
  report.merge(check_functor(f.U), "U");
  if (!report.ok()) return report;
  const FinFunctor& U = f.U;
  for (Elem a = 0; a < c.objects; ++a)
    if (!typed(d, f.phi[a], T.T.obj(U.obj(a)), U.obj(S.T.obj(a)))) report.add("phi_boundary", {a});
  if (!report.ok()) return report;

  for (Elem x = 0; x < c.morphism_count(); ++x) {
    const Elem s = c.src(x), t = c.tgt(x);
    if (d.c(U(S.T(x)), f.phi[s]) != d.c(f.phi[t], T.T(U(x)))) report.add("phi_naturality", {x});
  }
  for (Elem a = 0; a < c.objects; ++a) {
    const Elem ua = U.obj(a);
    if (d.c(f.phi[a], T.eta[ua]) != U(S.eta[a])) report.add("unit", {a});
    const Elem lhs = d.c(f.phi[a], T.mu[ua]);
    const Elem rhs = d.c({U(S.mu[a]), f.phi[S.T.obj(a)], T.T(f.phi[a])});
    if (lhs != rhs) report.add("multiplication", {a});
  }
  return report;
}

MonadFunctor identity_monad_functor(const FinMonad& m) {
  MonadFunctor f{m, m, identity_functor(m.base()), {}};
  for (Elem a = 0; a < m.base().objects; ++a) f.phi.push_back(m.base().id(m.T.obj(a)));
  return f;
}

MonadFunctor compose_monad_functors(const MonadFunctor& g, const MonadFunctor& f) {
  if (!(f.target == g.source)) throw PreconditionError("monad functors are not composable");
  const FiniteCategory& e = g.target.base();
  MonadFunctor out{f.source, g.target, compose_functors(g.U, f.U), {}};
  for (Elem a = 0; a < f.source.base().objects; ++a)
    out.phi.push_back(e.c(g.U(f.phi[a]), g.phi[f.U.obj(a)]));
  return out;
}

ValidationReport check_monad_transformation(const MonadFunctorTransformation& t) {
  const MonadFunctor& f = t.source;
  const MonadFunctor& g = t.target;
  if (!(f.source == g.source) || !(f.target == g.target)) {
    throw StructuralError("transformation between non-parallel monad functors");
  }
  const FiniteCategory& c = f.source.base();
  const FiniteCategory& d = f.target.base();
  check_components(t.gamma, c.objects, d.morphism_count(), "/gamma");
  ValidationReport report;
  report.merge(check_monad_functor(f), "source");
  report.merge(check_monad_functor(g), "target");
  if (!report.ok()) return report;
  for (Elem a = 0; a < c.objects; ++a)
    if (!typed(d, t.gamma[a], f.U.obj(a), g.U.obj(a))) report.add("gamma_boundary", {a});
  if (!report.ok()) return report;
  for (Elem x = 0; x < c.morphism_count(); ++x) {
    if (d.c(g.U(x), t.gamma[c.src(x)]) != d.c(t.gamma[c.tgt(x)], f.U(x))) report.add("gamma_naturality", {x});
  }
  const FinMonad& S = f.source;
  const FinMonad& T = f.target;
  for (Elem a = 0; a < c.objects; ++a) {
    if (d.c(g.phi[a], T.T(t.gamma[a])) != d.c(t.gamma[S.T.obj(a)], f.phi[a])) report.add("square", {a});
  }
  return report;
}

MonadFunctorTransformation identity_monad_transformation(const MonadFunctor& f) {
  MonadFunctorTransformation t{f, f, {}};
  for (Elem a = 0; a < f.source.base().objects; ++a) t.gamma.push_back(f.target.base().id(f.U.obj(a)));
  return t;
}

MonadFunctorTransformation compose_monad_transformations(const MonadFunctorTransformation& t2,
                                                         const MonadFunctorTransformation& t1) {
  if (!(t1.target == t2.source)) throw PreconditionError("transformations are not composable");
  MonadFunctorTransformation out{t1.source, t2.target, {}};
  for (Elem a = 0; a < t1.gamma.size(); ++a)
    out.gamma.push_back(t1.source.target.base().c(t2.gamma[a], t1.gamma[a]));
  return out;
}

// ---------------------------------------------------------------------------
// Collapse to one-object data

namespace {

std::vector<std::vector<Elem>> random_table(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> pick(0, n - 1);
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (auto& row : t)
    for (auto& x : row) x = pick(rng);
  return t;
}

FiniteCategory category_of(const FiniteMonoid& m) {
  return one_object_category(m.table().rows(), m.unit());
}

FinFunctor functor_of(const MonoidHom& h) {
  return FinFunctor{category_of(h.source), category_of(h.target), {0}, h.map};
}

nlohmann::json table_data(const FiniteMonoid& m) {
  return {{"mul", m.table().rows()}, {"unit", m.unit()}};
}

}  // namespace

std::vector<CollapseCase> terminal_collapse_cases(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<FiniteMonoid> pool;
  for (std::size_t n = 1; n <= 3; ++n)
    for (auto& m : enumerate_monoids(n, false)) pool.push_back(std::move(m));
  std::uniform_int_distribution<std::size_t> pick_pool(0, pool.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_size(1, 3);

  std::vector<CollapseCase> out;
  for (std::size_t i = 0; i < count; ++i) {
    CollapseCase c;
    switch (i % 3) {
      case 0: {
        // A table that is a monoid half of the time.
        FiniteMonoid m = pool[pick_pool(rng)];
        if (rng() % 2) {
          const std::size_t n = pick_size(rng);
          m = FiniteMonoid(random_table(n, rng), rng() % n);
        }
        c.kind = "monoid";
        c.degenerate_verdict = check_degenerate_category({kSingleObject, m}).ok() && check_monoid(m).ok();
        c.monad_verdict = check_monad(identity_monad(category_of(m))).ok();
        c.data = table_data(m);
        break;
      }
      case 1: {
        const FiniteMonoid& x = pool[pick_pool(rng)];
        const FiniteMonoid& y = pool[pick_pool(rng)];
        std::vector<Elem> map(x.size());
        std::uniform_int_distribution<Elem> pick(0, y.size() - 1);
        for (auto& v : map) v = pick(rng);
        if (rng() % 2) map = trivial_hom(x, y).map;
        MonoidHom h{x, y, map};
        c.kind = "hom";
        c.degenerate_verdict = check_hom(h).ok();
        // (U, 1) between identity monads; U is only a functor when h is a hom,
        // so the monad functor check carries the verdict through U.*.
        FinMonad s = identity_monad(category_of(x));
        FinMonad t = identity_monad(category_of(y));
        MonadFunctor f{s, t, functor_of(h), {y.unit()}};
        c.monad_verdict = check_monad_functor(f).ok();
        c.data = {{"source", table_data(x)}, {"target", table_data(y)}, {"map", map}};
        break;
      }
      default: {
        const FiniteMonoid& x = pool[pick_pool(rng)];
        const FiniteMonoid& y = pool[pick_pool(rng)];
        auto homs = enumerate_homs(x, y);
        std::uniform_int_distribution<std::size_t> pick_hom(0, homs.size() - 1);
        const MonoidHom& F = homs[pick_hom(rng)];
        const MonoidHom& G = homs[pick_hom(rng)];
        const Elem d = rng() % y.size();
        c.kind = "nat_trans";
        c.degenerate_verdict = check_nat_trans(DegNatTrans{F, G, d}).ok();
        FinMonad s = identity_monad(category_of(x));
        FinMonad t = identity_monad(category_of(y));
        MonadFunctor uf{s, t, functor_of(F), {y.unit()}};
        MonadFunctor ug{s, t, functor_of(G), {y.unit()}};
        c.monad_verdict = check_monad_transformation({uf, ug, {d}}).ok();
        c.data = {{"source", table_data(x)}, {"target", table_data(y)}, {"F", F.map}, {"G", G.map}, {"d", d}};
        break;
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace deglab
