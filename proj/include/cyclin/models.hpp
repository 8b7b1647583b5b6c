#ifndef CYCLIN_MODELS_HPP
#define CYCLIN_MODELS_HPP

#include <random>
#include <string>

#include "ainfty.hpp"

namespace cyclin {

// Exterior algebra on d generators with the wedge product, basis e_S indexed
// by subsets S of {1..d}; the empty set gives the unit "e".
inline std::string wedge_name(unsigned mask) {
  std::string s = "e";
  for (int b = 0; b < 16; ++b)
    if (mask & (1u << b)) s += std::to_string(b + 1);
  return s;
}

inline int wedge_sign(unsigned a, unsigned b) {
  // sign of merging two disjoint index sets: count transpositions
  int swaps = 0;
  for (int i = 0; i < 16; ++i)
    if (b & (1u << i)) {
      unsigned higher = a >> (i + 1);
      swaps += __builtin_popcount(higher);
    }
  return swaps % 2 ? -1 : 1;
}

template <class R>
AInfinity<R> wedge_algebra(int d, int N) {
  using RT = ring_traits<R>;
  BaseRing base;
  std::vector<BasisVec> vecs;
  for (unsigned m = 0; m < (1u << d); ++m)
    vecs.push_back({wedge_name(m), __builtin_popcount(m), 0, 0});
  ModulePtr mod = make_module(base, vecs);
  MultiMap<R> diff({mod}, {mod}, 1);  // zero differential
  MultiMap<R> mult({mod, mod}, {mod}, 0);
  for (unsigned a = 0; a < (1u << d); ++a)
    for (unsigned b = 0; b < (1u << d); ++b) {
      if (a & b) continue;
      int ia = mod->index_of(wedge_name(a));
      int ib = mod->index_of(wedge_name(b));
      int ic = mod->index_of(wedge_name(a | b));
      mult.add_entry({ia, ib}, {ic}, RT::from_int(wedge_sign(a, b)));
    }
  AInfinity<R> A = from_dga(mod, diff, mult, N);
  Element<R> unit(mod);
  unit.add(mod->index_of("e"), RT::one());
  A.units = {unit};
  return A;
}

// Two-dimensional DGA: |a| = 0, |b| = 1, da = b, a.a = a, a.b = b, the other
// products zero; the unique Leibniz-consistent structure with da = b and
// a.a = a.
template <class R>
AInfinity<R> two_dim_dga(int N) {
  using RT = ring_traits<R>;
  BaseRing base;
  ModulePtr mod = make_module(base, {{"a", 0, 0, 0}, {"b", 1, 0, 0}});
  MultiMap<R> diff({mod}, {mod}, 1);
  diff.add_entry({0}, {1}, RT::one());
  MultiMap<R> mult({mod, mod}, {mod}, 0);
  mult.add_entry({0, 0}, {0}, RT::one());
  mult.add_entry({0, 1}, {1}, RT::one());
  return from_dga(mod, diff, mult, N);
}

// Two-term acyclic complex c0 -> c1 in degrees (k, k+1) with zero products.
template <class R>
AInfinity<R> acyclic_cone(int k, int N) {
  using RT = ring_traits<R>;
  BaseRing base;
  ModulePtr mod = make_module(base, {{"c0", k, 0, 0}, {"c1", k + 1, 0, 0}});
  MultiMap<R> diff({mod}, {mod}, 1);
  diff.add_entry({0}, {1}, RT::one());
  MultiMap<R> mult({mod, mod}, {mod}, 0);
  return from_dga(mod, diff, mult, N);
}

// core (+) two-term acyclic cone, zero cross products; weakly unital via the
// core unit extended by zero, quasi-isomorphic to the core via inclusion.
template <class R>
AInfinity<R> make_cone_extension(const AInfinity<R>& core, int cone_degree = 0) {
  using RT = ring_traits<R>;
  if (!core.dga) throw PreconditionError("make_cone_extension: core must carry DGA data");
  std::vector<BasisVec> vecs = core.module->basis;
  vecs.push_back({"k0", cone_degree, 0, 0});
  vecs.push_back({"k1", cone_degree + 1, 0, 0});
  ModulePtr mod = make_module(core.module->base, vecs);
  int off = core.module->dim();
  MultiMap<R> diff({mod}, {mod}, 1);
  for (const auto& [in, row] : core.dga->diff.tab)
    for (const auto& [out, c] : row) diff.add_entry(in, out, c);
  diff.add_entry({off}, {off + 1}, RT::one());
  MultiMap<R> mult({mod, mod}, {mod}, 0);
  for (const auto& [in, row] : core.dga->mult.tab)
    for (const auto& [out, c] : row) mult.add_entry(in, out, c);
  AInfinity<R> A = from_dga(mod, diff, mult, core.trunc());
  if (core.has_units()) {
    Element<R> unit(mod);
    for (const auto& [i, c] : core.units[0].coeff) unit.add(i, c);
    A.units = {unit};
  }
  return A;
}

// Strict inclusion of the core into its cone extension.
template <class R>
MapSeq<R> cone_inclusion(const AInfinity<R>& core, const AInfinity<R>& ext) {
  using RT = ring_traits<R>;
  MapSeq<R> f(core.module, ext.module, 0, core.trunc());
  for (int i = 0; i < core.module->dim(); ++i)
    f[1].add_entry({i}, {ext.module->index_of(core.module->basis[i].name)}, RT::one());
  return f;
}

// Deterministic pseudo-random scalars for property tests.
template <class R>
R random_scalar(std::mt19937& rng) {
  using RT = ring_traits<R>;
  std::uniform_int_distribution<int> num(-4, 4);
  if constexpr (RT::is_path) {
    return RT::from_scalar(random_scalar<typename RT::scalar>(rng));
  } else if constexpr (std::is_same_v<R, GaussQ>) {
    std::uniform_int_distribution<int> den(1, 3);
    return GaussQ{mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng))};
  } else {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return R{u(rng), u(rng)};
  }
}

// Random degree-homogeneous MapSeq with f_1 = id (an analytic pre-iso shape);
// density controls table sparsity.
template <class K>
MapSeq<K> random_pre_iso(const ModulePtr& m, int N, std::mt19937& rng, double density = 0.3,
                         int max_arity = -1) {
  MapSeq<K> f = MapSeq<K>::identity(m, N);
  if (max_arity < 0) max_arity = N;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 2; n <= std::min(N, max_arity); ++n) {
    // enumerate admissible tuples and outputs of the right degree
    std::function<void(Tuple&)> rec = [&](Tuple& t) {
      if (static_cast<int>(t.size()) == n) {
        int want = f[n].in_deg(t);  // degree-0 map
        for (int o = 0; o < m->dim(); ++o) {
          if (m->deg1(o) != want) continue;
          if (u(rng) < density) f[n].add_entry(t, {o}, random_scalar<K>(rng));
        }
        return;
      }
      for (int b = 0; b < m->dim(); ++b) {
        t.push_back(b);
        rec(t);
        t.pop_back();
      }
    };
    Tuple t;
    rec(t);
  }
  return f;
}

}  // namespace cyclin

#endif
