#ifndef CYCLIN_AINFTY_HPP
#define CYCLIN_AINFTY_HPP

#include <optional>
#include <sstream>

#include "contraction.hpp"
#include "errors.hpp"
#include "mapseq.hpp"
#include "trees.hpp"

namespace cyclin {

// Unshifted differential and product of a DG algebra; kept alongside the
// shifted A-infinity structure for the sandwich-morphism constructions. The
// tables act on the unshifted module, Koszul signs are handled by hand where
// these are used.
template <class R>
struct DgaData {
  MultiMap<R> diff;  // degree +1 on the unshifted module
  MultiMap<R> mult;  // degree 0
};

template <class R>
struct AInfinity {
  ModulePtr module;
  MapSeq<R> mu;  // degree +1, mu_0 = 0
  std::vector<Element<R>> units;  // one per idempotent when unital
  std::optional<DgaData<R>> dga;
  std::optional<double> growth_C;

  int trunc() const { return mu.trunc; }
  bool has_units() const { return !units.empty(); }
};

struct ResidualReport {
  std::vector<double> per_arity;  // index = arity
  double worst() const {
    double w = 0;
    for (double v : per_arity) w = std::max(w, v);
    return w;
  }
  bool pass(double tol) const { return worst() <= tol; }
};

// Per-arity max norm of mu o ~mu; zero iff the A-infinity relations hold at
// the truncation.
template <class R>
ResidualReport check_ainfty(const AInfinity<R>& A) {
  ResidualReport rep;
  rep.per_arity.assign(A.trunc() + 1, 0.0);
  for (int n = 1; n <= A.trunc(); ++n) rep.per_arity[n] = max_row_norm(codiff_compose(A.mu, A.mu, n));
  return rep;
}

// Per-arity residual of mu_B o ^f - f o ~mu_A.
template <class R>
ResidualReport check_morphism(const MapSeq<R>& f, const AInfinity<R>& A, const AInfinity<R>& B) {
  if (f.source.get() != A.module.get() || f.target.get() != B.module.get())
    throw PreconditionError("check_morphism: module mismatch");
  if (f.has_arity_zero()) throw PreconditionError("check_morphism: f_0 must vanish");
  ResidualReport rep;
  rep.per_arity.assign(std::min(f.trunc, std::min(A.trunc(), B.trunc())) + 1, 0.0);
  MapSeq<R> left = compose_diamond(B.mu, f);
  for (int n = 1; n < static_cast<int>(rep.per_arity.size()); ++n) {
    MultiMap<R> resid = left[n] - codiff_compose(f, A.mu, n);
    rep.per_arity[n] = max_row_norm(resid);
  }
  return rep;
}

namespace detail {
template <class R>
std::string fmt_tuple(const ModulePtr& m, const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += m->basis[t[i]].name;
  }
  return s + ")";
}
}  // namespace detail

// Builds the shifted A-infinity structure of a DG algebra:
//   mu_1 = -s d s^{-1},   mu_2 = -s (.) (s^{-1} (x) s^{-1}),
// after verifying d^2 = 0, the graded Leibniz rule and associativity on the
// whole basis (witness tuple reported on failure).
template <class R>
AInfinity<R> from_dga(const ModulePtr& m, const MultiMap<R>& d, const MultiMap<R>& mult, int N,
                      double tol = 0.0) {
  using RT = ring_traits<R>;
  auto unshifted_basis = [&](int i) {
    Element<R> e(m, false);
    e.add(i, RT::one());
    return e;
  };
  // d^2 = 0
  for (int i = 0; i < m->dim(); ++i) {
    auto v = d.apply({unshifted_basis(i)});
    auto dd = d.apply({v});
    if (l1_norm(dd) > tol)
      throw PreconditionError("from_dga: d^2 != 0 at basis vector " + m->basis[i].name);
  }
  // graded Leibniz: d(xy) = dx . y + (-1)^{|x|} x . dy  (unshifted degrees)
  for (int x = 0; x < m->dim(); ++x)
    for (int y = 0; y < m->dim(); ++y) {
      auto ex = unshifted_basis(x), ey = unshifted_basis(y);
      auto lhs = d.apply({mult.apply({ex, ey})});
      auto rhs = mult.apply({d.apply({ex}), ey});
      auto t2 = mult.apply({ex, d.apply({ey})});
      R sgn = RT::from_int(m->deg(x) % 2 ? -1 : 1);
      rhs = rhs + sgn * t2;
      if (l1_norm(lhs - rhs) > tol)
        throw PreconditionError("from_dga: Leibniz fails at (" + m->basis[x].name + "," +
                                m->basis[y].name + ")");
    }
  // associativity
  for (int x = 0; x < m->dim(); ++x)
    for (int y = 0; y < m->dim(); ++y)
      for (int z = 0; z < m->dim(); ++z) {
        auto ex = unshifted_basis(x), ey = unshifted_basis(y), ez = unshifted_basis(z);
        auto lhs = mult.apply({mult.apply({ex, ey}), ez});
        auto rhs = mult.apply({ex, mult.apply({ey, ez})});
        if (l1_norm(lhs - rhs) > tol)
          throw PreconditionError("from_dga: associativity fails at (" + m->basis[x].name + "," +
                                  m->basis[y].name + "," + m->basis[z].name + ")");
      }

  AInfinity<R> A;
  A.module = m;
  A.mu = MapSeq<R>(m, m, 1, N);
  for (const auto& [in, row] : d.tab)
    for (const auto& [out, c] : row) A.mu[1].add_entry(in, out, RT::from_int(-1) * c);
  for (const auto& [in, row] : mult.tab) {
    // (s^{-1} (x) s^{-1})(sx (x) sy) = (-1)^{|x|-1} x (x) y, then -s(x.y)
    R sgn = RT::from_int(m->deg(in[0]) % 2 ? -1 : 1);
    for (const auto& [out, c] : row) A.mu[2].add_entry(in, out, sgn * c);
  }
  A.dga = DgaData<R>{d, mult};
  return A;
}

struct UnitReport {
  bool ok = true;
  std::string witness;
};

// Strict unit axioms on the stored unit vectors; higher products with the
// unit are checked sparsely via partial application.
template <class R>
UnitReport check_unit_strict(const AInfinity<R>& A, double tol = 0.0) {
  using RT = ring_traits<R>;
  UnitReport rep;
  if (!A.has_units()) {
    rep.ok = false;
    rep.witness = "no unit declared";
    return rep;
  }
  const ModulePtr& m = A.module;
  for (std::size_t v = 0; v < A.units.size(); ++v) {
    const auto& u = A.units[v];
    for (int a = 0; a < m->dim(); ++a) {
      Element<R> ea = Element<R>::basis(m, a);
      Element<R> la(m);
      if (m->basis[a].src == static_cast<int>(v)) la.add(a, RT::one());
      auto left = A.mu[2].apply({u, ea});
      if (l1_norm(left - la) > tol) {
        rep.ok = false;
        rep.witness = "mu2(1,"+ m->basis[a].name + ") != a";
        return rep;
      }
      Element<R> ar(m);
      if (m->basis[a].tgt == static_cast<int>(v))
        ar.add(a, RT::from_int((m->deg1(a) + 1) % 2 ? -1 : 1));
      auto right = A.mu[2].apply({ea, u});
      if (l1_norm(right - ar) > tol) {
        rep.ok = false;
        rep.witness = "mu2(" + m->basis[a].name + ",1) != (-1)^{|a|+1} a";
        return rep;
      }
    }
    for (int n = 1; n <= A.trunc(); ++n) {
      if (n == 2 || A.mu[n].is_zero()) continue;
      for (int pos = 0; pos < n; ++pos) {
        auto plugged = partial_apply(A.mu[n], pos, u);
        if (max_row_norm(plugged) > tol) {
          rep.ok = false;
          rep.witness = "mu_" + std::to_string(n) + " does not vanish on the unit (slot " +
                        std::to_string(pos) + ")";
          return rep;
        }
      }
    }
  }
  return rep;
}

// Weak (cohomological) unit: the relations hold after passing to
// mu_1-cohomology, via the deterministic splitting.
template <class R>
UnitReport check_unit_weak(const AInfinity<R>& A, double tol = 0.0) {
  using RT = ring_traits<R>;
  UnitReport rep;
  if (!A.has_units()) {
    rep.ok = false;
    rep.witness = "no unit declared";
    return rep;
  }
  auto cd = cohomology_splitting(A.mu[1], tol);
  auto closed = [&](const Element<R>& x) { return l1_norm(A.mu[1].apply({x})) <= tol; };
  auto exact = [&](const Element<R>& x) { return closed(x) && l1_norm(cd.P1.apply({x})) <= tol; };
  for (std::size_t v = 0; v < A.units.size(); ++v) {
    const auto& u = A.units[v];
    if (!closed(u)) {
      rep.ok = false;
      rep.witness = "unit image is not closed";
      return rep;
    }
    for (int h = 0; h < cd.H->dim(); ++h) {
      Element<R> ih = cd.I1.apply({Element<R>::basis(cd.H, h)});
      Element<R> lh = cd.H->basis[h].src == static_cast<int>(v) ? ih : Element<R>(A.module);
      if (!exact(A.mu[2].apply({u, ih}) - lh)) {
        rep.ok = false;
        rep.witness = "weak left unit fails on class " + cd.H->basis[h].name;
        return rep;
      }
      R sgn = RT::from_int((cd.H->deg1(h) + 1) % 2 ? -1 : 1);
      Element<R> hr = cd.H->basis[h].tgt == static_cast<int>(v) ? sgn * ih : Element<R>(A.module);
      if (!exact(A.mu[2].apply({ih, u}) - hr)) {
        rep.ok = false;
        rep.witness = "weak right unit fails on class " + cd.H->basis[h].name;
        return rep;
      }
    }
  }
  return rep;
}

enum class UnitFlavor { Strict, Weak };

template <class R>
UnitReport check_unit(const AInfinity<R>& A, UnitFlavor flavor, double tol = 0.0) {
  return flavor == UnitFlavor::Strict ? check_unit_strict(A, tol) : check_unit_weak(A, tol);
}

// Planar-tree inverse of a pre-morphism with invertible first component:
// summing the per-tree maps g_T = -g_1 f_k (g_{T_1} (x) ... (x) g_{T_k})
// over the root decomposition collapses to a recursion by arity.
template <class K>
MapSeq<K> tree_inverse(const MapSeq<K>& f, const MultiMap<K>& g1, double tol = 0.0) {
  using RT = ring_traits<K>;
  {
    MultiMap<K> gf = tensor_then(g1, {&f[1]});
    MultiMap<K> fg = tensor_then(f[1], {&g1});
    MultiMap<K> idA = MultiMap<K>::identity(f.source);
    MultiMap<K> idB = MultiMap<K>::identity(f.target);
    if (max_row_norm(gf - idA) > tol || max_row_norm(fg - idB) > tol)
      throw PreconditionError("tree_inverse: g1 is not a two-sided inverse of f_1");
  }
  MapSeq<K> g(f.target, f.source, 0, f.trunc);
  g[1] = g1;
  for (int n = 2; n <= f.trunc; ++n) {
    MultiMap<K> S = MultiMap<K>::algebra_map(f.target, f.target, n, 0);
    for (int k = 2; k <= n; ++k) {
      if (f[k].is_zero()) continue;
      std::vector<int> acc;
      detail::compositions(n, k, acc, [&](const std::vector<int>& parts) {
        std::vector<const MultiMap<K>*> slot;
        for (int p : parts) {
          if (g[p].is_zero()) return;
          slot.push_back(&g[p]);
        }
        S += tensor_then(f[k], slot);
      });
    }
    if (!S.is_zero()) g[n] = RT::from_int(-1) * tensor_then(g1, {&S});
  }
  return g;
}

struct InverseGrowthReport {
  double C = 0;        // working constant: max(growth of f, ||g_1||, 1), inflated
  double q = 0;        // empirical |O(n)|^{1/n} over the window
  double qC4 = 0;      // the implied geometric constant
  bool bounds_hold = true;      // ||g_n|| <= |O(n)| C^{4n} at every arity
  bool ill_conditioned = false; // ||g_1|| makes C unusually large
  std::vector<double> ratio;    // ||g_n|| / (|O(n)| C^{4n})
};

template <class K>
InverseGrowthReport certify_inverse_growth(const MapSeq<K>& f, const MapSeq<K>& g,
                                           double eps = 1e-9) {
  InverseGrowthReport rep;
  GrowthFit ff = fit_growth_constant(f, eps);
  double g1n = op_norm(g[1]);
  rep.C = std::max({ff.C, g1n, 1.0}) * (1.0 + eps);
  rep.ill_conditioned = g1n > 1e5;
  auto counts = schroeder_counts(f.trunc);
  rep.ratio.assign(f.trunc + 1, 0.0);
  double q = 0;
  for (int n = 1; n <= f.trunc; ++n) {
    q = std::max(q, std::pow(static_cast<double>(counts[n]), 1.0 / n));
    double bound = static_cast<double>(counts[n]) * std::pow(rep.C, 4.0 * n);
    double have = op_norm(g[n]);
    rep.ratio[n] = bound > 0 ? have / bound : 0.0;
    if (have > bound) rep.bounds_hold = false;
  }
  rep.q = q;
  rep.qC4 = q * std::pow(rep.C, 4.0);
  return rep;
}

// H(f) = P_B <> f <> I_A, with the quasi-isomorphism flag decided by
// invertibility of the arity-1 part on the minimal models.
template <class K>
struct InducedMorphism {
  MapSeq<K> map;
  bool iso = false;
};

template <class K>
InducedMorphism<K> induced_minimal_morphism(const MapSeq<K>& f, const MapSeq<K>& PB,
                                            const MapSeq<K>& IA, double tol = 0.0) {
  InducedMorphism<K> r{compose_diamond(PB, compose_diamond(f, IA)), false};
  try {
    invert_map(r.map[1], nullptr, tol);
    r.iso = true;
  } catch (const SingularMatrix&) {
    r.iso = false;
  }
  return r;
}

}  // namespace cyclin

#endif
