#ifndef CYCLIN_MAPSEQ_HPP
#define CYCLIN_MAPSEQ_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "multimap.hpp"

namespace cyclin {

// Arity-indexed sequence of homogeneous multilinear maps on shifted modules;
// houses mu, f, xi. Truncated at arity `trunc`; arity-n identities depend
// only on components of arity <= n, so the truncation is exact.
template <class R>
struct MapSeq {
  using RT = ring_traits<R>;

  ModulePtr source, target;
  int degree = 0;
  int trunc = 8;
  std::vector<MultiMap<R>> comp;  // comp[n] has arity n; comp[0] optional role

  MapSeq() = default;
  MapSeq(ModulePtr s, ModulePtr t, int deg, int N)
      : source(std::move(s)), target(std::move(t)), degree(deg), trunc(N) {
    comp.reserve(trunc + 1);
    for (int n = 0; n <= trunc; ++n)
      comp.push_back(MultiMap<R>::algebra_map(source, target, n, deg));
  }
  static MapSeq identity(const ModulePtr& m, int N) {
    MapSeq f(m, m, 0, N);
    f.comp[1] = MultiMap<R>::identity(m);
    return f;
  }

  MultiMap<R>& operator[](int n) { return comp.at(n); }
  const MultiMap<R>& operator[](int n) const { return comp.at(n); }

  bool strict() const {
    for (int n = 0; n <= trunc; ++n)
      if (n != 1 && !comp[n].is_zero()) return false;
    return true;
  }
  bool has_arity_zero() const { return !comp[0].is_zero(); }

  MapSeq& operator+=(const MapSeq& o) {
    for (int n = 0; n <= std::min(trunc, o.trunc); ++n) comp[n] += o.comp[n];
    return *this;
  }
  MapSeq& operator-=(const MapSeq& o) {
    for (int n = 0; n <= std::min(trunc, o.trunc); ++n) comp[n] -= o.comp[n];
    return *this;
  }
  friend MapSeq operator-(MapSeq a, const MapSeq& b) { a -= b; return a; }
  friend MapSeq operator+(MapSeq a, const MapSeq& b) { a += b; return a; }

  std::string validate() const {
    for (int n = 0; n <= trunc; ++n) {
      std::string err = comp[n].validate();
      if (!err.empty()) return "arity " + std::to_string(n) + ": " + err;
    }
    return {};
  }
};

namespace detail {
// Enumerate compositions n = n_1 + ... + n_k with n_i >= 1 for fixed k.
inline void compositions(int n, int k, std::vector<int>& acc,
                         const std::function<void(const std::vector<int>&)>& fn) {
  if (k == 1) {
    if (n >= 1) {
      acc.push_back(n);
      fn(acc);
      acc.pop_back();
    }
    return;
  }
  for (int first = 1; first <= n - (k - 1); ++first) {
    acc.push_back(first);
    compositions(n - first, k - 1, acc, fn);
    acc.pop_back();
  }
}
}  // namespace detail

// (g <> f)_n = sum_k g_k o (f_{n_1} (x) ... (x) f_{n_k}). Requires f_0 = 0.
template <class R>
MapSeq<R> compose_diamond(const MapSeq<R>& g, const MapSeq<R>& f) {
  if (f.target.get() != g.source.get())
    throw std::invalid_argument("compose_diamond: module mismatch");
  if (f.has_arity_zero())
    throw std::invalid_argument("compose_diamond: f has a nonzero arity-0 component");
  int N = std::min(g.trunc, f.trunc);
  MapSeq<R> r(f.source, g.target, g.degree + f.degree, N);
  for (int n = 1; n <= N; ++n) {
    for (int k = 1; k <= n; ++k) {
      if (g[k].is_zero()) continue;
      std::vector<int> acc;
      detail::compositions(n, k, acc, [&](const std::vector<int>& parts) {
        std::vector<const MultiMap<R>*> slot;
        slot.reserve(k);
        for (int p : parts) {
          if (f[p].is_zero()) return;
          slot.push_back(&f[p]);
        }
        r[n] += tensor_then(g[k], slot);
      });
    }
  }
  return r;
}

// sum_{m+k-1 = n} sum_p  g_m o (id^{(x)p} (x) f_k (x) id^{(x)(m-1-p)}):
// the composition of g with the coderivation lift of f, in its arity-n
// component. Taking g = f = mu gives the A-infinity defect mu o ~mu.
template <class R>
MultiMap<R> codiff_compose(const MapSeq<R>& g, const MapSeq<R>& f, int n) {
  MultiMap<R> r = MultiMap<R>::algebra_map(f.source, g.target, n, g.degree + f.degree);
  for (int k = 0; k <= n; ++k) {
    int m = n - k + 1;
    if (m < 1 || m > g.trunc || k > f.trunc) continue;
    if (g[m].is_zero() || f[k].is_zero()) continue;
    auto ids = slot_identities(g[m]);
    for (int p = 0; p < m; ++p) r += interior(g[m], f[k], p, ids);
  }
  return r;
}

// Materialized arity-n component of the coderivation lift ~f valued in the
// requested output grade. Cost grows with dim^(grade-1); intended for tests
// and small-arity inspection, not for inner loops.
template <class R>
MultiMap<R> coderivation_component(const MapSeq<R>& f, int n, int grade) {
  using RT = ring_traits<R>;
  if (n > f.trunc) throw std::invalid_argument("coderivation_component: arity overflow");
  int k = n - grade + 1;
  const ModulePtr& V = f.source;
  MultiMap<R> r(std::vector<ModulePtr>(n, V), std::vector<ModulePtr>(grade, V), f.degree);
  if (k < 0 || k > n || k > f.trunc || f[k].is_zero()) return r;
  int d = V->dim();
  for (int pos = 0; pos + 1 <= grade; ++pos) {
    int i = pos, j = grade - 1 - pos;
    // enumerate identity decorations around each f_k entry
    std::vector<int> fill(i + j, 0);
    auto emit = [&](const Tuple& fin, const Tuple& fout, const R& c) {
      Tuple in, out;
      in.reserve(n);
      out.reserve(grade);
      int idsum = 0;
      for (int s = 0; s < i; ++s) {
        in.push_back(fill[s]);
        out.push_back(fill[s]);
        idsum += V->deg1(fill[s]);
      }
      in.insert(in.end(), fin.begin(), fin.end());
      out.insert(out.end(), fout.begin(), fout.end());
      for (int s = 0; s < j; ++s) {
        in.push_back(fill[i + s]);
        out.push_back(fill[i + s]);
      }
      R v = (static_cast<long>(f.degree) * idsum) % 2 ? RT::from_int(-1) * c : c;
      r.add_entry(in, out, v);
    };
    // iterate over all fillings of the identity slots
    std::function<void()> loop = [&]() {
      for (const auto& [fin, row] : f[k].tab)
        for (const auto& [fout, c] : row) emit(fin, fout, c);
    };
    if (i + j == 0) {
      loop();
    } else {
      std::function<void(int)> rec = [&](int s) {
        if (s == i + j) {
          loop();
          return;
        }
        for (int b = 0; b < d; ++b) {
          fill[s] = b;
          rec(s + 1);
        }
      };
      rec(0);
    }
  }
  return r;
}

// Materialized (n, k) component of the cohomomorphism lift ^f:
// sum over n_1 + ... + n_k = n of f_{n_1} (x) ... (x) f_{n_k}.
template <class R>
MultiMap<R> cohom_component(const MapSeq<R>& f, int n, int k) {
  using RT = ring_traits<R>;
  if (f.has_arity_zero())
    throw std::invalid_argument("cohom_component: f has a nonzero arity-0 component");
  if (n > f.trunc) throw std::invalid_argument("cohom_component: arity overflow");
  const ModulePtr& V = f.source;
  const ModulePtr& W = f.target;
  MultiMap<R> r(std::vector<ModulePtr>(n, V), std::vector<ModulePtr>(k, W), k * f.degree);
  std::vector<int> acc;
  detail::compositions(n, k, acc, [&](const std::vector<int>& parts) {
    for (int p : parts)
      if (f[p].is_zero()) return;
    // sparse product of the k tables with Koszul signs
    std::function<void(int, Tuple, Tuple, R, int)> rec = [&](int slot, Tuple in, Tuple out, R c,
                                                             int degsum) {
      if (slot == k) {
        r.add_entry(in, out, c);
        return;
      }
      for (const auto& [fin, row] : f[parts[slot]].tab) {
        int dsum = f[parts[slot]].in_deg(fin);
        for (const auto& [fout, v] : row) {
          Tuple nin = in, nout = out;
          nin.insert(nin.end(), fin.begin(), fin.end());
          nout.insert(nout.end(), fout.begin(), fout.end());
          R nc = c * v;
          if ((static_cast<long>(f.degree) * degsum) % 2) nc = RT::from_int(-1) * nc;
          rec(slot + 1, std::move(nin), std::move(nout), std::move(nc), degsum + dsum);
        }
      }
    };
    rec(0, {}, {}, RT::one(), 0);
  });
  return r;
}

// Materialized component of the module-valued coderivation lift of a
// Hochschild cochain xi: MapSeq(A, M): the piece of input arity n landing in
// A[1]^{(x)i} (x) M[1] (x) A[1]^{(x)j}, i.e. id^i (x) xi_{n-i-j} (x) id^j.
// Arity-0 components insert the constant xi_0(1).
template <class R>
MultiMap<R> hochschild_lift_component(const MapSeq<R>& xi, int i, int j, int n) {
  using RT = ring_traits<R>;
  if (i < 0 || j < 0 || n - i - j < 0 || n > xi.trunc + i + j)
    throw std::invalid_argument("hochschild_lift_component: arity overflow");
  int k = n - i - j;
  const ModulePtr& A = xi.source;
  const ModulePtr& M = xi.target;
  std::vector<ModulePtr> dst(static_cast<std::size_t>(i), A);
  dst.push_back(M);
  dst.insert(dst.end(), static_cast<std::size_t>(j), A);
  MultiMap<R> r(std::vector<ModulePtr>(n, A), std::move(dst), xi.degree);
  if (k > xi.trunc || xi[k].is_zero()) return r;
  int d = A->dim();
  std::vector<int> fill(i + j, 0);
  auto emit = [&]() {
    int idsum = 0;
    for (int s = 0; s < i; ++s) idsum += A->deg1(fill[s]);
    for (const auto& [fin, row] : xi[k].tab)
      for (const auto& [fout, c] : row) {
        Tuple in, out;
        for (int s = 0; s < i; ++s) {
          in.push_back(fill[s]);
          out.push_back(fill[s]);
        }
        in.insert(in.end(), fin.begin(), fin.end());
        out.push_back(fout[0]);
        for (int s = 0; s < j; ++s) {
          in.push_back(fill[i + s]);
          out.push_back(fill[i + s]);
        }
        R v = (static_cast<long>(xi.degree) * idsum) % 2 ? RT::from_int(-1) * c : c;
        r.add_entry(in, out, v);
      }
  };
  if (i + j == 0) {
    emit();
  } else {
    std::function<void(int)> rec = [&](int s) {
      if (s == i + j) {
        emit();
        return;
      }
      for (int b = 0; b < d; ++b) {
        fill[s] = b;
        rec(s + 1);
      }
    };
    rec(0);
  }
  return r;
}

// Growth-constant certificate: C_est = (1+eps) * max_n ||f_n||^{1/n} with the
// per-arity profile; the inflation makes ||f_n|| < C^n strict at every arity.
struct GrowthFit {
  double C = 0;
  std::vector<double> per_arity;  // ||f_n||^{1/n} for n = 1..N
};

template <class R>
GrowthFit fit_growth_constant(const MapSeq<R>& f, double eps = 1e-9) {
  GrowthFit g;
  g.per_arity.assign(static_cast<std::size_t>(f.trunc) + 1, 0.0);
  double best = 0;
  for (int n = 1; n <= f.trunc; ++n) {
    double nn = op_norm(f[n]);
    g.per_arity[n] = nn > 0 ? std::pow(nn, 1.0 / n) : 0.0;
    best = std::max(best, g.per_arity[n]);
  }
  g.C = best * (1.0 + eps);
  return g;
}

}  // namespace cyclin

#endif
