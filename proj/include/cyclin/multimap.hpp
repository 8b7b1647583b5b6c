#ifndef CYCLIN_MULTIMAP_HPP
#define CYCLIN_MULTIMAP_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "base.hpp"
#include "par.hpp"

namespace cyclin {

using Tuple = std::vector<int>;

// Homogeneous multilinear map between shifted tensor products,
//   src[0][1] (x) ... (x) src[n-1][1]  ->  dst[0][1] (x) ... (x) dst[g-1][1],
// stored as a sparse table. dst is usually a single module; an empty dst
// means scalar-valued (functionals), a longer dst is used for bar-construction
// components. All Koszul signs are computed from shifted degrees.
template <class R>
struct MultiMap {
  using RT = ring_traits<R>;

  std::vector<ModulePtr> src;
  std::vector<ModulePtr> dst;
  int degree = 0;
  std::map<Tuple, std::map<Tuple, R>> tab;

  MultiMap() = default;
  MultiMap(std::vector<ModulePtr> s, std::vector<ModulePtr> d, int deg)
      : src(std::move(s)), dst(std::move(d)), degree(deg) {}

  // Uniform-source algebra map V[1]^{(x)n} -> W[1].
  static MultiMap algebra_map(const ModulePtr& v, const ModulePtr& w, int arity, int deg) {
    return MultiMap(std::vector<ModulePtr>(arity, v), {w}, deg);
  }
  static MultiMap identity(const ModulePtr& v) {
    MultiMap m({v}, {v}, 0);
    for (int i = 0; i < v->dim(); ++i) m.tab[{i}][{i}] = RT::one();
    return m;
  }

  int arity() const { return static_cast<int>(src.size()); }
  bool is_zero() const { return tab.empty(); }
  bool scalar_valued() const { return dst.empty(); }

  int in_deg(const Tuple& t) const {
    int d = 0;
    for (std::size_t i = 0; i < t.size(); ++i) d += src[i]->deg1(t[i]);
    return d;
  }
  int out_deg(const Tuple& t) const {
    int d = 0;
    for (std::size_t i = 0; i < t.size(); ++i) d += dst[i]->deg1(t[i]);
    return d;
  }

  void add_entry(const Tuple& in, const Tuple& out, const R& c) {
    if (RT::is_zero(c)) return;
    auto& row = tab[in];
    auto it = row.find(out);
    if (it == row.end()) {
      row.emplace(out, c);
    } else {
      it->second += c;
      if (RT::is_zero(it->second)) {
        row.erase(it);
        if (row.empty()) tab.erase(in);
      }
    }
  }
  void add_scaled(const MultiMap& o, const R& s) {
    for (const auto& [in, row] : o.tab)
      for (const auto& [out, c] : row) add_entry(in, out, s * c);
  }
  MultiMap& operator+=(const MultiMap& o) {
    add_scaled(o, RT::one());
    return *this;
  }
  MultiMap& operator-=(const MultiMap& o) {
    add_scaled(o, RT::from_int(-1));
    return *this;
  }
  friend MultiMap operator+(MultiMap a, const MultiMap& b) { a += b; return a; }
  friend MultiMap operator-(MultiMap a, const MultiMap& b) { a -= b; return a; }
  friend MultiMap operator*(const R& s, const MultiMap& a) {
    MultiMap r(a.src, a.dst, a.degree);
    r.add_scaled(a, s);
    return r;
  }

  // f(e_{t}) as a sparse element; requires a single-module target.
  Element<R> apply_basis(const Tuple& t) const {
    if (dst.size() != 1) throw std::logic_error("apply_basis: needs single-module target");
    Element<R> e(dst[0]);
    auto it = tab.find(t);
    if (it != tab.end())
      for (const auto& [out, c] : it->second) e.add(out[0], c);
    return e;
  }

  // Multilinear evaluation on sparse elements (single-module target).
  Element<R> apply(const std::vector<Element<R>>& xs) const {
    if (static_cast<int>(xs.size()) != arity()) throw std::invalid_argument("apply: arity mismatch");
    if (dst.size() != 1) throw std::logic_error("apply: needs single-module target");
    Element<R> acc(dst[0]);
    Tuple t(xs.size());
    std::vector<R> prod;
    rec_apply(xs, 0, RT::one(), t, acc);
    return acc;
  }

  // Checks every entry for degree homogeneity and idempotent composability.
  // Returns an explanatory string for the first violation, empty if clean.
  std::string validate() const {
    for (const auto& [in, row] : tab) {
      if (static_cast<int>(in.size()) != arity()) return "entry tuple length mismatch";
      for (std::size_t i = 0; i + 1 < in.size(); ++i)
        if (src[i]->basis[in[i]].tgt != src[i + 1]->basis[in[i + 1]].src)
          return "idempotent mismatch inside input tuple";
      for (const auto& [out, c] : row) {
        (void)c;
        if (out.size() != dst.size()) return "output tuple length mismatch";
        for (std::size_t i = 0; i + 1 < out.size(); ++i)
          if (dst[i]->basis[out[i]].tgt != dst[i + 1]->basis[out[i + 1]].src)
            return "idempotent mismatch inside output tuple";
        if (!in.empty() && !out.empty()) {
          if (src.front()->basis[in.front()].src != dst.front()->basis[out.front()].src)
            return "source idempotent not preserved";
          if (src.back()->basis[in.back()].tgt != dst.back()->basis[out.back()].tgt)
            return "target idempotent not preserved";
        }
        if (out_deg(out) != in_deg(in) + degree) return "degree bookkeeping violated";
      }
    }
    return {};
  }

 private:
  void rec_apply(const std::vector<Element<R>>& xs, std::size_t i, const R& c, Tuple& t,
                 Element<R>& acc) const {
    if (i == xs.size()) {
      auto it = tab.find(t);
      if (it != tab.end())
        for (const auto& [out, v] : it->second) acc.add(out[0], c * v);
      return;
    }
    for (const auto& [b, v] : xs[i].coeff) {
      t[i] = b;
      rec_apply(xs, i + 1, c * v, t, acc);
    }
  }
};

// max over stored input tuples of the l1 norm of the output. Under the basis
// l1 norm this is the exact operator norm (projective tensor norm on inputs).
template <class R>
double op_norm(const MultiMap<R>& f) {
  std::vector<const std::map<Tuple, R>*> rows;
  rows.reserve(f.tab.size());
  for (const auto& [in, row] : f.tab) {
    (void)in;
    rows.push_back(&row);
  }
  return par::max_over(rows.size(), [&](std::size_t i) {
    double s = 0;
    for (const auto& [out, c] : *rows[i]) {
      (void)out;
      s += ring_traits<R>::abs_bound(c);
    }
    return s;
  });
}

// Reverse index of a single-target map: output basis -> entries hitting it.
template <class R>
struct ReverseIndex {
  struct Hit {
    const Tuple* in;
    R coeff;
    int in_deg;
  };
  std::vector<std::vector<Hit>> by_out;  // indexed by target basis

  ReverseIndex() = default;
  explicit ReverseIndex(const MultiMap<R>& f) {
    if (f.dst.size() != 1) throw std::logic_error("ReverseIndex: needs single-module target");
    by_out.resize(f.dst[0]->dim());
    for (const auto& [in, row] : f.tab) {
      int d = f.in_deg(in);
      for (const auto& [out, c] : row) by_out[out[0]].push_back({&in, c, d});
    }
  }
};

// The composition kernel: g o (parts[0] (x) ... (x) parts[k-1]) with Koszul
// signs from commuting each part past the input blocks to its left. Parts
// must have single-module targets matching g's source slots. Parallel over
// the entries of g with a deterministic merge.
template <class R>
MultiMap<R> tensor_then(const MultiMap<R>& g, const std::vector<const MultiMap<R>*>& parts) {
  using RT = ring_traits<R>;
  if (static_cast<int>(parts.size()) != g.arity())
    throw std::invalid_argument("tensor_then: slot count mismatch");
  int deg = g.degree;
  std::vector<ModulePtr> src;
  std::vector<ReverseIndex<R>> rev;
  rev.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const MultiMap<R>& p = *parts[i];
    if (p.dst.size() != 1 || p.dst[0].get() != g.src[i].get())
      throw std::invalid_argument("tensor_then: part target does not match slot");
    deg += p.degree;
    src.insert(src.end(), p.src.begin(), p.src.end());
    rev.emplace_back(p);
  }
  MultiMap<R> result(std::move(src), g.dst, deg);

  std::vector<const std::pair<const Tuple, std::map<Tuple, R>>*> gentries;
  gentries.reserve(g.tab.size());
  for (const auto& e : g.tab) gentries.push_back(&e);

  auto locals = par::map_indexed<std::map<Tuple, std::map<Tuple, R>>>(
      gentries.size(), [&](std::size_t gi) {
        std::map<Tuple, std::map<Tuple, R>> local;
        const Tuple& gin = gentries[gi]->first;
        const auto& grow = gentries[gi]->second;
        // product over per-slot hits
        std::vector<std::size_t> pick(parts.size(), 0);
        for (std::size_t i = 0; i < parts.size(); ++i)
          if (rev[i].by_out[gin[i]].empty()) return local;
        while (true) {
          Tuple in;
          long sign_exp = 0;
          int deg_so_far = 0;
          R coeff = RT::one();
          for (std::size_t i = 0; i < parts.size(); ++i) {
            const auto& hit = rev[i].by_out[gin[i]][pick[i]];
            in.insert(in.end(), hit.in->begin(), hit.in->end());
            sign_exp += static_cast<long>(parts[i]->degree) * deg_so_far;
            deg_so_far += hit.in_deg;
            coeff *= hit.coeff;
          }
          if (sign_exp % 2 != 0) coeff = RT::from_int(-1) * coeff;
          for (const auto& [gout, gc] : grow) {
            R v = coeff * gc;
            if (RT::is_zero(v)) continue;
            auto& cell = local[in][gout];
            cell += v;
          }
          // advance the product counter
          std::size_t i = 0;
          for (; i < parts.size(); ++i) {
            if (++pick[i] < rev[i].by_out[gin[i]].size()) break;
            pick[i] = 0;
          }
          if (i == parts.size()) break;
        }
        return local;
      });

  for (const auto& local : locals)
    for (const auto& [in, row] : local)
      for (const auto& [out, c] : row) result.add_entry(in, out, c);
  return result;
}

// g o (id^{(x)pos} (x) f (x) id^{(x)(arity(g)-1-pos)})
template <class R>
MultiMap<R> interior(const MultiMap<R>& g, const MultiMap<R>& f, int pos,
                     const std::vector<MultiMap<R>>& ids) {
  std::vector<const MultiMap<R>*> parts;
  parts.reserve(g.arity());
  for (int i = 0; i < g.arity(); ++i) parts.push_back(i == pos ? &f : &ids[i]);
  return tensor_then(g, parts);
}

// Identity maps for each source slot of g (cached by callers where it matters).
template <class R>
std::vector<MultiMap<R>> slot_identities(const MultiMap<R>& g) {
  std::vector<MultiMap<R>> ids;
  ids.reserve(g.arity());
  for (int i = 0; i < g.arity(); ++i) ids.push_back(MultiMap<R>::identity(g.src[i]));
  return ids;
}

// Fix one input slot of f to a constant element (of matching module); the
// remaining map keeps Koszul bookkeeping consistent: the element is treated
// as degree-homogeneous and the sign of moving it into position is the
// caller's responsibility (none is applied here beyond table contraction).
template <class R>
MultiMap<R> partial_apply(const MultiMap<R>& f, int pos, const Element<R>& x) {
  std::vector<ModulePtr> src;
  for (int i = 0; i < f.arity(); ++i)
    if (i != pos) src.push_back(f.src[i]);
  int xdeg = x.is_zero() ? 0 : x.homogeneous_degree();
  MultiMap<R> r(std::move(src), f.dst, f.degree + xdeg);
  for (const auto& [in, row] : f.tab) {
    auto it = x.coeff.find(in[pos]);
    if (it == x.coeff.end()) continue;
    Tuple rin;
    rin.reserve(in.size() - 1);
    for (std::size_t i = 0; i < in.size(); ++i)
      if (static_cast<int>(i) != pos) rin.push_back(in[i]);
    for (const auto& [out, c] : row) r.add_entry(rin, out, it->second * c);
  }
  return r;
}

// Largest output l1 norm over all stored rows; used for residual reports.
template <class R>
double max_row_norm(const MultiMap<R>& f) {
  return op_norm(f);
}

}  // namespace cyclin

#endif
