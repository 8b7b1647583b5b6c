#ifndef CYCLIN_BASE_HPP
#define CYCLIN_BASE_HPP

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "poly.hpp"

namespace cyclin {

// The base ring is a finite product of copies of the scalars, one idempotent
// per vertex label.
struct BaseRing {
  std::vector<std::string> idempotents;

  BaseRing() : idempotents{"pt"} {}
  explicit BaseRing(std::vector<std::string> labels) : idempotents(std::move(labels)) {
    if (idempotents.empty()) throw std::invalid_argument("BaseRing: needs at least one idempotent");
    for (std::size_t i = 0; i < idempotents.size(); ++i)
      for (std::size_t j = i + 1; j < idempotents.size(); ++j)
        if (idempotents[i] == idempotents[j])
          throw std::invalid_argument("BaseRing: duplicate idempotent label");
  }
  int index_of(const std::string& label) const {
    for (std::size_t i = 0; i < idempotents.size(); ++i)
      if (idempotents[i] == label) return static_cast<int>(i);
    throw std::invalid_argument("BaseRing: unknown idempotent " + label);
  }
  bool operator==(const BaseRing& o) const { return idempotents == o.idempotents; }
};

struct BasisVec {
  std::string name;
  int degree = 0;
  int src = 0;  // idempotent indices: basis vector spans src · V · tgt
  int tgt = 0;
};

// Finite-dimensional graded bimodule over the base, with a named basis. All
// map machinery works on the shifted module V[1], where basis degrees drop
// by one.
struct GradedModule {
  BaseRing base;
  std::vector<BasisVec> basis;
  std::map<std::string, int> by_name;

  GradedModule() = default;
  GradedModule(BaseRing b, std::vector<BasisVec> vecs) : base(std::move(b)), basis(std::move(vecs)) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      auto [it, fresh] = by_name.emplace(basis[i].name, static_cast<int>(i));
      (void)it;
      if (!fresh) throw std::invalid_argument("GradedModule: duplicate basis name " + basis[i].name);
    }
  }
  int dim() const { return static_cast<int>(basis.size()); }
  int index_of(const std::string& name) const {
    auto it = by_name.find(name);
    if (it == by_name.end()) throw std::invalid_argument("GradedModule: unknown basis name " + name);
    return it->second;
  }
  int deg(int i) const { return basis[i].degree; }
  // degree in the shifted module V[1]
  int deg1(int i) const { return basis[i].degree - 1; }
};

using ModulePtr = std::shared_ptr<const GradedModule>;

inline ModulePtr make_module(BaseRing b, std::vector<BasisVec> vecs) {
  return std::make_shared<const GradedModule>(std::move(b), std::move(vecs));
}

// Continuous dual: basis b^ for each b, with negated degree and swapped
// idempotents. <b^, b'> = delta_{b,b'} by definition.
inline ModulePtr dual_module(const ModulePtr& m) {
  std::vector<BasisVec> vecs;
  vecs.reserve(m->basis.size());
  for (const auto& b : m->basis) vecs.push_back({b.name + "^", -b.degree, b.tgt, b.src});
  return make_module(m->base, vecs);
}

// Direct sum with disjoint names (caller guarantees disjointness).
inline ModulePtr direct_sum(const ModulePtr& a, const ModulePtr& b) {
  if (!(a->base == b->base)) throw std::invalid_argument("direct_sum: base mismatch");
  std::vector<BasisVec> vecs = a->basis;
  vecs.insert(vecs.end(), b->basis.begin(), b->basis.end());
  return make_module(a->base, vecs);
}

// Sparse element of V or V[1]; coefficients live in any coefficient ring.
template <class R>
struct Element {
  ModulePtr mod;
  bool shifted = true;
  std::map<int, R> coeff;

  Element() = default;
  explicit Element(ModulePtr m, bool sh = true) : mod(std::move(m)), shifted(sh) {}

  static Element basis(const ModulePtr& m, int i, bool sh = true) {
    Element e(m, sh);
    e.coeff[i] = ring_traits<R>::one();
    return e;
  }
  static Element basis(const ModulePtr& m, const std::string& name, bool sh = true) {
    return basis(m, m->index_of(name), sh);
  }

  void add(int i, const R& c) {
    if (ring_traits<R>::is_zero(c)) return;
    auto it = coeff.find(i);
    if (it == coeff.end()) {
      coeff.emplace(i, c);
    } else {
      it->second += c;
      if (ring_traits<R>::is_zero(it->second)) coeff.erase(it);
    }
  }
  bool is_zero() const { return coeff.empty(); }

  friend Element operator+(const Element& a, const Element& b) {
    Element r = a;
    for (const auto& [i, c] : b.coeff) r.add(i, c);
    return r;
  }
  friend Element operator-(const Element& a, const Element& b) {
    Element r = a;
    for (const auto& [i, c] : b.coeff) r.add(i, -c);
    return r;
  }
  friend Element operator*(const R& s, const Element& a) {
    Element r(a.mod, a.shifted);
    for (const auto& [i, c] : a.coeff) r.add(i, s * c);
    return r;
  }
  // The shift map s: coefficient-identity, flips the flag.
  Element shift() const {
    Element r = *this;
    r.shifted = true;
    return r;
  }
  Element unshift() const {
    Element r = *this;
    r.shifted = false;
    return r;
  }
  // Degree of a homogeneous element, in the current (shifted or not) grading.
  // Throws for non-homogeneous or zero elements.
  int homogeneous_degree() const {
    if (coeff.empty()) throw std::domain_error("degree of zero element");
    int d = 0;
    bool first = true;
    for (const auto& [i, c] : coeff) {
      (void)c;
      int di = shifted ? mod->deg1(i) : mod->deg(i);
      if (first) {
        d = di;
        first = false;
      } else if (d != di) {
        throw std::domain_error("element is not homogeneous");
      }
    }
    return d;
  }
};

template <class R>
double l1_norm(const Element<R>& e) {
  double s = 0;
  for (const auto& [i, c] : e.coeff) {
    (void)i;
    s += ring_traits<R>::abs_bound(c);
  }
  return s;
}

}  // namespace cyclin

#endif
