#ifndef CYCLIN_POLY_HPP
#define CYCLIN_POLY_HPP

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "scalar.hpp"

namespace cyclin {

// Dense polynomial in one variable t over a scalar field K. Used for exact
// t-dependence of homotopies and the Darboux flow; differentiation and
// integration are exact.
template <class K>
struct Poly {
  using ST = scalar_traits<K>;
  std::vector<K> c;  // c[k] is the coefficient of t^k

  Poly() = default;
  explicit Poly(K k) { if (!ST::is_zero(k)) c.push_back(std::move(k)); }
  static Poly t() { Poly p; p.c = {ST::zero(), ST::one()}; return p; }

  void trim() {
    while (!c.empty() && ST::is_zero(c.back())) c.pop_back();
  }
  bool zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), ST::zero());
    for (std::size_t k = 0; k < b.c.size(); ++k) r.c[k] += b.c[k];
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), ST::zero());
    for (std::size_t k = 0; k < b.c.size(); ++k) r.c[k] -= b.c[k];
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& x : r.c) x = -x;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.zero() || b.zero()) return Poly();
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, ST::zero());
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
  }
  Poly& operator+=(const Poly& b) { *this = *this + b; return *this; }
  Poly& operator-=(const Poly& b) { *this = *this - b; return *this; }
  Poly& operator*=(const Poly& b) { *this = *this * b; return *this; }

  K eval(const K& t) const {
    K v = ST::zero();
    for (std::size_t k = c.size(); k-- > 0;) v = v * t + c[k];
    return v;
  }
  Poly derivative() const {
    Poly r;
    for (std::size_t k = 1; k < c.size(); ++k) r.c.push_back(ST::from_int(static_cast<long>(k)) * c[k]);
    r.trim();
    return r;
  }
  // Antiderivative with value 0 at t = 0.
  Poly antiderivative() const {
    Poly r;
    if (c.empty()) return r;
    r.c.assign(c.size() + 1, ST::zero());
    for (std::size_t k = 0; k < c.size(); ++k)
      r.c[k + 1] = c[k] * ST::inv(ST::from_int(static_cast<long>(k + 1)));
    r.trim();
    return r;
  }
  // p(a*t + b)
  Poly compose_affine(const K& a, const K& b) const {
    Poly lin;
    lin.c = {b, a};
    lin.trim();
    Poly r, pw;
    pw.c = {ST::one()};
    for (std::size_t k = 0; k < c.size(); ++k) {
      Poly term = pw;
      for (auto& x : term.c) x = x * c[k];
      term.trim();
      r += term;
      pw *= lin;
    }
    return r;
  }
  // Upper bound for sup_{t in [0,1]} |p(t)|.
  double sup_bound() const {
    double s = 0;
    for (const auto& x : c) s += ST::abs_val(x);
    return s;
  }
};

// Piecewise polynomial on [0,1] with exact breakpoints. Pieces are stored in
// global coordinates; piece i is valid on [brk[i], brk[i+1]].
template <class K>
struct PiecewisePoly {
  using ST = scalar_traits<K>;
  using Real = typename ST::real;
  std::vector<Real> brk;      // size m+1, brk.front() = 0, brk.back() = 1
  std::vector<Poly<K>> piece; // size m

  PiecewisePoly() : brk{Real(0), Real(1)}, piece(1) {}
  explicit PiecewisePoly(Poly<K> p) : brk{Real(0), Real(1)}, piece{std::move(p)} {}
  explicit PiecewisePoly(K k) : PiecewisePoly(Poly<K>(std::move(k))) {}
  static PiecewisePoly t() { return PiecewisePoly(Poly<K>::t()); }

  bool zero() const {
    for (const auto& p : piece)
      if (!p.zero()) return false;
    return true;
  }

  static std::vector<Real> merge(const std::vector<Real>& a, const std::vector<Real>& b) {
    std::vector<Real> m;
    m.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
    m.erase(std::unique(m.begin(), m.end()), m.end());
    return m;
  }
  const Poly<K>& piece_at(const Real& lo) const {
    for (std::size_t i = 0; i + 1 < brk.size(); ++i)
      if (!(brk[i + 1] <= lo)) return piece[i];
    return piece.back();
  }
  PiecewisePoly refined(const std::vector<Real>& grid) const {
    PiecewisePoly r;
    r.brk = grid;
    r.piece.clear();
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) r.piece.push_back(piece_at(grid[i]));
    return r;
  }

  template <class Op>
  static PiecewisePoly zip(const PiecewisePoly& a, const PiecewisePoly& b, Op op) {
    auto grid = merge(a.brk, b.brk);
    PiecewisePoly ra = a.refined(grid), rb = b.refined(grid), r;
    r.brk = grid;
    r.piece.clear();
    for (std::size_t i = 0; i < ra.piece.size(); ++i) r.piece.push_back(op(ra.piece[i], rb.piece[i]));
    return r;
  }
  friend PiecewisePoly operator+(const PiecewisePoly& a, const PiecewisePoly& b) {
    return zip(a, b, [](const Poly<K>& x, const Poly<K>& y) { return x + y; });
  }
  friend PiecewisePoly operator-(const PiecewisePoly& a, const PiecewisePoly& b) {
    return zip(a, b, [](const Poly<K>& x, const Poly<K>& y) { return x - y; });
  }
  friend PiecewisePoly operator*(const PiecewisePoly& a, const PiecewisePoly& b) {
    return zip(a, b, [](const Poly<K>& x, const Poly<K>& y) { return x * y; });
  }
  friend PiecewisePoly operator-(const PiecewisePoly& a) {
    PiecewisePoly r = a;
    for (auto& p : r.piece) p = -p;
    return r;
  }
  PiecewisePoly& operator+=(const PiecewisePoly& b) { *this = *this + b; return *this; }
  PiecewisePoly& operator-=(const PiecewisePoly& b) { *this = *this - b; return *this; }
  PiecewisePoly& operator*=(const PiecewisePoly& b) { *this = *this * b; return *this; }

  // Value at t, taking the piece to the right of t (left at t = 1).
  K eval(const Real& t) const {
    for (std::size_t i = 0; i + 1 < brk.size(); ++i)
      if (t < brk[i + 1]) return piece[i].eval(real_to_scalar(t));
    return piece.back().eval(real_to_scalar(t));
  }
  static K real_to_scalar(const Real& t) {
    if constexpr (ST::exact) {
      return GaussQ{t, mpq_class(0)};
    } else {
      return K(t, 0.0);
    }
  }

  PiecewisePoly derivative() const {
    PiecewisePoly r = *this;
    for (auto& p : r.piece) p = p.derivative();
    return r;
  }
  // Continuous antiderivative with value 0 at t = 0.
  PiecewisePoly antiderivative() const {
    PiecewisePoly r = *this;
    K acc = ST::zero();
    for (std::size_t i = 0; i < piece.size(); ++i) {
      Poly<K> prim = piece[i].antiderivative();
      K lo = real_to_scalar(brk[i]);
      Poly<K> shifted = prim;
      K base = acc - prim.eval(lo);
      Poly<K> cst(base);
      r.piece[i] = shifted + cst;
      acc = r.piece[i].eval(real_to_scalar(brk[i + 1]));
    }
    return r;
  }
  K integral() const {
    auto F = antiderivative();
    return F.piece.back().eval(real_to_scalar(F.brk.back()));
  }
  // Jump of the value across interior breakpoints; zero iff continuous.
  double max_jump() const {
    double worst = 0;
    for (std::size_t i = 1; i + 1 < brk.size(); ++i) {
      K left = piece[i - 1].eval(real_to_scalar(brk[i]));
      K right = piece[i].eval(real_to_scalar(brk[i]));
      worst = std::max(worst, ST::abs_val(left - right));
    }
    return worst;
  }
  // Precompose with t -> a*t + b, restricted so the image stays in [0,1].
  PiecewisePoly pullback_affine(const Real& a, const Real& b) const {
    PiecewisePoly r;
    r.brk.clear();
    r.piece.clear();
    std::vector<Real> pre;
    for (const auto& s : brk) {
      Real u = (s - b) / a;  // preimage of breakpoint s
      if (u > Real(0) && u < Real(1)) pre.push_back(u);
    }
    pre.push_back(Real(0));
    pre.push_back(Real(1));
    std::sort(pre.begin(), pre.end());
    pre.erase(std::unique(pre.begin(), pre.end()), pre.end());
    r.brk = pre;
    K ka = real_to_scalar(a), kb = real_to_scalar(b);
    for (std::size_t i = 0; i + 1 < pre.size(); ++i) {
      Real mid = pre[i] * a + b;  // image of the left endpoint
      r.piece.push_back(piece_at(mid).compose_affine(ka, kb));
    }
    return r;
  }
  double sup_bound() const {
    double s = 0;
    for (const auto& p : piece) s = std::max(s, p.sup_bound());
    return s;
  }
};

// Coefficient-ring abstraction: the map machinery is generic over plain
// scalars, polynomials in t, and piecewise polynomials in t.
template <class R>
struct ring_traits;

template <>
struct ring_traits<GaussQ> {
  using scalar = GaussQ;
  static constexpr bool is_path = false;
  static GaussQ zero() { return GaussQ(); }
  static GaussQ one() { return GaussQ(1); }
  static GaussQ from_int(long n) { return GaussQ(n); }
  static bool is_zero(const GaussQ& x) { return scalar_traits<GaussQ>::is_zero(x); }
  static double abs_bound(const GaussQ& x) { return scalar_traits<GaussQ>::abs_val(x); }
  static GaussQ from_scalar(GaussQ k) { return k; }
};

template <>
struct ring_traits<CD> {
  using scalar = CD;
  static constexpr bool is_path = false;
  static CD zero() { return {0.0, 0.0}; }
  static CD one() { return {1.0, 0.0}; }
  static CD from_int(long n) { return {static_cast<double>(n), 0.0}; }
  static bool is_zero(const CD& x) { return x == CD{0.0, 0.0}; }
  static double abs_bound(const CD& x) { return std::abs(x); }
  static CD from_scalar(CD k) { return k; }
};

template <class K>
struct ring_traits<Poly<K>> {
  using scalar = K;
  static constexpr bool is_path = true;
  static Poly<K> zero() { return Poly<K>(); }
  static Poly<K> one() { return Poly<K>(scalar_traits<K>::one()); }
  static Poly<K> from_int(long n) { return Poly<K>(scalar_traits<K>::from_int(n)); }
  static bool is_zero(const Poly<K>& x) { return x.zero(); }
  static double abs_bound(const Poly<K>& x) { return x.sup_bound(); }
  static Poly<K> from_scalar(K k) { return Poly<K>(std::move(k)); }
};

template <class K>
struct ring_traits<PiecewisePoly<K>> {
  using scalar = K;
  static constexpr bool is_path = true;
  static PiecewisePoly<K> zero() { return PiecewisePoly<K>(); }
  static PiecewisePoly<K> one() { return PiecewisePoly<K>(scalar_traits<K>::one()); }
  static PiecewisePoly<K> from_int(long n) { return PiecewisePoly<K>(scalar_traits<K>::from_int(n)); }
  static bool is_zero(const PiecewisePoly<K>& x) { return x.zero(); }
  static double abs_bound(const PiecewisePoly<K>& x) { return x.sup_bound(); }
  static PiecewisePoly<K> from_scalar(K k) { return PiecewisePoly<K>(std::move(k)); }
};

}  // namespace cyclin

#endif
