#ifndef CYCLIN_LINALG_HPP
#define CYCLIN_LINALG_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "multimap.hpp"

namespace cyclin {

template <class K>
struct DenseMat {
  int rows = 0, cols = 0;
  std::vector<K> a;

  DenseMat() = default;
  DenseMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, scalar_traits<K>::zero()) {}
  K& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const K& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  double norm1() const {
    double best = 0;
    for (int c = 0; c < cols; ++c) {
      double s = 0;
      for (int r = 0; r < rows; ++r) s += scalar_traits<K>::abs_val(at(r, c));
      best = std::max(best, s);
    }
    return best;
  }
};

// Row echelon with deterministic pivoting: columns left to right, first row
// (in the given order) whose entry is nonzero / above tol. Row order encodes
// the lexicographic-by-name tie break chosen by callers.
template <class K>
struct Echelon {
  DenseMat<K> m;                 // reduced matrix
  std::vector<int> pivot_col;    // per pivot row
  std::vector<int> pivot_of_col; // col -> pivot row or -1
  int rank = 0;

  explicit Echelon(DenseMat<K> in, double tol = 0.0) : m(std::move(in)) {
    pivot_of_col.assign(m.cols, -1);
    int prow = 0;
    for (int c = 0; c < m.cols && prow < m.rows; ++c) {
      int sel = -1;
      for (int r = prow; r < m.rows; ++r) {
        if (scalar_traits<K>::abs_val(m.at(r, c)) > tol) {
          sel = r;
          break;
        }
      }
      if (sel < 0) continue;
      if (sel != prow)
        for (int cc = 0; cc < m.cols; ++cc) std::swap(m.at(sel, cc), m.at(prow, cc));
      K inv = scalar_traits<K>::inv(m.at(prow, c));
      for (int cc = c; cc < m.cols; ++cc) m.at(prow, cc) = inv * m.at(prow, cc);
      for (int r = 0; r < m.rows; ++r) {
        if (r == prow) continue;
        K f = m.at(r, c);
        if (scalar_traits<K>::is_zero(f)) continue;
        for (int cc = c; cc < m.cols; ++cc) m.at(r, cc) = m.at(r, cc) - f * m.at(prow, cc);
      }
      pivot_col.push_back(c);
      pivot_of_col[c] = prow;
      ++prow;
    }
    rank = prow;
  }
};

template <class K>
int mat_rank(const DenseMat<K>& m, double tol = 0.0) {
  return Echelon<K>(m, tol).rank;
}

// Solve M x = b; returns nullopt when inconsistent (residual above tol).
template <class K>
std::optional<std::vector<K>> solve(const DenseMat<K>& M, const std::vector<K>& b,
                                    double tol = 0.0) {
  DenseMat<K> aug(M.rows, M.cols + 1);
  for (int r = 0; r < M.rows; ++r) {
    for (int c = 0; c < M.cols; ++c) aug.at(r, c) = M.at(r, c);
    aug.at(r, M.cols) = b[r];
  }
  Echelon<K> e(std::move(aug), tol);
  std::vector<K> x(M.cols, scalar_traits<K>::zero());
  for (std::size_t p = 0; p < e.pivot_col.size(); ++p) {
    int c = e.pivot_col[p];
    if (c == M.cols) return std::nullopt;  // pivot in the RHS column
    x[c] = e.m.at(static_cast<int>(p), M.cols);
  }
  // verify (covers the no-pivot-in-rhs-but-still-inconsistent rows)
  for (int r = 0; r < M.rows; ++r) {
    K s = scalar_traits<K>::zero();
    for (int c = 0; c < M.cols; ++c) s += M.at(r, c) * x[c];
    s -= b[r];
    if (scalar_traits<K>::abs_val(s) > tol) return std::nullopt;
  }
  return x;
}

struct SingularMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Matrix inverse with a 1-norm condition estimate; float mode rejects
// condition numbers above cond_gate (the numeric-trust gate).
template <class K>
DenseMat<K> mat_inverse(const DenseMat<K>& M, double* cond_out = nullptr,
                        double tol = 0.0, double cond_gate = 1e12) {
  if (M.rows != M.cols) throw std::invalid_argument("mat_inverse: not square");
  int n = M.rows;
  DenseMat<K> aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = M.at(r, c);
    aug.at(r, n + r) = scalar_traits<K>::one();
  }
  Echelon<K> e(std::move(aug), tol);
  for (int p = 0; p < n; ++p)
    if (e.pivot_of_col.size() <= static_cast<std::size_t>(p) || e.pivot_of_col[p] < 0)
      throw SingularMatrix("matrix not invertible");
  DenseMat<K> inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv.at(r, c) = e.m.at(e.pivot_of_col[r], n + c);
  double cond = M.norm1() * inv.norm1();
  if (cond_out) *cond_out = cond;
  if (!scalar_traits<K>::exact && cond > cond_gate)
    throw SingularMatrix("matrix numerically singular (condition gate)");
  return inv;
}

// Matrix of an arity-1 map on the shifted modules, rows = target basis,
// cols = source basis.
template <class R>
DenseMat<R> matrix_of(const MultiMap<R>& f) {
  if (f.arity() != 1 || f.dst.size() != 1) throw std::invalid_argument("matrix_of: arity-1 only");
  DenseMat<R> m(f.dst[0]->dim(), f.src[0]->dim());
  for (const auto& [in, row] : f.tab)
    for (const auto& [out, c] : row) m.at(out[0], in[0]) += c;
  return m;
}

template <class R>
MultiMap<R> map_of_matrix(const DenseMat<R>& m, const ModulePtr& src, const ModulePtr& dst,
                          int degree) {
  MultiMap<R> f({src}, {dst}, degree);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      if (!ring_traits<R>::is_zero(m.at(r, c))) f.add_entry({c}, {r}, m.at(r, c));
  return f;
}

// Two-sided inverse of an invertible arity-1 degree-0 map.
template <class K>
MultiMap<K> invert_map(const MultiMap<K>& f, double* cond_out = nullptr, double tol = 0.0) {
  DenseMat<K> inv = mat_inverse(matrix_of(f), cond_out, tol);
  return map_of_matrix(inv, f.dst[0], f.src[0], -f.degree);
}

}  // namespace cyclin

#endif
