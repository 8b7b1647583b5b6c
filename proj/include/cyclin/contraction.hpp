#ifndef CYCLIN_CONTRACTION_HPP
#define CYCLIN_CONTRACTION_HPP

#include <algorithm>
#include <map>
#include <tuple>

#include "linalg.hpp"

namespace cyclin {

// Cohomology splitting of an arity-1 square-zero map: modules H, inclusion
// I1, projection P1 and homotopy Q1 with
//   P1 I1 = id,   mu1 Q1 + Q1 mu1 = I1 P1 - id,
// and the side conditions Q1 I1 = 0, P1 Q1 = 0, Q1^2 = 0.
template <class K>
struct ContractionData {
  ModulePtr A;   // underlying module of the algebra
  ModulePtr H;   // cohomology module
  MultiMap<K> I1, P1, Q1;
};

// Deterministic Gaussian elimination: inside every (degree, src, tgt) block,
// candidate vectors are scanned in lexicographic basis-name order.
template <class K>
ContractionData<K> cohomology_splitting(const MultiMap<K>& mu1, double tol = 0.0) {
  using ST = scalar_traits<K>;
  const ModulePtr& A = mu1.src[0];
  int dim = A->dim();

  // name-ordered index list per (shifted degree, src, tgt) block
  std::map<std::tuple<int, int, int>, std::vector<int>> blocks;
  {
    std::vector<int> order(dim);
    for (int i = 0; i < dim; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return A->basis[a].name < A->basis[b].name;
    });
    for (int i : order)
      blocks[{A->deg1(i), A->basis[i].src, A->basis[i].tgt}].push_back(i);
  }

  auto mu_mat = matrix_of(mu1);

  struct Rep {
    std::vector<K> vec;  // cohomology representative in A coordinates
    int deg, src, tgt;
    std::string name;
  };
  std::vector<Rep> reps;
  // per block: the chosen L-basis (unit vectors) and B-basis (their images)
  std::vector<std::vector<K>> Lvecs, Bvecs;
  std::vector<int> Lblockdeg;

  for (const auto& [key, idxs] : blocks) {
    auto [deg, srci, tgti] = key;
    int bn = static_cast<int>(idxs.size());
    // target block of mu1: degree deg+1, same idempotents
    auto it = blocks.find({deg + 1, srci, tgti});
    std::vector<int> tgt_idxs = it == blocks.end() ? std::vector<int>{} : it->second;
    DenseMat<K> D(static_cast<int>(tgt_idxs.size()), bn);
    for (int c = 0; c < bn; ++c)
      for (int r = 0; r < static_cast<int>(tgt_idxs.size()); ++r)
        D.at(r, c) = mu_mat.at(tgt_idxs[r], idxs[c]);
    // kernel of D via echelon: free columns give nullspace vectors
    Echelon<K> e(D, tol);
    std::vector<std::vector<K>> kernel;
    for (int c = 0; c < bn; ++c) {
      if (e.pivot_of_col[c] >= 0) continue;
      std::vector<K> v(bn, ST::zero());
      v[c] = ST::one();
      for (std::size_t p = 0; p < e.pivot_col.size(); ++p)
        v[e.pivot_col[p]] = -e.m.at(static_cast<int>(p), c);
      kernel.push_back(std::move(v));
    }
    // pivot columns span a complement L of the kernel; their images d(L)
    // give the boundary space in the next block
    for (std::size_t p = 0; p < e.pivot_col.size(); ++p) {
      int c = e.pivot_col[p];
      std::vector<K> l(dim, ST::zero());
      l[idxs[c]] = ST::one();
      std::vector<K> b(dim, ST::zero());
      for (int r = 0; r < static_cast<int>(tgt_idxs.size()); ++r) b[tgt_idxs[r]] = D.at(r, c);
      Lvecs.push_back(std::move(l));
      Bvecs.push_back(std::move(b));
      Lblockdeg.push_back(deg);
    }
    // cohomology representatives: kernel vectors independent of the incoming
    // boundaries d(A^{deg-1} block)
    auto itp = blocks.find({deg - 1, srci, tgti});
    std::vector<int> prev = itp == blocks.end() ? std::vector<int>{} : itp->second;
    DenseMat<K> Bprev(bn, static_cast<int>(prev.size()));
    for (int c = 0; c < static_cast<int>(prev.size()); ++c)
      for (int r = 0; r < bn; ++r) Bprev.at(r, c) = mu_mat.at(idxs[r], prev[c]);
    Echelon<K> eb(Bprev, tol);
    // grow an echelon basis starting from the boundary space
    DenseMat<K> grow(bn, static_cast<int>(eb.rank + kernel.size()));
    int gcols = 0;
    for (std::size_t p = 0; p < eb.pivot_col.size(); ++p, ++gcols) {
      int c = eb.pivot_col[p];
      for (int r = 0; r < bn; ++r) grow.at(r, gcols) = Bprev.at(r, c);
    }
    int base_rank = eb.rank;
    for (const auto& kv : kernel) {
      for (int r = 0; r < bn; ++r) grow.at(r, gcols) = kv[r];
      DenseMat<K> sub(bn, gcols + 1);
      for (int r = 0; r < bn; ++r)
        for (int c = 0; c <= gcols; ++c) sub.at(r, c) = grow.at(r, c);
      if (mat_rank(sub, tol) == gcols + 1) {
        Rep rep;
        rep.vec.assign(dim, ST::zero());
        for (int r = 0; r < bn; ++r) rep.vec[idxs[r]] = kv[r];
        rep.deg = deg + 1;  // unshifted degree of the representative
        rep.src = srci;
        rep.tgt = tgti;
        reps.push_back(std::move(rep));
        ++gcols;
      }
    }
    (void)base_rank;
  }

  std::vector<BasisVec> hbasis;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    reps[i].name = "h" + std::to_string(reps[i].deg) + "_" + std::to_string(i);
    hbasis.push_back({reps[i].name, reps[i].deg, reps[i].src, reps[i].tgt});
  }
  ModulePtr H = make_module(A->base, hbasis);

  ContractionData<K> cd;
  cd.A = A;
  cd.H = H;
  cd.I1 = MultiMap<K>({H}, {A}, 0);
  cd.P1 = MultiMap<K>({A}, {H}, 0);
  cd.Q1 = MultiMap<K>({A}, {A}, -1);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (int r = 0; r < dim; ++r)
      if (!ST::is_zero(reps[i].vec[r])) cd.I1.add_entry({static_cast<int>(i)}, {r}, reps[i].vec[r]);

  // decompose each unit vector of A in the frame [B | Hreps | L]
  int nb = static_cast<int>(Bvecs.size());
  int nh = static_cast<int>(reps.size());
  int nl = static_cast<int>(Lvecs.size());
  DenseMat<K> frame(dim, nb + nh + nl);
  for (int c = 0; c < nb; ++c)
    for (int r = 0; r < dim; ++r) frame.at(r, c) = Bvecs[c][r];
  for (int c = 0; c < nh; ++c)
    for (int r = 0; r < dim; ++r) frame.at(r, nb + c) = reps[c].vec[r];
  for (int c = 0; c < nl; ++c)
    for (int r = 0; r < dim; ++r) frame.at(r, nb + nh + c) = Lvecs[c][r];
  for (int e = 0; e < dim; ++e) {
    std::vector<K> rhs(dim, ST::zero());
    rhs[e] = ST::one();
    auto x = solve(frame, rhs, tol);
    if (!x) throw std::logic_error("cohomology_splitting: frame is not a basis");
    for (int c = 0; c < nh; ++c)
      if (!ST::is_zero((*x)[nb + c])) cd.P1.add_entry({e}, {c}, (*x)[nb + c]);
    // Q = -(d|_L)^{-1} on the boundary part: B-basis vector c is d(L-basis c)
    for (int c = 0; c < nb; ++c) {
      if (ST::is_zero((*x)[c])) continue;
      for (int r = 0; r < dim; ++r)
        if (!ST::is_zero(Lvecs[c][r])) cd.Q1.add_entry({e}, {r}, -(*x)[c] * Lvecs[c][r]);
    }
  }
  return cd;
}

}  // namespace cyclin

#endif
