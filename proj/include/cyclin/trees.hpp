#ifndef CYCLIN_TREES_HPP
#define CYCLIN_TREES_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclin {

// Planar rooted tree with every internal node of valency >= 3 (i.e. >= 2
// children). The unique tree on one leaf is a bare leaf.
struct PlanarTree {
  std::vector<PlanarTree> children;  // empty = leaf

  bool is_leaf() const { return children.empty(); }
  int leaves() const {
    if (is_leaf()) return 1;
    int n = 0;
    for (const auto& c : children) n += c.leaves();
    return n;
  }
  int internal_nodes() const {
    if (is_leaf()) return 0;
    int d = 1;
    for (const auto& c : children) d += c.internal_nodes();
    return d;
  }
  std::string to_string() const {
    if (is_leaf()) return "*";
    std::string s = "(";
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (i) s += " ";
      s += children[i].to_string();
    }
    return s + ")";
  }
};

// Complete enumeration of O(n) via the root decomposition: every tree on
// n > 1 leaves is an ordered list of >= 2 subtrees below the root node.
inline void enumerate_trees_into(int n, std::vector<PlanarTree>& out) {
  if (n < 1) throw std::invalid_argument("enumerate_trees: n >= 1 required");
  if (n == 1) {
    out.push_back(PlanarTree{});
    return;
  }
  // compositions of n into k >= 2 positive parts, subtrees per part
  std::vector<int> parts;
  std::vector<std::vector<PlanarTree>> memo(n + 1);
  for (int m = 1; m <= n; ++m)
    if (m < n) enumerate_trees_into(m, memo[m]);

  std::vector<PlanarTree> stack;
  auto rec = [&](auto&& self, int rest, std::vector<PlanarTree>& acc) -> void {
    if (rest == 0) {
      if (acc.size() >= 2) {
        PlanarTree t;
        t.children = acc;
        out.push_back(std::move(t));
      }
      return;
    }
    for (int m = 1; m <= rest; ++m) {
      if (m == n) continue;  // proper subtrees only
      for (const auto& sub : memo[m]) {
        acc.push_back(sub);
        self(self, rest - m, acc);
        acc.pop_back();
      }
    }
  };
  std::vector<PlanarTree> acc;
  rec(rec, n, acc);
}

inline std::vector<PlanarTree> enumerate_trees(int n) {
  std::vector<PlanarTree> out;
  enumerate_trees_into(n, out);
  return out;
}

inline std::vector<PlanarTree> enumerate_trees(int n, int d) {
  std::vector<PlanarTree> all = enumerate_trees(n), out;
  for (auto& t : all)
    if (t.internal_nodes() == d) out.push_back(std::move(t));
  return out;
}

// |O(n)| (little Schroeder numbers 1, 1, 3, 11, 45, ...) by the standard
// recurrence; independent of the enumeration above so the two can be tested
// against each other.
inline std::vector<std::uint64_t> schroeder_counts(int nmax) {
  std::vector<std::uint64_t> s(nmax + 1, 0);
  if (nmax >= 1) s[1] = 1;
  for (int n = 2; n <= nmax; ++n) {
    // sum over the number of root subtrees k >= 2, compositions of n
    std::vector<std::vector<std::uint64_t>> comp(n + 1);
    std::vector<std::uint64_t> ways(n + 1, 0);
    // ways[m] after choosing j parts: dynamic over parts
    std::vector<std::uint64_t> cur(n + 1, 0);
    cur[0] = 1;
    std::uint64_t total = 0;
    for (int parts = 1; parts <= n; ++parts) {
      std::vector<std::uint64_t> nxt(n + 1, 0);
      for (int m = 0; m <= n; ++m) {
        if (cur[m] == 0) continue;
        for (int add = 1; m + add <= n; ++add) nxt[m + add] += cur[m] * s[add];
      }
      cur = nxt;
      if (parts >= 2) total += cur[n];
    }
    s[n] = total;
  }
  return s;
}

inline std::uint64_t catalan(int n) {
  if (n < 0) return 0;
  std::vector<std::uint64_t> c(n + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 0; k < m; ++k) c[m] += c[k] * c[m - 1 - k];
  return c[n];
}

// Caterpillar tree: internal nodes on the path from root to a marked leaf;
// node k carries (left_k, right_k) unmarked leaves with left_k + right_k >= 1.
struct Caterpillar {
  std::vector<std::pair<int, int>> nodes;  // ordered from the root upward

  int left_leaves() const {
    int n = 0;
    for (auto& [l, r] : nodes) n += l;
    return n;
  }
  int right_leaves() const {
    int n = 0;
    for (auto& [l, r] : nodes) n += r;
    return n;
  }
  int internal_nodes() const { return static_cast<int>(nodes.size()); }
};

inline void enumerate_caterpillars_into(int n1, int n2, std::vector<Caterpillar>& out,
                                        Caterpillar& acc) {
  if (n1 == 0 && n2 == 0) {
    out.push_back(acc);
    return;
  }
  for (int l = 0; l <= n1; ++l)
    for (int r = 0; r <= n2; ++r) {
      if (l + r == 0) continue;
      acc.nodes.push_back({l, r});
      enumerate_caterpillars_into(n1 - l, n2 - r, out, acc);
      acc.nodes.pop_back();
    }
}

inline std::vector<Caterpillar> enumerate_caterpillars(int n1, int n2) {
  std::vector<Caterpillar> out;
  Caterpillar acc;
  enumerate_caterpillars_into(n1, n2, out, acc);
  return out;
}

inline std::vector<Caterpillar> enumerate_caterpillars(int n1, int n2, int d) {
  std::vector<Caterpillar> all = enumerate_caterpillars(n1, n2), out;
  for (auto& c : all)
    if (c.internal_nodes() == d) out.push_back(std::move(c));
  return out;
}

}  // namespace cyclin

#endif
