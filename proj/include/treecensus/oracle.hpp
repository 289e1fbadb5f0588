// Copyright (c) 2026 The treecensus authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TREECENSUS_ORACLE_HPP
#define TREECENSUS_ORACLE_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "treecensus/marking.hpp"
#include "treecensus/rational.hpp"
#include "treecensus/real.hpp"

namespace treecensus::oracle {

/// Enumeration bound: |T_18| is still comfortably streamable; beyond that the
/// generator refuses rather than grinding.
constexpr int kMaxOrder = 18;

/// A free tree in canonical rooted form. The root is the centroid; for
/// bicentral trees the root is the root of the lexicographically larger half
/// and the other half's root is its last child.
struct CanonicalTree {
  enum class CentroidType { single, bicentral };
  int order = 0;
  std::vector<int> parent;  ///< parent[v] in preorder layout, parent[0] = -1
  CentroidType centroid = CentroidType::single;

  friend bool operator==(const CanonicalTree& a, const CanonicalTree& b) {
    return a.order == b.order && a.centroid == b.centroid && a.parent == b.parent;
  }
  friend bool operator<(const CanonicalTree& a, const CanonicalTree& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.centroid != b.centroid) return a.centroid < b.centroid;
    return a.parent < b.parent;
  }
};

namespace detail {

using Code = std::vector<int>;  // level sequence, root at depth 0

/// Descending order on level sequences; a sequence extending another is larger
/// than its prefix, which matches concatenating child blocks greedily.
struct CodeDesc {
  bool operator()(const Code& a, const Code& b) const { return b < a; }
};

inline std::vector<int> parents_from_code(const Code& code) {
  std::vector<int> parent(code.size());
  std::vector<int> last(code.size() + 1, -1);
  for (size_t v = 0; v < code.size(); ++v) {
    int d = code[v];
    parent[v] = d == 0 ? -1 : last[static_cast<size_t>(d - 1)];
    last[static_cast<size_t>(d)] = static_cast<int>(v);
  }
  return parent;
}

/// All planted trees (root child count <= delta - 1, internal degrees <= delta)
/// of each size, as canonical level sequences sorted descending.
class PlantedCatalog {
 public:
  explicit PlantedCatalog(int delta) : delta_(delta), by_size_(1) {}

  const std::vector<Code>& of_size(int m) {
    while (static_cast<int>(by_size_.size()) <= m) build_next();
    return by_size_[static_cast<size_t>(m)];
  }

 private:
  void build_next() {
    const int m = static_cast<int>(by_size_.size());
    std::vector<Code> out;
    if (m == 1) {
      out.push_back({0});
    } else {
      // universe of candidate children, all sizes < m, descending
      std::vector<const Code*> universe;
      for (int s = m - 1; s >= 1; --s)
        for (const Code& c : by_size_[static_cast<size_t>(s)]) universe.push_back(&c);
      std::sort(universe.begin(), universe.end(),
                [](const Code* a, const Code* b) { return *b < *a; });
      Code acc{0};
      choose_children(universe, 0, m - 1, delta_ - 1, m - 1, acc, out);
    }
    by_size_.push_back(std::move(out));
  }

  /// Appends children blocks (codes shifted one level down) in non-increasing
  /// universe order; each complete choice is one canonical planted tree.
  static void choose_children(const std::vector<const Code*>& universe, size_t from, int budget,
                              int slots, int size_cap, Code& acc, std::vector<Code>& out) {
    if (budget == 0) {
      out.push_back(acc);
      return;
    }
    if (slots == 0) return;
    for (size_t idx = from; idx < universe.size(); ++idx) {
      const Code& c = *universe[idx];
      const int sz = static_cast<int>(c.size());
      if (sz > budget || sz > size_cap) continue;
      const size_t mark = acc.size();
      for (int d : c) acc.push_back(d + 1);
      choose_children(universe, idx, budget - sz, slots - 1, size_cap, acc, out);
      acc.resize(mark);
    }
  }

  int delta_;
  std::vector<std::vector<Code>> by_size_;
};

inline CanonicalTree tree_from_code(int n, const Code& code, CanonicalTree::CentroidType ct) {
  CanonicalTree t;
  t.order = n;
  t.parent = parents_from_code(code);
  t.centroid = ct;
  return t;
}

}  // namespace detail

/// Streams every isomorphism class of free trees on n vertices with maximum
/// degree <= delta, each exactly once. Centroid trees are rooted at the
/// centroid (every branch holds at most floor((n-1)/2) vertices); bicentral
/// trees are unordered pairs of planted halves of size n/2.
inline void enumerate_trees(int n, DegreeBound delta,
                            const std::function<void(const CanonicalTree&)>& sink) {
  if (n < 1) throw DomainError("tree order must be >= 1");
  if (n > kMaxOrder)
    throw ResourceLimitError("enumeration bound is n <= " + std::to_string(kMaxOrder));
  detail::PlantedCatalog catalog(delta.delta);
  if (n == 1) {
    sink(detail::tree_from_code(1, {0}, CanonicalTree::CentroidType::single));
    return;
  }
  // single centroid: branches of size <= floor((n-1)/2), root degree <= delta
  {
    const int cap = (n - 1) / 2;
    std::vector<const detail::Code*> universe;
    for (int s = std::min(cap, n - 1); s >= 1; --s)
      for (const auto& c : catalog.of_size(s)) universe.push_back(&c);
    std::sort(universe.begin(), universe.end(),
              [](const detail::Code* a, const detail::Code* b) { return *b < *a; });
    detail::Code acc{0};
    std::function<void(size_t, int, int)> rec = [&](size_t from, int budget, int slots) {
      if (budget == 0) {
        sink(detail::tree_from_code(n, acc, CanonicalTree::CentroidType::single));
        return;
      }
      if (slots == 0) return;
      for (size_t idx = from; idx < universe.size(); ++idx) {
        const detail::Code& c = *universe[idx];
        const int sz = static_cast<int>(c.size());
        if (sz > budget) continue;
        const size_t mark = acc.size();
        for (int d : c) acc.push_back(d + 1);
        rec(idx, budget - sz, slots - 1);
        acc.resize(mark);
      }
    };
    rec(0, n - 1, delta.delta);
  }
  // bicentral: unordered pairs of planted halves of size n/2
  if (n % 2 == 0) {
    const auto& halves = catalog.of_size(n / 2);  // sorted descending
    for (size_t ia = 0; ia < halves.size(); ++ia) {
      for (size_t ib = ia; ib < halves.size(); ++ib) {
        detail::Code code = halves[ia];
        for (int d : halves[ib]) code.push_back(d + 1);
        sink(detail::tree_from_code(n, code, CanonicalTree::CentroidType::bicentral));
      }
    }
  }
}

/// Canonical form of an arbitrary labeled tree given by its edge list;
/// relabeling-invariant and identical to the generator's output form.
inline CanonicalTree canonical_form(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw DomainError("tree order must be >= 1");
  if (static_cast<int>(edges.size()) != n - 1) throw DomainError("not a tree: wrong edge count");
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (auto [a, b] : edges) {
    adj[static_cast<size_t>(a)].push_back(b);
    adj[static_cast<size_t>(b)].push_back(a);
  }
  if (n == 1)
    return detail::tree_from_code(1, {0}, CanonicalTree::CentroidType::single);
  // subtree sizes from an arbitrary root (0), iterative DFS
  std::vector<int> order, par(static_cast<size_t>(n), -2), sz(static_cast<size_t>(n), 1);
  order.reserve(static_cast<size_t>(n));
  order.push_back(0);
  par[0] = -1;
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int v = order[qi];
    for (int w : adj[static_cast<size_t>(v)])
      if (par[static_cast<size_t>(w)] == -2) {
        par[static_cast<size_t>(w)] = v;
        order.push_back(w);
      }
  }
  for (size_t qi = order.size(); qi-- > 1;) sz[static_cast<size_t>(par[static_cast<size_t>(order[qi])])] += sz[static_cast<size_t>(order[qi])];
  std::vector<int> maxcomp(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    maxcomp[static_cast<size_t>(v)] = v == 0 ? 0 : n - sz[static_cast<size_t>(v)];
    for (int w : adj[static_cast<size_t>(v)])
      if (w != par[static_cast<size_t>(v)])
        maxcomp[static_cast<size_t>(v)] = std::max(maxcomp[static_cast<size_t>(v)], sz[static_cast<size_t>(w)]);
  }
  std::vector<int> centroids;
  for (int v = 0; v < n; ++v)
    if (maxcomp[static_cast<size_t>(v)] <= n / 2) centroids.push_back(v);
  // canonical level sequence of the subtree at v looking away from "from"
  std::function<detail::Code(int, int)> ahu = [&](int v, int from) {
    std::vector<detail::Code> kids;
    for (int w : adj[static_cast<size_t>(v)])
      if (w != from) kids.push_back(ahu(w, v));
    std::sort(kids.begin(), kids.end(), detail::CodeDesc{});
    detail::Code code{0};
    for (const auto& k : kids)
      for (int d : k) code.push_back(d + 1);
    return code;
  };
  if (centroids.size() == 1) {
    return detail::tree_from_code(n, ahu(centroids[0], -1), CanonicalTree::CentroidType::single);
  }
  detail::Code a = ahu(centroids[0], centroids[1]);
  detail::Code b = ahu(centroids[1], centroids[0]);
  if (a < b) std::swap(a, b);
  for (int d : b) a.push_back(d + 1);
  return detail::tree_from_code(n, a, CanonicalTree::CentroidType::bicentral);
}

// ---------------------------------------------------------------------------
// Per-tree statistics
// ---------------------------------------------------------------------------

inline std::vector<int> degrees_of(const CanonicalTree& t) {
  std::vector<int> deg(static_cast<size_t>(t.order), 0);
  for (int v = 1; v < t.order; ++v) {
    ++deg[static_cast<size_t>(v)];
    ++deg[static_cast<size_t>(t.parent[static_cast<size_t>(v)])];
  }
  return deg;
}

/// Exact degree / edge-type histograms plus general Zagreb and Randic values
/// for the requested exponents (high-precision reals at ambient precision).
struct TreeStats {
  std::vector<long> degree_hist;                 ///< index d = 1..max degree
  std::map<std::pair<int, int>, long> edge_hist;  ///< {i <= j} -> count
  std::vector<Real> d_alpha;
  std::vector<Real> r_beta;
};

inline TreeStats stats(const CanonicalTree& t, const std::vector<Real>& alphas = {},
                       const std::vector<Real>& betas = {}) {
  TreeStats out;
  std::vector<int> deg = degrees_of(t);
  int maxdeg = 0;
  for (int d : deg) maxdeg = std::max(maxdeg, d);
  out.degree_hist.assign(static_cast<size_t>(maxdeg) + 1, 0);
  for (int d : deg) ++out.degree_hist[static_cast<size_t>(d)];
  for (int v = 1; v < t.order; ++v) {
    int a = deg[static_cast<size_t>(v)], b = deg[static_cast<size_t>(t.parent[static_cast<size_t>(v)])];
    if (a > b) std::swap(a, b);
    ++out.edge_hist[{a, b}];
  }
  for (const Real& alpha : alphas) {
    Real s(0);
    for (int v = 0; v < t.order; ++v) {
      const int d = deg[static_cast<size_t>(v)];
      if (d == 0) {
        // isolated vertex: 0^alpha only defined for alpha > 0
        if (!(alpha > 0)) throw DomainError("D_alpha of the one-vertex tree requires alpha > 0");
        continue;
      }
      s += pow(Real(d), alpha);
    }
    out.d_alpha.push_back(s);
  }
  for (const Real& beta : betas) {
    Real s(0);
    for (int v = 1; v < t.order; ++v) {
      const int a = deg[static_cast<size_t>(v)];
      const int b = deg[static_cast<size_t>(t.parent[static_cast<size_t>(v)])];
      s += pow(Real(a) * Real(b), beta);
    }
    out.r_beta.push_back(s);
  }
  return out;
}

/// Value of the marked statistic on one tree.
inline int statistic_of(const CanonicalTree& t, const Marking& mark) {
  if (mark.is_none()) return 0;
  std::vector<int> deg = degrees_of(t);
  int k = 0;
  if (mark.kind == Marking::Kind::vertex_degree) {
    for (int d : deg) k += (d == mark.j);
  } else {
    for (int v = 1; v < t.order; ++v) {
      int a = deg[static_cast<size_t>(v)], b = deg[static_cast<size_t>(t.parent[static_cast<size_t>(v)])];
      if (a > b) std::swap(a, b);
      k += (a == mark.i && b == mark.j);
    }
  }
  return k;
}

/// Exhaustive histogram k -> number of trees in T_n^delta with statistic k.
/// counts[k] layout matches census::DistributionTable.
inline std::vector<Integer> aggregate(int n, DegreeBound delta, const Marking& mark) {
  std::vector<Integer> counts(1, Integer(0));
  enumerate_trees(n, delta, [&](const CanonicalTree& t) {
    const int k = statistic_of(t, mark);
    if (static_cast<size_t>(k) >= counts.size()) counts.resize(static_cast<size_t>(k) + 1, Integer(0));
    counts[static_cast<size_t>(k)] += 1;
  });
  return counts;
}

inline Integer count_trees(int n, DegreeBound delta) {
  Integer c(0);
  enumerate_trees(n, delta, [&](const CanonicalTree&) { c += 1; });
  return c;
}

/// Number of planted trees on n vertices (root child count <= delta - 1),
/// by direct catalog enumeration; the independent check of the p series.
inline Integer count_planted(int n, DegreeBound delta) {
  if (n < 1) throw DomainError("tree order must be >= 1");
  if (n > kMaxOrder)
    throw ResourceLimitError("enumeration bound is n <= " + std::to_string(kMaxOrder));
  detail::PlantedCatalog catalog(delta.delta);
  return Integer(static_cast<unsigned long>(catalog.of_size(n).size()));
}

}  // namespace treecensus::oracle

#endif  // TREECENSUS_ORACLE_HPP
