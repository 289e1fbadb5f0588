// Copyright (c) 2026 The treecensus authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TREECENSUS_MARKING_HPP
#define TREECENSUS_MARKING_HPP

#include <string>

#include "treecensus/errors.hpp"

namespace treecensus {

/// Maximum vertex degree Delta. Delta in {1, 2} gives only paths; rejected.
struct DegreeBound {
  int delta;
  explicit DegreeBound(int d) : delta(d) {
    if (d < 3) throw DomainError("degree bound must be >= 3");
  }
};

/// Which statistic a bivariate census tracks with the mark variable u.
struct Marking {
  enum class Kind { none, vertex_degree, edge_type };

  Kind kind = Kind::none;
  int i = 0;  // smaller endpoint degree (edge_type only)
  int j = 0;  // marked vertex degree, or larger endpoint degree

  static Marking none() { return {}; }

  static Marking degree(int j) {
    if (j < 1) throw DomainError("vertex-degree marking requires j >= 1");
    Marking m;
    m.kind = Kind::vertex_degree;
    m.j = j;
    return m;
  }

  /// Endpoint degrees are normalized so that i <= j. Degrees above the bound
  /// are allowed and mark a statistic that is identically zero.
  static Marking edge(int i, int j) {
    if (i < 1 || j < 1) throw DomainError("edge-type marking requires degrees >= 1");
    if (i > j) std::swap(i, j);
    Marking m;
    m.kind = Kind::edge_type;
    m.i = i;
    m.j = j;
    return m;
  }

  bool is_none() const { return kind == Kind::none; }

  std::string to_string() const {
    switch (kind) {
      case Kind::none:
        return "none";
      case Kind::vertex_degree:
        return "degree:" + std::to_string(j);
      case Kind::edge_type:
        return "edge:" + std::to_string(i) + "," + std::to_string(j);
    }
    return "?";
  }

  friend bool operator==(const Marking& a, const Marking& b) {
    return a.kind == b.kind && a.i == b.i && a.j == b.j;
  }
  friend bool operator<(const Marking& a, const Marking& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace treecensus

#endif  // TREECENSUS_MARKING_HPP
