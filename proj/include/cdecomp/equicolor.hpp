#pragma once

#include <utility>
#include <vector>

#include "cdecomp/multigraph.hpp"

namespace cdecomp {

/// Bipartite multigraph with left vertices 0..left-1 and right vertices
/// 0..right-1. Edge e joins left `edges[e].first` to right `edges[e].second`.
/// In vertex-ordered tie-breaks the left side precedes the right side:
/// left vertex x is global vertex x, right vertex y is global vertex left+y.
class BipartiteMultigraph {
 public:
  BipartiteMultigraph(int left, int right);

  EdgeId add_edge(int left_vertex, int right_vertex);

  int left_count() const { return left_; }
  int right_count() const { return right_; }
  int vertex_count() const { return left_ + right_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::pair<int, int>& edge(EdgeId e) const { return edges_.at(e); }

  /// Global vertex ids of the two ends of e.
  std::pair<int, int> ends(EdgeId e) const { return {edges_[e].first, left_ + edges_[e].second}; }
  int other_end(EdgeId e, int global_vertex) const;

  /// Incident edges of a global vertex in ascending EdgeId order.
  const std::vector<EdgeId>& incident(int global_vertex) const { return incidence_.at(global_vertex); }

 private:
  int left_;
  int right_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// Alternating sequence v0 e1 v1 ... em vm with no repeated edge.
struct Trail {
  std::vector<int> vertices;  // global ids, size edges.size()+1
  std::vector<EdgeId> edges;

  int start() const { return vertices.front(); }
  int end() const { return vertices.back(); }
};

/// d_i(v) for every global vertex and color 1..k; row-major [v][i-1].
std::vector<std::vector<int>> color_degrees(const BipartiteMultigraph& b, const EdgeColoring& f);

bool is_equitable(const BipartiteMultigraph& b, const EdgeColoring& f);

/// Sum over vertices and ordered color pairs i != j of
/// d_ij + |d_ij - 1| - 1, where d_ij = |d_i(v) - d_j(v)|.
long delta_potential(const BipartiteMultigraph& b, const EdgeColoring& f);

/// Maximal trail from u whose edges alternate s, t, s, ... Requires
/// d_s(u) - d_t(u) >= 2. Extends along the lowest admissible EdgeId.
Trail maximal_alternating_trail(const BipartiteMultigraph& b, const EdgeColoring& f, int u, int s, int t);

/// Exchanges colors s and t on the trail's edges.
EdgeColoring swap_trail_colors(EdgeColoring f, const Trail& trail, int s, int t);

struct EquitableRun {
  EdgeColoring coloring;
  long initial_delta = 0;
  int swaps = 0;
};

/// Round-robin start followed by trail swaps until no vertex has two colors
/// whose degrees differ by 2 or more.
EquitableRun equitable_coloring_run(const BipartiteMultigraph& b, int k);

inline EdgeColoring equitable_coloring(const BipartiteMultigraph& b, int k) {
  return equitable_coloring_run(b, k).coloring;
}

}  // namespace cdecomp
