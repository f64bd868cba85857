#include "cdecomp/equicolor.hpp"

#include <cstdlib>
#include <string>

namespace cdecomp {

BipartiteMultigraph::BipartiteMultigraph(int left, int right)
    : left_(left), right_(right), incidence_(static_cast<std::size_t>(left + right)) {
  if (left < 0 || right < 0) throw std::invalid_argument("negative side size");
}

EdgeId BipartiteMultigraph::add_edge(int left_vertex, int right_vertex) {
  if (left_vertex < 0 || left_vertex >= left_ || right_vertex < 0 || right_vertex >= right_) {
    throw std::invalid_argument("bipartite edge must join a left vertex to a right vertex");
  }
  const EdgeId e = edge_count();
  edges_.emplace_back(left_vertex, right_vertex);
  incidence_[left_vertex].push_back(e);
  incidence_[left_ + right_vertex].push_back(e);
  return e;
}

int BipartiteMultigraph::other_end(EdgeId e, int global_vertex) const {
  const auto [a, b] = ends(e);
  if (global_vertex == a) return b;
  if (global_vertex == b) return a;
  throw ContractError("vertex is not an end of the edge");
}

std::vector<std::vector<int>> color_degrees(const BipartiteMultigraph& b, const EdgeColoring& f) {
  if (static_cast<int>(f.color.size()) != b.edge_count()) throw ContractError("coloring does not match the graph");
  std::vector<std::vector<int>> d(static_cast<std::size_t>(b.vertex_count()), std::vector<int>(f.k, 0));
  for (EdgeId e = 0; e < b.edge_count(); ++e) {
    const auto [x, y] = b.ends(e);
    ++d[x][f[e] - 1];
    ++d[y][f[e] - 1];
  }
  return d;
}

bool is_equitable(const BipartiteMultigraph& b, const EdgeColoring& f) {
  for (const auto& row : color_degrees(b, f)) {
    for (int i = 0; i < f.k; ++i)
      for (int j = 0; j < f.k; ++j)
        if (std::abs(row[i] - row[j]) > 1) return false;
  }
  return true;
}

long delta_potential(const BipartiteMultigraph& b, const EdgeColoring& f) {
  long total = 0;
  for (const auto& row : color_degrees(b, f)) {
    for (int i = 0; i < f.k; ++i)
      for (int j = 0; j < f.k; ++j) {
        if (i == j) continue;
        const long dij = std::abs(row[i] - row[j]);
        total += dij + std::abs(dij - 1) - 1;
      }
  }
  return total;
}

Trail maximal_alternating_trail(const BipartiteMultigraph& b, const EdgeColoring& f, int u, int s, int t) {
  const auto d = color_degrees(b, f);
  if (d.at(u)[s - 1] - d.at(u)[t - 1] < 2) throw ContractError("trail start needs d_s(u) - d_t(u) >= 2");
  std::vector<bool> used(static_cast<std::size_t>(b.edge_count()), false);
  Trail trail;
  trail.vertices.push_back(u);
  int cur = u;
  int want = s;
  while (true) {
    EdgeId next = -1;
    for (EdgeId e : b.incident(cur)) {
      if (!used[e] && f[e] == want) {
        next = e;
        break;
      }
    }
    if (next < 0) break;
    used[next] = true;
    cur = b.other_end(next, cur);
    trail.edges.push_back(next);
    trail.vertices.push_back(cur);
    want = want == s ? t : s;
  }
  if (trail.end() == u) throw InvariantViolation("alternating trail closed at its start");
  return trail;
}

EdgeColoring swap_trail_colors(EdgeColoring f, const Trail& trail, int s, int t) {
  for (EdgeId e : trail.edges) {
    if (f[e] != s && f[e] != t) throw ContractError("trail edge " + std::to_string(e) + " is not colored s or t");
  }
  for (EdgeId e : trail.edges) f.color[e] = f.color[e] == s ? t : s;
  return f;
}

EquitableRun equitable_coloring_run(const BipartiteMultigraph& b, int k) {
  if (k < 1) throw std::invalid_argument("need at least one color");
  EquitableRun run;
  run.coloring.k = k;
  run.coloring.color.resize(static_cast<std::size_t>(b.edge_count()));
  for (EdgeId e = 0; e < b.edge_count(); ++e) run.coloring.color[e] = e % k + 1;
  run.initial_delta = delta_potential(b, run.coloring);

  long delta = run.initial_delta;
  while (true) {
    const auto d = color_degrees(b, run.coloring);
    int best_u = -1, best_s = 0, best_t = 0, best_gap = 1;
    for (int v = 0; v < b.vertex_count() && best_u < 0; ++v) {
      for (int s = 1; s <= k; ++s)
        for (int t = 1; t <= k; ++t) {
          const int gap = d[v][s - 1] - d[v][t - 1];
          if (gap > best_gap) {  // strict: keeps the smallest (s,t) among ties
            best_gap = gap;
            best_u = v;
            best_s = s;
            best_t = t;
          }
        }
    }
    if (best_u < 0) break;
    const Trail trail = maximal_alternating_trail(b, run.coloring, best_u, best_s, best_t);
    run.coloring = swap_trail_colors(std::move(run.coloring), trail, best_s, best_t);
    ++run.swaps;
    const long next = delta_potential(b, run.coloring);
    if (next >= delta) throw InvariantViolation("trail swap did not decrease the potential");
    delta = next;
  }
  return run;
}

}  // namespace cdecomp
