#include "cdecomp/multigraph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace cdecomp {

std::string to_string(VertexId v) { return std::to_string(v.part) + "." + std::to_string(v.slot); }

int Multigraph::add_vertex(VertexId id) {
  if (id.part < 0 || id.part >= n_parts_) {
    throw std::invalid_argument("vertex " + to_string(id) + " lies outside the part range");
  }
  if (!index_.emplace(id, vertex_count()).second) {
    throw std::invalid_argument("duplicate vertex " + to_string(id));
  }
  vertices_.push_back(id);
  incidence_.emplace_back();
  return vertex_count() - 1;
}

EdgeId Multigraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) {
    throw std::out_of_range("edge endpoint out of range");
  }
  if (u == v) throw std::invalid_argument("loop at vertex " + to_string(vertices_[u]));
  const EdgeId e = edge_count();
  edges_.push_back({u, v});
  incidence_[u].push_back(e);
  incidence_[v].push_back(e);
  return e;
}

void Multigraph::move_endpoint(EdgeId e, int from, int to) {
  Edge& edge = edges_.at(e);
  if (edge.u != from && edge.v != from) throw ContractError("edge is not incident with the source vertex");
  if (edge.other(from) == to) throw ContractError("moving the endpoint would create a loop");
  (edge.u == from ? edge.u : edge.v) = to;
  auto& src = incidence_.at(from);
  src.erase(std::find(src.begin(), src.end(), e));
  auto& dst = incidence_.at(to);
  dst.insert(std::lower_bound(dst.begin(), dst.end(), e), e);
}

int Multigraph::index_of(VertexId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::out_of_range("unknown vertex " + to_string(id));
  return it->second;
}

int Multigraph::multiplicity(int u, int v) const {
  const auto& inc = incidence_.at(u);
  return static_cast<int>(
      std::count_if(inc.begin(), inc.end(), [&](EdgeId e) { return edges_[e].other(u) == v; }));
}

int Multigraph::max_slot(int part) const {
  int best = -1;
  auto it = index_.lower_bound(VertexId{part, std::numeric_limits<int>::min()});
  for (; it != index_.end() && it->first.part == part; ++it) best = std::max(best, it->first.slot);
  return best;
}

int EdgeColoring::class_size(int c) const {
  return static_cast<int>(std::count(color.begin(), color.end(), c));
}

Multigraph complete_multigraph(int mu, int n) {
  if (n < 2) throw std::invalid_argument("complete multigraph needs n >= 2");
  if (mu < 1) throw std::invalid_argument("multiplicity must be positive");
  Multigraph g(n);
  for (int i = 0; i < n; ++i) g.add_vertex({i, 0});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int r = 0; r < mu; ++r) g.add_edge(i, j);
  return g;
}

Multigraph complete_equipartite(int lambda, int n, int m) {
  if (n < 2) throw std::invalid_argument("complete equipartite multigraph needs n >= 2");
  if (lambda < 1 || m < 1) throw std::invalid_argument("lambda and m must be positive");
  Multigraph g(n);
  for (int p = 0; p < n; ++p)
    for (int s = 0; s < m; ++s) g.add_vertex({p, s});
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      if (g.vertex(u).part == g.vertex(v).part) continue;
      for (int r = 0; r < lambda; ++r) g.add_edge(u, v);
    }
  return g;
}

MultipliedGraph multiply_edges(const Multigraph& g, int m) {
  if (m < 1) throw std::invalid_argument("edge multiplier must be positive");
  MultipliedGraph out{Multigraph(g.n_parts()), {}};
  for (const auto& v : g.vertices()) out.graph.add_vertex(v);
  out.source.reserve(static_cast<std::size_t>(g.edge_count()) * m);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (int r = 0; r < m; ++r) {
      out.graph.add_edge(g.edge(e).u, g.edge(e).v);
      out.source.push_back(e);
    }
  }
  return out;
}

std::vector<std::vector<int>> components(const Multigraph& g, const std::vector<EdgeId>& edges,
                                         bool include_isolated) {
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> touched(g.vertex_count(), false);
  for (EdgeId e : edges) {
    const auto& ed = g.edge(e);
    touched[ed.u] = touched[ed.v] = true;
    parent[find(ed.u)] = find(ed.v);
  }
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (touched[v] || include_isolated) groups[find(v)].push_back(v);
  }
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cdecomp
