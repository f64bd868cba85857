#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cdecomp {

/// Raised when a caller breaks a documented precondition.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when an internal construction invariant fails. The message names
/// the property that broke.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A vertex named by its part and a slot inside that part. Serialized as
/// `part.slot`.
struct VertexId {
  int part = 0;
  int slot = 0;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

std::string to_string(VertexId v);

using EdgeId = int;

struct Edge {
  int u = 0;  // vertex index
  int v = 0;

  int other(int w) const { return w == u ? v : u; }
};

/// Undirected loopless multigraph with a part structure and dense, stable
/// edge identities. Vertices are addressed by dense indices internally and by
/// VertexId externally.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int n_parts) : n_parts_(n_parts) {}

  int n_parts() const { return n_parts_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  int add_vertex(VertexId id);
  EdgeId add_edge(int u, int v);
  EdgeId add_edge(VertexId u, VertexId v) { return add_edge(index_of(u), index_of(v)); }

  /// Reattaches the `from` end of edge `e` to vertex `to`. The EdgeId is kept.
  void move_endpoint(EdgeId e, int from, int to);

  const VertexId& vertex(int index) const { return vertices_.at(index); }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool contains(VertexId id) const { return index_.count(id) != 0; }
  int index_of(VertexId id) const;

  /// Incident edges of a vertex in ascending EdgeId order.
  const std::vector<EdgeId>& incident(int v) const { return incidence_.at(v); }

  int degree(int v) const { return static_cast<int>(incidence_.at(v).size()); }
  int multiplicity(int u, int v) const;

  /// Largest slot used in `part`, or -1 if the part is empty.
  int max_slot(int part) const;

 private:
  int n_parts_ = 0;
  std::vector<VertexId> vertices_;
  std::map<VertexId, int> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// Total map from edge identity to a color in 1..k.
struct EdgeColoring {
  int k = 0;
  std::vector<int> color;  // indexed by EdgeId

  int operator[](EdgeId e) const { return color.at(e); }
  int class_size(int c) const;
};

/// mu*K_n: vertex i is VertexId{i, 0}, each vertex its own part.
Multigraph complete_multigraph(int mu, int n);

/// lambda*K_{n x m}: vertices VertexId{p, s} for p < n, s < m.
Multigraph complete_equipartite(int lambda, int n, int m);

struct MultipliedGraph {
  Multigraph graph;
  std::vector<EdgeId> source;  // new EdgeId -> EdgeId in the original
};

/// Replaces every edge by m parallel copies. Copies of edge e receive the
/// EdgeIds m*e .. m*e+m-1.
MultipliedGraph multiply_edges(const Multigraph& g, int m);

/// Connected components over the given edge subset, as lists of vertex
/// indices. Vertices with no selected edge are reported as singletons only
/// when `include_isolated` is true.
std::vector<std::vector<int>> components(const Multigraph& g, const std::vector<EdgeId>& edges,
                                         bool include_isolated);

}  // namespace cdecomp
