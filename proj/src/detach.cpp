#include "cdecomp/detach.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "cdecomp/equicolor.hpp"

namespace cdecomp {

namespace {

std::string failures_text(const VerificationReport& r) {
  std::string s;
  for (const auto& f : r.failures) s += (s.empty() ? "" : "; ") + to_string(f.kind) + ": " + f.detail;
  return s;
}

int color_count(const AmalgamState& s) { return s.k() + (s.odd_mode ? 1 : 0); }

// Component label per vertex over the given edges, plus the smallest VertexId
// in each component.
struct ComponentMap {
  std::vector<int> label;
  std::vector<VertexId> smallest;
};

ComponentMap label_components(const Multigraph& g, const std::vector<EdgeId>& edges) {
  ComponentMap out;
  out.label.assign(g.vertex_count(), -1);
  for (const auto& comp : components(g, edges, true)) {
    const int id = static_cast<int>(out.smallest.size());
    VertexId best = g.vertex(comp.front());
    for (int v : comp) {
      out.label[v] = id;
      best = std::min(best, g.vertex(v));
    }
    out.smallest.push_back(best);
  }
  return out;
}

}  // namespace

std::vector<EdgeId> AmalgamState::class_edges(int color) const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < graph.edge_count(); ++e)
    if (coloring[e] == color) out.push_back(e);
  return out;
}

AmalgamState amalgamate_base(int lambda, int m, int n, const CycleDecomposition& seed) {
  if (lambda < 1 || m < 1 || n < 2) throw std::invalid_argument("need lambda, m >= 1 and n >= 2");
  const int mu = lambda * m;
  const auto seed_report = verify_decomposition(complete_multigraph(mu, n), seed);
  if (!seed_report.ok()) {
    throw std::invalid_argument("seed does not decompose " + std::to_string(mu) + "K_" + std::to_string(n) + ": " +
                                failures_text(seed_report));
  }
  const bool odd = (static_cast<long>(mu) * (n - 1)) % 2 == 1;
  if (odd != seed.one_factor.has_value()) {
    throw std::invalid_argument(odd ? "degree is odd but the seed has no 1-factor"
                                    : "degree is even but the seed has a 1-factor");
  }

  // The seed as a graph on its own edges, one color per cycle.
  Multigraph seed_graph(n);
  for (int i = 0; i < n; ++i) seed_graph.add_vertex({i, 0});
  std::vector<int> seed_color;
  AmalgamState state;
  state.lambda = lambda;
  state.m = m;
  state.n = n;
  state.odd_mode = odd;
  for (std::size_t ci = 0; ci < seed.cycles.size(); ++ci) {
    const auto& c = seed.cycles[ci];
    state.cycle_lengths.push_back(static_cast<int>(c.size()));
    const std::size_t len = c.size();
    const std::size_t edges = len == 2 ? 2 : len;
    for (std::size_t j = 0; j < edges; ++j) {
      seed_graph.add_edge(c[j % len], c[(j + 1) % len]);
      seed_color.push_back(static_cast<int>(ci) + 1);
    }
  }
  if (odd) {
    for (const auto& [a, b] : *seed.one_factor) {
      seed_graph.add_edge(a, b);
      seed_color.push_back(state.k() + 1);
    }
  }

  auto multiplied = multiply_edges(seed_graph, m);
  state.graph = std::move(multiplied.graph);
  state.coloring.k = color_count(state);
  for (EdgeId src : multiplied.source) state.coloring.color.push_back(seed_color[src]);
  state.weight.assign(n, m);
  return state;
}

bool is_detachment_connected(const Multigraph& g, int alpha, int beta) {
  std::vector<EdgeId> rest;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (ed.u != alpha && ed.v != alpha && ed.u != beta && ed.v != beta) rest.push_back(e);
  }
  const auto comps = label_components(g, rest);
  std::vector<bool> sees_alpha(comps.smallest.size(), false), sees_beta(comps.smallest.size(), false);
  for (EdgeId e : g.incident(alpha)) {
    const int w = g.edge(e).other(alpha);
    if (w != beta) sees_alpha[comps.label[w]] = true;
  }
  for (EdgeId e : g.incident(beta)) {
    const int w = g.edge(e).other(beta);
    if (w != alpha) sees_beta[comps.label[w]] = true;
  }
  for (std::size_t c = 0; c < comps.smallest.size(); ++c)
    if (sees_alpha[c] && sees_beta[c]) return true;
  return false;
}

VerificationReport check_state_properties(const AmalgamState& s) {
  VerificationReport r;
  auto fail = [&](const std::string& what) { r.add(FailureKind::PropertyViolation, what); };
  const auto& g = s.graph;

  if (static_cast<int>(s.weight.size()) != g.vertex_count()) {
    fail("weight function does not cover the vertex set");
    return r;
  }
  if (static_cast<int>(s.coloring.color.size()) != g.edge_count() || s.coloring.k != color_count(s)) {
    fail("coloring does not cover the edge set");
    return r;
  }

  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (g.vertex(ed.u).part == g.vertex(ed.v).part) {
      fail("P1: edge " + std::to_string(e) + " lies inside part " + std::to_string(g.vertex(ed.u).part));
    }
  }

  std::vector<long> part_weight(s.n, 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (s.weight[v] < 1) fail("weight of " + to_string(g.vertex(v)) + " is not positive");
    part_weight.at(g.vertex(v).part) += s.weight[v];
  }
  for (int p = 0; p < s.n; ++p) {
    if (part_weight[p] != s.m) {
      fail("P2: part " + std::to_string(p) + " has weight " + std::to_string(part_weight[p]) + ", expected " +
           std::to_string(s.m));
    }
  }

  std::map<std::pair<int, int>, int> mult;
  for (const auto& ed : g.edges()) mult[{std::min(ed.u, ed.v), std::max(ed.u, ed.v)}] += 1;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      if (g.vertex(u).part == g.vertex(v).part) continue;
      const int want = s.lambda * s.weight[u] * s.weight[v];
      auto it = mult.find({u, v});
      const int have = it == mult.end() ? 0 : it->second;
      if (have != want) {
        fail("P3: m(" + to_string(g.vertex(u)) + "," + to_string(g.vertex(v)) + ") = " + std::to_string(have) +
             ", expected " + std::to_string(want));
      }
    }

  for (int i = 1; i <= color_count(s); ++i) {
    const auto edges = s.class_edges(i);
    std::vector<int> deg(g.vertex_count(), 0);
    for (EdgeId e : edges) {
      ++deg[g.edge(e).u];
      ++deg[g.edge(e).v];
    }
    if (i <= s.k()) {
      const long want = static_cast<long>(s.cycle_lengths[i - 1]) * s.m;
      if (static_cast<long>(edges.size()) != want) {
        fail("P4a: class " + std::to_string(i) + " has " + std::to_string(edges.size()) + " edges, expected " +
             std::to_string(want));
      }
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (deg[v] != 0 && deg[v] != 2 * s.weight[v]) {
          fail("P4b: class " + std::to_string(i) + " degree of " + to_string(g.vertex(v)) + " is " +
               std::to_string(deg[v]) + ", expected 0 or " + std::to_string(2 * s.weight[v]));
        }
      }
      const auto comps = components(g, edges, false);
      if (comps.size() != 1) {
        fail("P4c: class " + std::to_string(i) + " has " + std::to_string(comps.size()) +
             " non-trivial components");
      }
    } else {
      const long want = static_cast<long>(s.m) * s.n / 2;
      if (static_cast<long>(edges.size()) != want) {
        fail("P4d: class " + std::to_string(i) + " has " + std::to_string(edges.size()) + " edges, expected " +
             std::to_string(want));
      }
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (deg[v] != s.weight[v]) {
          fail("P4e: class " + std::to_string(i) + " degree of " + to_string(g.vertex(v)) + " is " +
               std::to_string(deg[v]) + ", expected " + std::to_string(s.weight[v]));
        }
      }
    }
  }
  return r;
}

int next_split_vertex(const AmalgamState& state) {
  int best = -1;
  for (int v = 0; v < state.graph.vertex_count(); ++v) {
    if (state.weight[v] > 1 && (best < 0 || state.graph.vertex(v) < state.graph.vertex(best))) best = v;
  }
  return best;
}

AmalgamState split_vertex_step(const AmalgamState& state, int alpha) {
  if (alpha < 0 || alpha >= state.graph.vertex_count()) throw ContractError("split vertex out of range");
  const int ga = state.weight[alpha];
  if (ga < 2) throw ContractError("split vertex must have weight at least 2");
  if (auto input = check_state_properties(state); !input.ok()) {
    throw ContractError("split_vertex_step input violates " + failures_text(input));
  }
  const auto& g = state.graph;
  const int colors = color_count(state);
  const int k = state.k();

  // B: color vertices x_1..x_colors against V - alpha.
  std::vector<int> right_of(g.vertex_count(), -1);
  int right = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (v != alpha) right_of[v] = right++;
  BipartiteMultigraph b(colors, right);
  std::vector<EdgeId> b_source;  // B edge -> graph edge
  for (EdgeId e : g.incident(alpha)) {
    b.add_edge(state.coloring[e] - 1, right_of[g.edge(e).other(alpha)]);
    b_source.push_back(e);
  }
  const EdgeColoring split_coloring = equitable_coloring(b, ga);

  // B2: union of the first two color classes.
  std::vector<EdgeId> b2;  // B edge ids
  for (EdgeId be = 0; be < b.edge_count(); ++be)
    if (split_coloring[be] <= 2) b2.push_back(be);

  // K': colors with a component H_i of class i minus alpha receiving exactly
  // two B2 edges from x_i.
  std::map<int, ComponentMap> class_components;
  std::map<int, int> chosen_component;  // color -> component label
  for (int i = 1; i <= k; ++i) {
    std::vector<EdgeId> rest;
    bool touches_alpha = false;
    for (EdgeId e : state.class_edges(i)) {
      const auto& ed = g.edge(e);
      if (ed.u == alpha || ed.v == alpha) {
        touches_alpha = true;
      } else {
        rest.push_back(e);
      }
    }
    if (!touches_alpha) continue;
    auto comps = label_components(g, rest);
    std::map<int, int> hits;
    for (EdgeId be : b2) {
      if (b.edge(be).first != i - 1) continue;
      ++hits[comps.label[g.edge(b_source[be]).other(alpha)]];
    }
    int pick = -1;
    for (const auto& [label, count] : hits) {
      if (count != 2) continue;
      if (pick < 0 || comps.smallest[label] < comps.smallest[pick]) pick = label;
    }
    if (pick >= 0) chosen_component[i] = pick;
    class_components.emplace(i, std::move(comps));
  }

  // B2': x_i keeps its two H_i edges, y_i takes the other two.
  std::map<int, int> y_index;
  for (const auto& [i, label] : chosen_component) y_index[i] = colors + static_cast<int>(y_index.size());
  BipartiteMultigraph b2p(colors + static_cast<int>(y_index.size()), right);
  std::vector<EdgeId> b2p_source;  // B2' edge -> graph edge
  std::vector<bool> b2p_in_h;
  for (EdgeId be : b2) {
    const int i = b.edge(be).first + 1;
    const EdgeId e = b_source[be];
    int left = i - 1;
    bool in_h = false;
    if (auto it = chosen_component.find(i); it != chosen_component.end()) {
      in_h = class_components.at(i).label[g.edge(e).other(alpha)] == it->second;
      if (!in_h) left = y_index.at(i);
    }
    b2p.add_edge(left, b.edge(be).second);
    b2p_source.push_back(e);
    b2p_in_h.push_back(in_h);
  }
  const EdgeColoring halves = equitable_coloring(b2p, 2);

  int keep = 1;
  if (!chosen_component.empty()) {
    const int lowest = chosen_component.begin()->first;
    EdgeId best = -1;
    for (EdgeId pe = 0; pe < b2p.edge_count(); ++pe) {
      if (!b2p_in_h[pe] || b2p.edge(pe).first != lowest - 1) continue;
      if (best < 0 || b2p_source[pe] < b2p_source[best]) best = pe;
    }
    keep = halves[best];
  }
  std::vector<EdgeId> moved;
  for (EdgeId pe = 0; pe < b2p.edge_count(); ++pe)
    if (halves[pe] == keep) moved.push_back(b2p_source[pe]);

  if (state.odd_mode) {
    const int factor_edges = static_cast<int>(
        std::count_if(moved.begin(), moved.end(), [&](EdgeId e) { return state.coloring[e] == k + 1; }));
    if (factor_edges != 1) {
      throw InvariantViolation("B1 carries " + std::to_string(factor_edges) + " edges of the 1-factor class");
    }
  }

  AmalgamState next = state;
  const VertexId a = g.vertex(alpha);
  const int beta = next.graph.add_vertex({a.part, g.max_slot(a.part) + 1});
  next.weight.push_back(1);
  next.weight[alpha] -= 1;
  for (EdgeId e : moved) next.graph.move_endpoint(e, alpha, beta);

  for (int i = 1; i <= k; ++i) {
    if (components(next.graph, next.class_edges(i), false).size() != 1) {
      throw InvariantViolation("P4c: class " + std::to_string(i) + " split into several components at " +
                               to_string(a));
    }
  }
  return next;
}

CycleDecomposition extract_decomposition(const AmalgamState& state) {
  for (int v = 0; v < state.graph.vertex_count(); ++v) {
    if (state.weight[v] != 1) throw ContractError("extraction needs a fully detached state");
  }
  CycleDecomposition d;
  d.context = {state.lambda, state.m, state.n};
  for (int i = 1; i <= state.k(); ++i) {
    auto cycles = two_regular_cycles(state.graph, state.class_edges(i));
    if (cycles.size() != 1) {
      throw InvariantViolation("class " + std::to_string(i) + " is not a single cycle (" +
                               std::to_string(cycles.size()) + " components)");
    }
    d.cycles.push_back(std::move(cycles.front()));
  }
  if (state.odd_mode) {
    std::vector<VertexPair> pairs;
    for (EdgeId e : state.class_edges(state.k() + 1)) {
      VertexId a = state.graph.vertex(state.graph.edge(e).u);
      VertexId b = state.graph.vertex(state.graph.edge(e).v);
      if (b < a) std::swap(a, b);
      pairs.emplace_back(a, b);
    }
    d.one_factor = std::move(pairs);
  }
  return d;
}

CycleDecomposition detach_full(int lambda, int m, int n, const CycleDecomposition& seed,
                               const DetachOptions& options) {
  AmalgamState state = amalgamate_base(lambda, m, n, seed);
  auto check = [&](int step) {
    if (options.check_each_step) {
      if (auto r = check_state_properties(state); !r.ok()) {
        throw InvariantViolation("after step " + std::to_string(step) + ": " + failures_text(r));
      }
    }
    if (options.observer) options.observer(state, step);
  };
  check(0);
  int steps = 0;
  for (int alpha = next_split_vertex(state); alpha >= 0; alpha = next_split_vertex(state)) {
    state = split_vertex_step(state, alpha);
    check(++steps);
  }
  if (steps != m * n - n) throw InvariantViolation("detachment took " + std::to_string(steps) + " steps");

  CycleDecomposition d = extract_decomposition(state);
  std::vector<int> expected;
  for (int c : state.cycle_lengths) expected.push_back(c * m);
  const auto final_report = verify_decomposition(complete_equipartite(lambda, n, m), d, expected);
  if (!final_report.ok()) throw InvariantViolation("final decomposition: " + failures_text(final_report));
  return d;
}

}  // namespace cdecomp
