#include "cdecomp/refine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "cdecomp/basecases.hpp"
#include "cdecomp/equicolor.hpp"
#include "cdecomp/search.hpp"

namespace cdecomp {

int LengthPartition::total() const { return std::accumulate(q.begin(), q.end(), 0); }

CycleDecomposition RefinedDecomposition::flatten() const {
  CycleDecomposition d;
  d.context = context;
  for (const auto& f : subgraphs) d.cycles.insert(d.cycles.end(), f.begin(), f.end());
  d.one_factor = one_factor;
  return d;
}

std::vector<int> RefinedDecomposition::component_lengths(int i) const {
  std::vector<int> out;
  for (const auto& c : subgraphs.at(i - 1)) out.push_back(static_cast<int>(c.size()));
  std::sort(out.begin(), out.end());
  return out;
}

FlowerResult flower_detach(const std::vector<Cycle>& petals, VertexId hub, const std::vector<VertexId>& copies,
                           const std::vector<int>& q) {
  if (petals.empty()) throw std::invalid_argument("flower has no petals");
  if (std::any_of(q.begin(), q.end(), [](int x) { return x < 1; }))
    throw std::invalid_argument("composition parts must be positive");
  if (std::accumulate(q.begin(), q.end(), 0) != static_cast<int>(petals.size()))
    throw std::invalid_argument("composition does not sum to the number of petals");
  if (copies.size() != petals.size()) throw std::invalid_argument("need one hub copy per petal");

  std::set<VertexId> labels(copies.begin(), copies.end());
  if (labels.size() != copies.size() || labels.count(hub))
    throw std::invalid_argument("hub copies must be distinct and differ from the hub");

  const std::size_t c = petals.front().size();
  if (c < 2) throw std::invalid_argument("petals must have length at least 2");
  std::set<VertexId> seen;
  for (const auto& p : petals) {
    if (p.size() != c) throw std::invalid_argument("petals differ in length");
    if (p.front() != hub) throw std::invalid_argument("petal does not start at the hub");
    for (std::size_t j = 1; j < p.size(); ++j) {
      if (p[j] == hub || labels.count(p[j])) throw std::invalid_argument("petal revisits the hub");
      if (!seen.insert(p[j]).second)
        throw std::invalid_argument("petals meet outside the hub at " + to_string(p[j]));
    }
  }

  FlowerResult out;
  out.entry_copy.resize(petals.size());
  out.exit_copy.resize(petals.size());
  int base = 0;
  for (int len : q) {
    Cycle cycle;
    for (int t = 0; t < len; ++t) {
      const int p = base + t;
      out.entry_copy[p] = p;
      out.exit_copy[p] = base + (t + 1) % len;
      cycle.push_back(copies[p]);
      cycle.insert(cycle.end(), petals[p].begin() + 1, petals[p].end());
    }
    out.cycles.push_back(std::move(cycle));
    base += len;
  }
  return out;
}

std::vector<std::vector<int>> one_factorization_Kmm(int lambda, int m) {
  if (lambda < 1 || m < 1) throw std::invalid_argument("need lambda, m >= 1");
  std::vector<std::vector<int>> out;
  for (int d = 0; d < lambda * m; ++d) {
    std::vector<int> matching(m);
    for (int i = 0; i < m; ++i) matching[i] = (i + d / lambda) % m;
    out.push_back(std::move(matching));
  }
  return out;
}

bool check_ordering(const CycleDecomposition& cd, const std::vector<int>& order, int N) {
  const int k = static_cast<int>(cd.cycles.size());
  if (static_cast<int>(order.size()) != k || N < 1 || N > k) return false;
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < k; ++i)
    if (sorted[i] != i) return false;
  std::set<VertexId> seen;
  for (int i = 0; i < N; ++i) {
    const auto& c = cd.cycles[order[i]];
    const bool fresh = std::any_of(c.begin(), c.end(), [&](const VertexId& v) { return !seen.count(v); });
    if (!fresh) return false;
    seen.insert(c.begin(), c.end());
  }
  return N <= cd.context.n - static_cast<int>(cd.cycles[order[0]].size()) + 1;
}

namespace {

std::string report_text(const VerificationReport& r) {
  std::string s;
  for (const auto& f : r.failures) s += (s.empty() ? "" : "; ") + to_string(f.kind) + ": " + f.detail;
  return s;
}

std::vector<int> scaled(const LengthPartition& p, int c) {
  std::vector<int> out;
  for (int x : p.q) out.push_back(x * c);
  std::sort(out.begin(), out.end());
  return out;
}

std::string lengths_text(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "{" + s + "}";
}

// One edge occurrence of the seed: it becomes a perfect matching between the
// copies of its two ends.
struct Group {
  int cls;  // 1-based; the 1-factor class follows the cycle classes
  int a;    // seed vertex, a < b
  int b;
};

class Lifter {
 public:
  Lifter(int lambda, int m, int n) : lambda_(lambda), m_(m), n_(n) {}

  int add_group(int cls, int x, int y) {
    const int id = static_cast<int>(groups_.size());
    groups_.push_back({cls, std::min(x, y), std::max(x, y)});
    perm_.emplace_back();
    bundles_[{std::min(x, y), std::max(x, y)}].push_back(id);
    return id;
  }

  const Group& group(int g) const { return groups_[g]; }
  int group_count() const { return static_cast<int>(groups_.size()); }
  bool lifted(int g) const { return !perm_[g].empty(); }

  // Lifts every group of the bundle {x, y}; `prescribed` maps group id to
  // its matching (from copies of the smaller end to copies of the larger).
  void lift(int x, int y, const std::map<int, std::vector<int>>& prescribed = {}) {
    const int a = std::min(x, y), b = std::max(x, y);
    const auto& ids = bundles_.at({a, b});
    if (static_cast<int>(ids.size()) != lambda_ * m_) {
      throw InvariantViolation("bundle " + std::to_string(a) + "-" + std::to_string(b) + " has " +
                               std::to_string(ids.size()) + " groups");
    }
    for (int g : ids)
      if (lifted(g)) throw InvariantViolation("bundle " + std::to_string(a) + "-" + std::to_string(b) + " lifted twice");

    if (prescribed.empty()) {
      const auto factorization = one_factorization_Kmm(lambda_, m_);
      for (std::size_t t = 0; t < ids.size(); ++t) perm_[ids[t]] = factorization[t];
      return;
    }

    std::vector<std::vector<int>> rest(m_, std::vector<int>(m_, lambda_));
    for (const auto& [g, p] : prescribed) {
      if (std::find(ids.begin(), ids.end(), g) == ids.end()) throw InvariantViolation("prescribed group off bundle");
      std::vector<int> check = p;
      std::sort(check.begin(), check.end());
      for (int i = 0; i < m_; ++i)
        if (static_cast<int>(check.size()) != m_ || check[i] != i)
          throw InvariantViolation("prescribed matching is not a permutation");
      for (int i = 0; i < m_; ++i) {
        if (--rest[i][p[i]] < 0) {
          throw InvariantViolation("prescribed matchings exceed multiplicity " + std::to_string(lambda_) +
                                   " on bundle " + std::to_string(a) + "-" + std::to_string(b));
        }
      }
    }
    std::vector<int> free;
    for (int g : ids)
      if (!prescribed.count(g)) free.push_back(g);
    if (!free.empty()) {
      // The remainder is regular of degree |free|; an equitable coloring with
      // that many colors splits it into perfect matchings.
      BipartiteMultigraph rb(m_, m_);
      for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j)
          for (int r = 0; r < rest[i][j]; ++r) rb.add_edge(i, j);
      const int d = static_cast<int>(free.size());
      const EdgeColoring f = equitable_coloring(rb, d);
      std::vector<std::vector<int>> matchings(d, std::vector<int>(m_, -1));
      for (EdgeId e = 0; e < rb.edge_count(); ++e) {
        auto& slot = matchings[f[e] - 1][rb.edge(e).first];
        if (slot != -1) throw InvariantViolation("remainder coloring is not a 1-factorization");
        slot = rb.edge(e).second;
      }
      for (int t = 0; t < d; ++t) perm_[free[t]] = matchings[t];
    }
    for (const auto& [g, p] : prescribed) perm_[g] = p;
  }

  // Copy reached from copy `copy` of `from` along group g.
  int step(int g, int from, int copy) const {
    const auto& p = perm_[g];
    if (from == groups_[g].a) return p[copy];
    return static_cast<int>(std::find(p.begin(), p.end(), copy) - p.begin());
  }

  // Intermediate graph: split vertices as m copies, the others as slot 0.
  StageSnapshot snapshot(const std::vector<bool>& split) const {
    StageSnapshot s{Multigraph(n_), {}, {}, {}};
    std::vector<std::vector<int>> index(n_);
    for (int x = 0; x < n_; ++x) {
      for (int j = 0; j < (split[x] ? m_ : 1); ++j) {
        index[x].push_back(s.graph.add_vertex({x, j}));
        s.weight.push_back(split[x] ? 1 : m_);
      }
    }
    int colors = 0;
    for (int g = 0; g < group_count(); ++g) {
      const auto& gr = groups_[g];
      colors = std::max(colors, gr.cls);
      for (int i = 0; i < m_; ++i) {
        int u = index[gr.a][0], v = index[gr.b][0];
        if (split[gr.a] && split[gr.b]) {
          if (!lifted(g)) throw InvariantViolation("split bundle left unlifted");
          u = index[gr.a][i];
          v = index[gr.b][perm_[g][i]];
        } else if (split[gr.a]) {
          u = index[gr.a][i];
        } else if (split[gr.b]) {
          v = index[gr.b][i];
        }
        s.graph.add_edge(u, v);
        s.coloring.color.push_back(gr.cls);
      }
    }
    s.coloring.k = colors;
    return s;
  }

  RefinedDecomposition result(int classes, bool factor, int lambda_label) const {
    const StageSnapshot s = snapshot(std::vector<bool>(n_, true));
    RefinedDecomposition out;
    out.context = {lambda_label, m_, n_};
    std::vector<std::vector<EdgeId>> by_class(classes + 2);
    for (EdgeId e = 0; e < s.graph.edge_count(); ++e) by_class[s.coloring[e]].push_back(e);
    for (int i = 1; i <= classes; ++i) out.subgraphs.push_back(two_regular_cycles(s.graph, by_class[i]));
    if (factor) {
      std::vector<VertexPair> pairs;
      for (EdgeId e : by_class[classes + 1]) {
        VertexId u = s.graph.vertex(s.graph.edge(e).u), v = s.graph.vertex(s.graph.edge(e).v);
        if (v < u) std::swap(u, v);
        pairs.emplace_back(u, v);
      }
      out.one_factor = std::move(pairs);
    }
    return out;
  }

 private:
  int lambda_;
  int m_;
  int n_;
  std::vector<Group> groups_;
  std::vector<std::vector<int>> perm_;
  std::map<std::pair<int, int>, std::vector<int>> bundles_;
};

// A class of the lift: its seed cycle and the group of each cycle edge
// (edge j joins cycle[j] and cycle[j+1]).
struct LiftedClass {
  std::vector<int> cycle;
  std::vector<int> edge_group;
};

LiftedClass add_class(Lifter& lifter, int cls, const Cycle& cycle) {
  LiftedClass lc;
  for (const auto& v : cycle) lc.cycle.push_back(v.part);
  const int c = static_cast<int>(lc.cycle.size());
  for (int j = 0; j < c; ++j) lc.edge_group.push_back(lifter.add_group(cls, lc.cycle[j], lc.cycle[(j + 1) % c]));
  return lc;
}

// Lifts the bundle {v, w} with the class's own matching chosen by a petal
// splice at v, so that the class becomes cycles of lengths q_j * c. Every
// other edge of the class must already be lifted.
void splice_class(Lifter& lifter, const LiftedClass& lc, int v, int w, int m, const LengthPartition& part) {
  const int c = static_cast<int>(lc.cycle.size());
  const int pv = static_cast<int>(std::find(lc.cycle.begin(), lc.cycle.end(), v) - lc.cycle.begin());
  // Walk v = p_0, ..., p_{c-1} = w and close back along (w, v).
  std::vector<int> path, path_group;
  int closing = -1;
  std::map<int, std::vector<int>> prescribed;
  if (c == 2) {
    path = {v, w};
    path_group = {lc.edge_group[0]};
    closing = lc.edge_group[1];
    std::vector<int> identity(m);
    std::iota(identity.begin(), identity.end(), 0);
    prescribed[path_group[0]] = identity;
  } else {
    const bool backwards = lc.cycle[(pv + 1) % c] == w;
    for (int j = 0; j < c; ++j) path.push_back(lc.cycle[((backwards ? pv - j : pv + j) % c + c) % c]);
    for (int j = 0; j + 1 < c; ++j) path_group.push_back(lc.edge_group[((backwards ? pv - j - 1 : pv + j) % c + c) % c]);
    closing = lc.edge_group[((backwards ? pv : pv - 1) % c + c) % c];
    for (int g : path_group)
      if (!lifter.lifted(g)) throw InvariantViolation("petal edge not lifted before the splice");
  }

  const VertexId hub{v, -1};
  std::vector<VertexId> copies;
  std::vector<Cycle> petals;
  std::vector<int> tail(m);
  for (int a = 0; a < m; ++a) {
    copies.push_back({v, a});
    Cycle petal{hub};
    int cur = a;
    for (int j = 0; j + 1 < c; ++j) {
      cur = prescribed.count(path_group[j]) ? prescribed.at(path_group[j])[cur] : lifter.step(path_group[j], path[j], cur);
      petal.push_back({path[j + 1], cur});
    }
    tail[a] = cur;
    petals.push_back(std::move(petal));
  }
  const FlowerResult flower = flower_detach(petals, hub, copies, part.q);

  std::vector<int> join(m);
  for (int a = 0; a < m; ++a) {
    if (flower.entry_copy[a] != a) throw InvariantViolation("petal entered through a foreign copy");
    // w-copy tail[a] joins v-copy exit_copy[a].
    if (v < w) {
      join[flower.exit_copy[a]] = tail[a];
    } else {
      join[tail[a]] = flower.exit_copy[a];
    }
  }
  prescribed[closing] = join;
  lifter.lift(v, w, prescribed);
}

void validate_partition(const LengthPartition& p, int m, int lambda, int c, int cls) {
  const std::string where = "partition of class " + std::to_string(cls);
  if (p.q.empty() || std::any_of(p.q.begin(), p.q.end(), [](int x) { return x < 1; }))
    throw std::invalid_argument(where + " needs positive parts");
  if (p.total() != m) throw std::invalid_argument(where + " does not sum to m = " + std::to_string(m));
  if (lambda == 1 && c == 2 && std::any_of(p.q.begin(), p.q.end(), [](int x) { return x < 2; }))
    throw std::invalid_argument(where + ": a 2-cycle class with lambda = 1 needs every part >= 2");
}

void check_class_lengths(const RefinedDecomposition& r, int cls, const std::vector<int>& want) {
  if (r.component_lengths(cls) != want) {
    throw InvariantViolation("class " + std::to_string(cls) + " has components " +
                             lengths_text(r.component_lengths(cls)) + ", expected " + lengths_text(want));
  }
}

void check_final(const RefinedDecomposition& r, int lambda, int m, int n, const std::vector<int>& class_lengths) {
  for (std::size_t i = 0; i < class_lengths.size(); ++i) {
    int edges = 0;
    for (const auto& c : r.subgraphs[i]) edges += static_cast<int>(c.size());
    if (edges != class_lengths[i] * m) {
      throw InvariantViolation("F_" + std::to_string(i + 1) + " has " + std::to_string(edges) + " edges, expected " +
                               std::to_string(class_lengths[i] * m));
    }
  }
  const auto report = verify_decomposition(complete_equipartite(lambda, n, m), r.flatten());
  if (!report.ok()) throw InvariantViolation("refined decomposition: " + report_text(report));
}

// R0'-R2' on the graph after stage s.
VerificationReport check_stage(const StageSnapshot& s, int lambda, int m, int n, const std::vector<bool>& split,
                               const std::vector<bool>& expected_split, const std::vector<int>& class_lengths,
                               const std::vector<LengthPartition>& parts, int stage, bool factor) {
  VerificationReport r;
  auto fail = [&](const std::string& what) { r.add(FailureKind::PropertyViolation, what); };
  const auto& g = s.graph;
  if (split != expected_split) fail("R0': split set differs from the vertices of the first cycles");

  std::map<std::pair<int, int>, int> mult;
  for (const auto& e : g.edges()) {
    if (g.vertex(e.u).part == g.vertex(e.v).part) fail("R0': edge inside part " + std::to_string(g.vertex(e.u).part));
    ++mult[{std::min(e.u, e.v), std::max(e.u, e.v)}];
  }
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      if (g.vertex(u).part == g.vertex(v).part) continue;
      const int want = lambda * s.weight[u] * s.weight[v];
      const auto it = mult.find({u, v});
      if ((it == mult.end() ? 0 : it->second) != want)
        fail("R0': wrong multiplicity between " + to_string(g.vertex(u)) + " and " + to_string(g.vertex(v)));
    }

  const int k = static_cast<int>(class_lengths.size());
  std::vector<std::vector<EdgeId>> by_class(k + 2);
  for (EdgeId e = 0; e < g.edge_count(); ++e) by_class.at(s.coloring[e]).push_back(e);
  for (int i = 1; i <= k + (factor ? 1 : 0); ++i) {
    const long want = i <= k ? static_cast<long>(class_lengths[i - 1]) * m : static_cast<long>(m) * n / 2;
    if (static_cast<long>(by_class[i].size()) != want) {
      fail("R1': class " + std::to_string(i) + " has " + std::to_string(by_class[i].size()) + " edges, expected " +
           std::to_string(want));
    }
    std::vector<int> deg(g.vertex_count(), 0);
    for (EdgeId e : by_class[i]) {
      ++deg[g.edge(e).u];
      ++deg[g.edge(e).v];
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!split[g.vertex(v).part]) continue;
      const bool good = i <= k ? (deg[v] == 0 || deg[v] == 2) : deg[v] == 1;
      if (!good) fail("R1'': class " + std::to_string(i) + " degree " + std::to_string(deg[v]) + " at " + to_string(g.vertex(v)));
    }
  }
  for (int i = 1; i <= stage; ++i) {
    try {
      std::vector<int> lens;
      for (const auto& c : two_regular_cycles(g, by_class[i])) lens.push_back(static_cast<int>(c.size()));
      std::sort(lens.begin(), lens.end());
      const auto want = scaled(parts[i - 1], class_lengths[i - 1]);
      if (lens != want) {
        fail("R2': class " + std::to_string(i) + " has components " + lengths_text(lens) + ", expected " +
             lengths_text(want));
      }
    } catch (const InvariantViolation& e) {
      fail("R2': class " + std::to_string(i) + ": " + e.what());
    }
  }
  return r;
}

}  // namespace

RefinedDecomposition refined_detach(int lambda, int m, int n, const OrderedCD& ocd,
                                    const std::vector<LengthPartition>& parts, const RefineOptions& options) {
  if (lambda < 1 || m < 1 || n < 2) throw std::invalid_argument("need lambda, m >= 1 and n >= 2");
  const auto& cd = ocd.cd;
  const auto seed_report = verify_decomposition(complete_multigraph(lambda * m, n), cd);
  if (!seed_report.ok()) throw std::invalid_argument("seed does not decompose lambda*m*K_n: " + report_text(seed_report));
  const bool factor = (static_cast<long>(lambda) * m * (n - 1)) % 2 == 1;
  if (factor != cd.one_factor.has_value()) throw std::invalid_argument("seed 1-factor does not match the degree parity");

  CycleDecomposition sized = cd;
  sized.context.n = n;
  if (!check_ordering(sized, ocd.order, ocd.N)) {
    throw std::invalid_argument("ordering does not satisfy the hypothesis (new vertex per cycle, N <= n - c_1 + 1)");
  }
  const int k = static_cast<int>(cd.cycles.size());
  const int N = ocd.N;
  if (static_cast<int>(parts.size()) != N) throw std::invalid_argument("need one length partition per governed class");

  std::vector<int> class_lengths;
  for (int i = 0; i < k; ++i) class_lengths.push_back(static_cast<int>(cd.cycles[ocd.order[i]].size()));
  for (int i = 0; i < N; ++i) validate_partition(parts[i], m, lambda, class_lengths[i], i + 1);

  Lifter lifter(lambda, m, n);
  std::vector<LiftedClass> classes;
  for (int i = 0; i < k; ++i) classes.push_back(add_class(lifter, i + 1, cd.cycles[ocd.order[i]]));
  if (factor)
    for (const auto& [u, v] : *cd.one_factor) lifter.add_group(k + 1, u.part, v.part);

  std::vector<bool> split(n, false);
  auto split_vertex = [&](int x, int skip) {
    split[x] = true;
    for (int y = 0; y < n; ++y)
      if (y != x && y != skip && split[y]) lifter.lift(x, y);
  };

  std::vector<bool> covered(n, false);
  for (int s = 1; s <= N; ++s) {
    const auto& lc = classes[s - 1];
    std::set<int> fresh;
    for (int x : lc.cycle)
      if (!split[x]) fresh.insert(x);
    const int v = *fresh.begin();
    const int c = static_cast<int>(lc.cycle.size());
    const int pv = static_cast<int>(std::find(lc.cycle.begin(), lc.cycle.end(), v) - lc.cycle.begin());
    const int w = std::min(lc.cycle[(pv + 1) % c], lc.cycle[(pv + c - 1) % c]);

    for (int x : fresh)
      if (x != v) split_vertex(x, -1);
    split_vertex(v, w);
    splice_class(lifter, lc, v, w, m, parts[s - 1]);

    for (int x : lc.cycle) covered[x] = true;
    if (options.check_each_stage || options.observer) {
      StageSnapshot snap = lifter.snapshot(split);
      snap.report = check_stage(snap, lambda, m, n, split, covered, class_lengths, parts, s, factor);
      if (options.check_each_stage && !snap.report.ok())
        throw InvariantViolation("stage " + std::to_string(s) + ": " + report_text(snap.report));
      if (options.observer) options.observer(s, snap);
    }
  }
  for (int x = 0; x < n; ++x)
    if (!split[x]) split_vertex(x, -1);

  RefinedDecomposition out = lifter.result(k, factor, lambda);
  for (int i = 1; i <= N; ++i) check_class_lengths(out, i, scaled(parts[i - 1], class_lengths[i - 1]));
  check_final(out, lambda, m, n, class_lengths);
  return out;
}

RefinedDecomposition uniform_refined(int m, const CycleDecomposition& seed, const std::vector<LengthPartition>& parts) {
  const int n = seed.context.n;
  if (n % 2 == 0) throw std::invalid_argument("n must be odd");
  if (m < 1) throw std::invalid_argument("m must be positive");
  const auto seed_report = verify_decomposition(complete_multigraph(1, n), seed);
  if (!seed_report.ok()) throw std::invalid_argument("seed does not decompose K_n: " + report_text(seed_report));
  const int k = static_cast<int>(seed.cycles.size());
  for (const auto& c : seed.cycles)
    if (c.size() < 3) throw std::invalid_argument("seed cycles must have length at least 3");
  if (static_cast<int>(parts.size()) != k) throw std::invalid_argument("need one length partition per seed cycle");
  for (int i = 0; i < k; ++i) validate_partition(parts[i], m, 1, static_cast<int>(seed.cycles[i].size()), i + 1);

  // Every pair lies on exactly one of C_1..C_k.
  std::map<std::pair<int, int>, int> on_pair;
  for (const auto& c : seed.cycles)
    for (std::size_t j = 0; j < c.size(); ++j) {
      const int a = c[j].part, b = c[(j + 1) % c.size()].part;
      ++on_pair[{std::min(a, b), std::max(a, b)}];
    }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (on_pair[{a, b}] != 1) throw InvariantViolation("pair " + std::to_string(a) + "-" + std::to_string(b) +
                                                         " is not on exactly one seed cycle");

  Lifter lifter(1, m, n);
  std::vector<LiftedClass> classes;
  std::vector<int> class_lengths;
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < k; ++i) {
      classes.push_back(add_class(lifter, j * k + i + 1, seed.cycles[i]));
      class_lengths.push_back(static_cast<int>(seed.cycles[i].size()));
    }

  for (int s = 1; s <= k; ++s) {
    const auto& lc = classes[s - 1];
    const int c = static_cast<int>(lc.cycle.size());
    const int pu = static_cast<int>(std::min_element(lc.cycle.begin(), lc.cycle.end()) - lc.cycle.begin());
    const int u = lc.cycle[pu];
    const int v = std::min(lc.cycle[(pu + 1) % c], lc.cycle[(pu + c - 1) % c]);
    for (int j = 0; j < c; ++j) {
      const int x = lc.cycle[j], y = lc.cycle[(j + 1) % c];
      if (std::min(x, y) != std::min(u, v) || std::max(x, y) != std::max(u, v)) lifter.lift(x, y);
    }
    splice_class(lifter, lc, u, v, m, parts[s - 1]);
  }

  RefinedDecomposition out = lifter.result(m * k, false, 1);
  for (int i = 1; i <= k; ++i) check_class_lengths(out, i, scaled(parts[i - 1], class_lengths[i - 1]));
  check_final(out, 1, m, n, class_lengths);
  return out;
}

RefinedDecomposition uniform_refined(int n, int m, const std::vector<int>& lengths,
                                     const std::vector<LengthPartition>& parts) {
  if (n % 2 == 0) throw std::invalid_argument("n must be odd");
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  if (std::any_of(lengths.begin(), lengths.end(), [&](int c) { return c < 3 || c > n; }))
    throw std::invalid_argument("every length must lie in [3, n]");
  if (std::accumulate(lengths.begin(), lengths.end(), 0L) != static_cast<long>(n) * (n - 1) / 2)
    throw std::invalid_argument("lengths must sum to C(n,2)");
  auto seed = search_decomposition(1, n, lengths);
  if (!seed) throw std::runtime_error("no decomposition of K_n into the given lengths was found");
  return uniform_refined(m, *seed, parts);
}

CycleDecomposition corollary_small(int lambda, int m, int n, int a, int b, int c, const DetachOptions& options) {
  if (lambda < 1 || m < 1) throw std::invalid_argument("need lambda, m >= 1");
  const int mu = lambda * m;
  CycleDecomposition seed;
  switch (n) {
    case 2:
      if (a != mu / 2) throw std::invalid_argument("mu*K_2 has exactly floor(mu/2) 2-cycles");
      seed = decompose_muK2(mu);
      break;
    case 3: seed = decompose_muK3(mu, a, b); break;
    case 4: seed = decompose_muK4(mu, a, b, c); break;
    default: throw std::invalid_argument("n must be 2, 3 or 4");
  }
  return detach_full(lambda, m, n, seed, options);
}

}  // namespace cdecomp
