#include "cdecomp/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cdecomp {

std::string to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::UncoveredEdge: return "UncoveredEdge";
    case FailureKind::OvercoveredEdge: return "OvercoveredEdge";
    case FailureKind::IntraPartEdge: return "IntraPartEdge";
    case FailureKind::BadCycle: return "BadCycle";
    case FailureKind::BadOneFactor: return "BadOneFactor";
    case FailureKind::LengthMismatch: return "LengthMismatch";
    case FailureKind::ParityMismatch: return "ParityMismatch";
    case FailureKind::PropertyViolation: return "PropertyViolation";
  }
  return "Unknown";
}

bool VerificationReport::has(FailureKind kind) const {
  return std::any_of(failures.begin(), failures.end(), [&](const Failure& f) { return f.kind == kind; });
}

void VerificationReport::merge(const VerificationReport& other) {
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

namespace {

std::string describe(const Cycle& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + to_string(c[i]);
  return s + ")";
}

std::pair<int, int> ordered(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

}  // namespace

VerificationReport verify_decomposition(const Multigraph& g, const CycleDecomposition& d) {
  VerificationReport report;
  std::map<std::pair<int, int>, int> usage;
  long used_edges = 0;

  for (const auto& cycle : d.cycles) {
    if (cycle.size() < 2) {
      report.add(FailureKind::BadCycle, "cycle " + describe(cycle) + " is shorter than 2");
      continue;
    }
    std::vector<int> idx;
    bool bad = false;
    for (const auto& v : cycle) {
      if (!g.contains(v)) {
        report.add(FailureKind::BadCycle, "cycle " + describe(cycle) + " names unknown vertex " + to_string(v));
        bad = true;
        break;
      }
      idx.push_back(g.index_of(v));
    }
    if (bad) continue;
    if (std::set<int>(idx.begin(), idx.end()).size() != idx.size()) {
      report.add(FailureKind::BadCycle, "cycle " + describe(cycle) + " repeats a vertex");
      continue;
    }
    if (idx.size() == 2) {
      usage[ordered(idx[0], idx[1])] += 2;
      used_edges += 2;
    } else {
      for (std::size_t i = 0; i < idx.size(); ++i) usage[ordered(idx[i], idx[(i + 1) % idx.size()])] += 1;
      used_edges += static_cast<long>(idx.size());
    }
  }

  if (d.one_factor) {
    std::vector<int> hits(g.vertex_count(), 0);
    bool bad = false;
    for (const auto& [a, b] : *d.one_factor) {
      if (!g.contains(a) || !g.contains(b) || a == b) {
        report.add(FailureKind::BadOneFactor, "1-factor pair " + to_string(a) + ":" + to_string(b) + " is invalid");
        bad = true;
        continue;
      }
      const int ia = g.index_of(a), ib = g.index_of(b);
      ++hits[ia];
      ++hits[ib];
      usage[ordered(ia, ib)] += 1;
      ++used_edges;
    }
    for (int v = 0; v < g.vertex_count() && !bad; ++v) {
      if (hits[v] != 1) {
        report.add(FailureKind::BadOneFactor, "vertex " + to_string(g.vertex(v)) + " is covered " +
                                                  std::to_string(hits[v]) + " times by the 1-factor");
      }
    }
  }

  for (const auto& [pair, count] : usage) {
    const auto [u, v] = pair;
    const int have = g.multiplicity(u, v);
    const std::string name = to_string(g.vertex(u)) + "-" + to_string(g.vertex(v));
    if (have == 0 && g.vertex(u).part == g.vertex(v).part) {
      report.add(FailureKind::IntraPartEdge, name + " joins two vertices of part " + std::to_string(g.vertex(u).part));
    } else if (count > have) {
      report.add(FailureKind::OvercoveredEdge,
                 name + " used " + std::to_string(count) + " times, multiplicity " + std::to_string(have));
    }
  }
  // Uncovered pairs are found by walking the host's edge multiset.
  std::map<std::pair<int, int>, int> host;
  for (const auto& e : g.edges()) host[ordered(e.u, e.v)] += 1;
  for (const auto& [pair, have] : host) {
    auto it = usage.find(pair);
    const int count = it == usage.end() ? 0 : it->second;
    if (count < have) {
      report.add(FailureKind::UncoveredEdge, to_string(g.vertex(pair.first)) + "-" + to_string(g.vertex(pair.second)) +
                                                 " used " + std::to_string(count) + " of " + std::to_string(have));
    }
  }

  if (used_edges != g.edge_count()) {
    report.add(FailureKind::LengthMismatch, "decomposition uses " + std::to_string(used_edges) +
                                                " edges, host has " + std::to_string(g.edge_count()));
  }

  int odd = 0;
  for (int v = 0; v < g.vertex_count(); ++v) odd += g.degree(v) % 2;
  if (odd != 0 && odd != g.vertex_count()) {
    report.add(FailureKind::ParityMismatch, "host has vertices of both parities");
  } else if (odd == 0 && d.one_factor) {
    report.add(FailureKind::ParityMismatch, "host degrees are even but a 1-factor is present");
  } else if (odd != 0 && !d.one_factor) {
    report.add(FailureKind::ParityMismatch, "host degrees are odd but no 1-factor is present");
  }
  return report;
}

VerificationReport verify_decomposition(const Multigraph& g, const CycleDecomposition& d,
                                        std::vector<int> expected_lengths) {
  auto report = verify_decomposition(g, d);
  std::sort(expected_lengths.begin(), expected_lengths.end());
  const auto actual = decomposition_lengths(d);
  if (actual != expected_lengths) {
    std::string a, e;
    for (int x : actual) a += (a.empty() ? "" : ",") + std::to_string(x);
    for (int x : expected_lengths) e += (e.empty() ? "" : ",") + std::to_string(x);
    report.add(FailureKind::LengthMismatch, "cycle lengths {" + a + "} differ from expected {" + e + "}");
  }
  return report;
}

std::vector<int> decomposition_lengths(const CycleDecomposition& d) {
  std::vector<int> out;
  out.reserve(d.cycles.size());
  for (const auto& c : d.cycles) out.push_back(static_cast<int>(c.size()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cycle> two_regular_cycles(const Multigraph& g, const std::vector<EdgeId>& edges) {
  std::map<int, std::vector<EdgeId>> at;
  for (EdgeId e : edges) {
    at[g.edge(e).u].push_back(e);
    at[g.edge(e).v].push_back(e);
  }
  for (auto& [v, inc] : at) {
    if (inc.size() != 2) {
      throw InvariantViolation("vertex " + to_string(g.vertex(v)) + " has degree " + std::to_string(inc.size()) +
                               " in a subgraph expected to be 2-regular");
    }
    std::sort(inc.begin(), inc.end());
  }
  // Visit start vertices in VertexId order.
  std::vector<int> order;
  for (const auto& [v, inc] : at) order.push_back(v);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return g.vertex(a) < g.vertex(b); });

  std::set<EdgeId> used;
  std::vector<Cycle> out;
  for (int start : order) {
    const auto& inc = at[start];
    if (used.count(inc[0])) continue;
    Cycle cycle;
    int cur = start;
    EdgeId e = inc[0];
    while (true) {
      cycle.push_back(g.vertex(cur));
      used.insert(e);
      cur = g.edge(e).other(cur);
      if (cur == start) break;
      const auto& next = at[cur];
      e = used.count(next[0]) ? next[1] : next[0];
      if (used.count(e)) throw InvariantViolation("subgraph walk revisited an edge");
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

}  // namespace cdecomp
