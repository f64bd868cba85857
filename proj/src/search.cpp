#include "cdecomp/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace cdecomp {

namespace {

class Searcher {
 public:
  Searcher(int mu, int n, const std::vector<int>& lengths) : n_(n), remaining_(n * n, 0) {
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v) remaining_[u * n + v] = mu;
    for (int c : lengths) ++wanted_[c];
  }

  bool run_with_matchings(std::vector<std::pair<int, int>>& matching, std::vector<bool>& matched) {
    int u = 0;
    while (u < n_ && matched[u]) ++u;
    if (u == n_) {
      if (solve()) {
        factor_ = matching;
        return true;
      }
      return false;
    }
    matched[u] = true;
    for (int v = u + 1; v < n_; ++v) {
      if (matched[v]) continue;
      matched[v] = true;
      take(u, v, 1);
      matching.emplace_back(u, v);
      if (run_with_matchings(matching, matched)) return true;
      matching.pop_back();
      take(u, v, -1);
      matched[v] = false;
    }
    matched[u] = false;
    return false;
  }

  bool solve() {
    int u = -1, v = -1;
    for (int a = 0; a < n_ && u < 0; ++a)
      for (int b = a + 1; b < n_; ++b)
        if (remaining_[a * n_ + b] > 0) {
          u = a;
          v = b;
          break;
        }
    if (u < 0) return std::all_of(wanted_.begin(), wanted_.end(), [](const auto& kv) { return kv.second == 0; });

    const std::string key = state_key();
    if (failed_.count(key)) return false;

    for (auto& [length, count] : wanted_) {
      if (count == 0) continue;
      --count;
      bool found = false;
      if (length == 2) {
        if (remaining_[u * n_ + v] >= 2) {
          take(u, v, 2);
          cycles_.push_back({u, v});
          found = solve();
          if (!found) {
            cycles_.pop_back();
            take(u, v, -2);
          }
        }
      } else {
        std::vector<int> path{u, v};
        std::vector<bool> on_path(n_, false);
        on_path[u] = on_path[v] = true;
        take(u, v, 1);
        found = extend(path, on_path, length);
        if (!found) take(u, v, -1);
      }
      ++count;
      if (found) {
        --count;
        return true;
      }
    }
    failed_.insert(key);
    return false;
  }

  std::vector<std::vector<int>> cycles_;
  std::vector<std::pair<int, int>> factor_;

 private:
  // Grows path u=path[0], v=path[1], ... to `length` vertices then closes it.
  bool extend(std::vector<int>& path, std::vector<bool>& on_path, int length) {
    const int last = path.back();
    const int first = path.front();
    if (static_cast<int>(path.size()) == length) {
      if (remaining_[last * n_ + first] == 0) return false;
      take(last, first, 1);
      cycles_.push_back(path);
      if (solve()) return true;
      cycles_.pop_back();
      take(last, first, -1);
      return false;
    }
    for (int w = 0; w < n_; ++w) {
      if (on_path[w] || remaining_[last * n_ + w] == 0) continue;
      on_path[w] = true;
      path.push_back(w);
      take(last, w, 1);
      if (extend(path, on_path, length)) return true;
      take(last, w, -1);
      path.pop_back();
      on_path[w] = false;
    }
    return false;
  }

  void take(int a, int b, int amount) {
    remaining_[a * n_ + b] -= amount;
    remaining_[b * n_ + a] -= amount;
  }

  std::string state_key() const {
    std::string key;
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b) key.push_back(static_cast<char>(remaining_[a * n_ + b]));
    for (const auto& [length, count] : wanted_) key.push_back(static_cast<char>(count));
    return key;
  }

  int n_;
  std::vector<int> remaining_;
  std::map<int, int> wanted_;
  std::unordered_set<std::string> failed_;
};

}  // namespace

std::optional<CycleDecomposition> search_decomposition(int mu, int n, const std::vector<int>& lengths) {
  if (mu < 1 || n < 2) throw std::invalid_argument("need mu >= 1 and n >= 2");
  const long edges = static_cast<long>(mu) * n * (n - 1) / 2;
  if (edges > kSearchEdgeLimit) {
    throw std::invalid_argument("mu*C(n,2) = " + std::to_string(edges) + " exceeds the search limit " +
                                std::to_string(kSearchEdgeLimit));
  }
  if (std::any_of(lengths.begin(), lengths.end(), [&](int c) { return c < 2 || c > n; })) return std::nullopt;
  const bool odd = (static_cast<long>(mu) * (n - 1)) % 2 == 1;
  const long factor_edges = odd ? n / 2 : 0;
  if (std::accumulate(lengths.begin(), lengths.end(), 0L) + factor_edges != edges) return std::nullopt;

  Searcher s(mu, n, lengths);
  bool found = false;
  if (odd) {
    std::vector<std::pair<int, int>> matching;
    std::vector<bool> matched(n, false);
    found = s.run_with_matchings(matching, matched);
  } else {
    found = s.solve();
  }
  if (!found) return std::nullopt;

  CycleDecomposition d;
  d.context = {mu, 1, n};
  for (const auto& c : s.cycles_) {
    Cycle cycle;
    for (int v : c) cycle.push_back({v, 0});
    d.cycles.push_back(std::move(cycle));
  }
  if (odd) {
    std::vector<VertexPair> pairs;
    for (auto [u, v] : s.factor_) pairs.emplace_back(VertexId{u, 0}, VertexId{v, 0});
    d.one_factor = std::move(pairs);
  }
  return d;
}

}  // namespace cdecomp
