#include "cdecomp/basecases.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace cdecomp {

namespace {

// Pair order on K_4: 01 02 03 12 13 23.
constexpr std::array<std::pair<int, int>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

using Multiplicities = std::array<int, 6>;

struct BlockSpec {
  Multiplicities host;
  std::vector<std::vector<int>> cycles;
  std::vector<std::pair<int, int>> one_factor;
};

// Fixed cycle lists on each 4-vertex host; the tests certify every one.
BlockSpec spec(BlockId id) {
  switch (id) {
    case BlockId::D1: return {{2, 2, 2, 2, 2, 2}, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, {}};
    case BlockId::D2: return {{2, 2, 2, 2, 2, 2}, {{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}}, {}};
    case BlockId::D3: return {{2, 0, 2, 2, 0, 2}, {{0, 1, 2, 3}, {0, 1, 2, 3}}, {}};
    case BlockId::D4: return {{2, 2, 0, 2, 0, 0}, {{0, 1, 2}, {0, 1, 2}}, {}};
    case BlockId::D5: return {{1, 1, 1, 1, 1, 1}, {{0, 1, 2, 3}}, {{0, 2}, {1, 3}}};
    case BlockId::D6: return {{2, 2, 2, 2, 2, 0}, {{0, 1, 2}, {0, 1, 3}, {0, 2, 1, 3}}, {}};
    case BlockId::D7: return {{3, 1, 1, 1, 1, 1}, {{0, 1, 2}, {0, 1, 3}}, {{0, 1}, {2, 3}}};
    case BlockId::D8: return {{3, 1, 1, 1, 1, 3}, {{0, 1, 2, 3}, {0, 1, 3, 2}}, {{0, 1}, {2, 3}}};
    case BlockId::D9: return {{1, 3, 3, 3, 3, 1}, {{0, 2, 1, 3}, {0, 2, 1, 3}, {0, 2, 1, 3}}, {{0, 1}, {2, 3}}};
    case BlockId::D10:
      return {{1, 3, 3, 1, 3, 3}, {{0, 1, 3}, {0, 2, 3}, {0, 2, 3}, {1, 2, 3}}, {{0, 2}, {1, 3}}};
  }
  throw std::invalid_argument("unknown block");
}

VertexId k(int i) { return {i, 0}; }

Cycle to_cycle(const std::vector<int>& c) {
  Cycle out;
  for (int v : c) out.push_back(k(v));
  return out;
}

// Accumulates blocks on mu*K_4 and finishes with 2-cycles on the residue.
class K4Assembly {
 public:
  explicit K4Assembly(int mu) : mu_(mu) { residual_.fill(mu); }

  void place(BlockId id, int copies = 1) {
    const auto s = spec(id);
    for (int r = 0; r < copies; ++r) {
      for (int p = 0; p < 6; ++p) residual_[p] -= s.host[p];
      for (const auto& c : s.cycles) out_.cycles.push_back(to_cycle(c));
      if (!s.one_factor.empty()) {
        if (out_.one_factor) throw InvariantViolation("two 1-factor blocks placed on mu*K_4");
        std::vector<VertexPair> pairs;
        for (auto [u, v] : s.one_factor) pairs.emplace_back(k(u), k(v));
        out_.one_factor = std::move(pairs);
      }
    }
  }

  CycleDecomposition finish(int expected_two_cycles) {
    int two_cycles = 0;
    for (int p = 0; p < 6; ++p) {
      if (residual_[p] < 0 || residual_[p] % 2 != 0) {
        throw InvariantViolation("residual multiplicity " + std::to_string(residual_[p]) + " on pair " +
                                 std::to_string(kPairs[p].first) + std::to_string(kPairs[p].second) +
                                 " cannot be packed into 2-cycles");
      }
      for (int r = 0; r < residual_[p] / 2; ++r) {
        out_.cycles.push_back({k(kPairs[p].first), k(kPairs[p].second)});
        ++two_cycles;
      }
    }
    if (two_cycles != expected_two_cycles) {
      throw InvariantViolation("residual packing gave " + std::to_string(two_cycles) + " 2-cycles, expected " +
                               std::to_string(expected_two_cycles));
    }
    if ((mu_ % 2 == 1) != out_.one_factor.has_value()) throw InvariantViolation("1-factor parity mismatch on mu*K_4");
    out_.context = {mu_, 1, 4};
    return out_;
  }

 private:
  int mu_;
  Multiplicities residual_{};
  CycleDecomposition out_;
};

}  // namespace

std::string to_string(BlockId id) { return "D" + std::to_string(static_cast<int>(id)); }

Block building_block(BlockId id) {
  const auto s = spec(id);
  Block block{Multigraph(4), {}};
  for (int i = 0; i < 4; ++i) block.host.add_vertex(k(i));
  for (int p = 0; p < 6; ++p)
    for (int r = 0; r < s.host[p]; ++r) block.host.add_edge(kPairs[p].first, kPairs[p].second);
  for (const auto& c : s.cycles) block.decomposition.cycles.push_back(to_cycle(c));
  if (!s.one_factor.empty()) {
    std::vector<VertexPair> pairs;
    for (auto [u, v] : s.one_factor) pairs.emplace_back(k(u), k(v));
    block.decomposition.one_factor = std::move(pairs);
  }
  block.decomposition.context = {1, 1, 4};
  return block;
}

std::optional<std::string> muK3_rejection(int mu, int a, int b) {
  if (mu < 1) return "mu must be positive";
  if (a < 0 || b < 0) return "cycle counts must be non-negative";
  if (2 * a + 3 * b != 3 * mu) {
    return "2a + 3b = " + std::to_string(2 * a + 3 * b) + " != 3mu = " + std::to_string(3 * mu);
  }
  return std::nullopt;
}

std::optional<std::string> muK4_rejection(int mu, int a, int b, int c) {
  if (mu < 1) return "mu must be positive";
  if (a < 0 || b < 0 || c < 0) return "cycle counts must be non-negative";
  const int delta = mu % 2 == 0 ? 0 : 2;
  if (2 * a + 3 * b + 4 * c != 6 * mu - delta) {
    return "2a + 3b + 4c = " + std::to_string(2 * a + 3 * b + 4 * c) + " != 6mu - delta = " +
           std::to_string(6 * mu - delta);
  }
  if (mu % 2 == 0 && b == 0 && c == 1) return "(b,c) = (0,1) is excluded for even mu";
  if (mu % 2 == 1 && b == 0 && c == 0) return "(b,c) = (0,0) is excluded for odd mu";
  return std::nullopt;
}

K4Params k4_params(int mu, int a, int b, int c) {
  if (auto why = muK4_rejection(mu, a, b, c)) throw std::invalid_argument(*why);
  K4Params p{mu, a, b, c};
  p.delta = mu % 2 == 0 ? 0 : 2;
  p.b_rest = b % 4;
  p.b_quads = b / 4;
  p.c_rest = c % 3;
  p.c_triples = c / 3;
  p.eta = mu - 2 * p.b_quads - 2 * p.c_triples;
  if (p.b_rest != 0 && p.b_rest != 2) throw InvariantViolation("b is odd despite the edge-count equation");
  if (p.eta < 0) throw InvariantViolation("eta = " + std::to_string(p.eta) + " is negative");
  return p;
}

CycleDecomposition decompose_muK2(int mu) {
  if (mu < 1) throw std::invalid_argument("mu must be positive");
  CycleDecomposition d;
  for (int r = 0; r < mu / 2; ++r) d.cycles.push_back({k(0), k(1)});
  if (mu % 2 == 1) d.one_factor = std::vector<VertexPair>{{k(0), k(1)}};
  d.context = {mu, 1, 2};
  return d;
}

CycleDecomposition decompose_muK3(int mu, int a, int b) {
  if (auto why = muK3_rejection(mu, a, b)) throw std::invalid_argument(*why);
  CycleDecomposition d;
  for (int r = 0; r < b; ++r) d.cycles.push_back({k(0), k(1), k(2)});
  const int left = mu - b;
  if (left < 0 || left % 2 != 0) throw InvariantViolation("leftover multiplicity on mu*K_3 is not even");
  for (auto [u, v] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}})
    for (int r = 0; r < left / 2; ++r) d.cycles.push_back({k(u), k(v)});
  if (static_cast<int>(d.cycles.size()) - b != a) throw InvariantViolation("2-cycle count on mu*K_3 differs from a");
  d.context = {mu, 1, 3};
  return d;
}

CycleDecomposition decompose_muK4(int mu, int a, int b, int c) {
  const K4Params p = k4_params(mu, a, b, c);
  int d1 = p.b_quads;  // each copy covers 2K_4
  int d2 = p.c_triples;
  std::vector<BlockId> tail;
  const bool odd = p.eta % 2 == 1;

  if (p.b_rest == 2 && p.c_rest == 2) {
    tail = odd ? std::vector{BlockId::D5, BlockId::D6} : std::vector{BlockId::D3, BlockId::D4};
  } else if (p.b_rest == 2 && p.c_rest == 1) {
    tail = odd ? std::vector{BlockId::D5, BlockId::D4} : std::vector{BlockId::D6};
  } else if (p.b_rest == 2 && p.c_rest == 0) {
    tail = {odd ? BlockId::D7 : BlockId::D4};
  } else if (p.b_rest == 0 && p.c_rest == 2) {
    tail = {odd ? BlockId::D8 : BlockId::D3};
  } else if (p.b_rest == 0 && p.c_rest == 1) {
    if (odd) {
      tail = {BlockId::D5};
    } else if (p.c_triples >= 1) {
      // Borrow one 2K_4 from the 4-cycle triples: 4 four-cycles on 4C_4.
      --d2;
      tail = {BlockId::D3, BlockId::D3};
    } else {
      if (p.b_quads < 1) throw InvariantViolation("no 2K_4 to borrow for (b'',c'') = (0,1)");
      --d1;
      tail = {BlockId::D6, BlockId::D4};
    }
  } else {  // b_rest == 0 && c_rest == 0
    if (odd) {
      if (p.c_triples >= 1) {
        --d2;
        tail = {BlockId::D9};
      } else {
        if (p.b_quads < 1) throw InvariantViolation("no 2K_4 to borrow for (b'',c'') = (0,0)");
        --d1;
        tail = {BlockId::D10};
      }
    }
  }

  K4Assembly assembly(mu);
  assembly.place(BlockId::D1, d1);
  assembly.place(BlockId::D2, d2);
  for (BlockId id : tail) assembly.place(id);
  return assembly.finish(a);
}

}  // namespace cdecomp
