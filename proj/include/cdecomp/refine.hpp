#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cdecomp/decomposition.hpp"
#include "cdecomp/detach.hpp"
#include "cdecomp/multigraph.hpp"

namespace cdecomp {

/// Target component sizes for one class: the class of a c-cycle lifted to m
/// copies per vertex becomes cycles of lengths q_1*c, ..., q_r*c.
struct LengthPartition {
  std::vector<int> q;

  int r() const { return static_cast<int>(q.size()); }
  int total() const;
};

/// A decomposition with its cycles taken in `order` (0-based cycle indices,
/// a permutation) and the number N of leading cycles whose class is governed.
struct OrderedCD {
  CycleDecomposition cd;
  std::vector<int> order;
  int N = 1;
};

/// Each F_i as the list of its cycles (components), plus the 1-factor.
struct RefinedDecomposition {
  DecompositionContext context;
  std::vector<std::vector<Cycle>> subgraphs;
  std::optional<std::vector<VertexPair>> one_factor;

  CycleDecomposition flatten() const;
  /// Sorted component lengths of F_i, i 1-based.
  std::vector<int> component_lengths(int i) const;
};

/// Petal splice at a shared hub. Every petal is a cycle listed from the hub
/// (petal[0] == hub); the petals pairwise meet only in the hub. The hub is
/// replaced by the distinct vertices `copies` (one per petal), consecutive
/// petals being joined q_1, q_2, ... at a time.
struct FlowerResult {
  std::vector<Cycle> cycles;
  std::vector<int> entry_copy;  // per petal, index into copies
  std::vector<int> exit_copy;
};

FlowerResult flower_detach(const std::vector<Cycle>& petals, VertexId hub, const std::vector<VertexId>& copies,
                           const std::vector<int>& q);

/// lambda*m perfect matchings of lambda*K_{m,m}; matching d sends left slot i
/// to right slot (i + d/lambda) mod m.
std::vector<std::vector<int>> one_factorization_Kmm(int lambda, int m);

/// 1 <= N <= k, each of the first N cycles in order brings a vertex not seen
/// before it, and N <= n - c_1 + 1 with c_1 the length of the first cycle.
bool check_ordering(const CycleDecomposition& cd, const std::vector<int>& order, int N);

/// Snapshot handed to the stage observer: the intermediate graph (unsplit
/// vertices as slot 0 with weight m), its coloring and the stage checks.
struct StageSnapshot {
  Multigraph graph;
  EdgeColoring coloring;
  std::vector<int> weight;
  VerificationReport report;
};

struct RefineOptions {
  bool check_each_stage = kCheckEachStepByDefault;
  std::function<void(int stage, const StageSnapshot&)> observer;
};

/// Decomposition of lambda*K_{n x m} into F_1..F_k (class i from the i-th
/// cycle in order) where F_i, i <= N, splits as parts[i-1] prescribes.
RefinedDecomposition refined_detach(int lambda, int m, int n, const OrderedCD& ocd,
                                    const std::vector<LengthPartition>& parts, const RefineOptions& options = {});

/// Decomposition of K_{n x m} (n odd) into F_1..F_{mk}; F_{jk+i} comes from
/// copy j of the i-th seed cycle and F_1..F_k follow `parts`.
RefinedDecomposition uniform_refined(int n, int m, const std::vector<int>& lengths,
                                     const std::vector<LengthPartition>& parts);

/// Same with an explicit decomposition of K_n as the seed.
RefinedDecomposition uniform_refined(int m, const CycleDecomposition& seed, const std::vector<LengthPartition>& parts);

/// a copies of 2m, b of 3m and c of 4m on lambda*K_{n x m}, n in {2,3,4},
/// through the closed-form base case of (lambda*m)*K_n.
CycleDecomposition corollary_small(int lambda, int m, int n, int a, int b, int c,
                                   const DetachOptions& options = {});

}  // namespace cdecomp
