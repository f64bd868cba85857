#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdecomp/multigraph.hpp"

namespace cdecomp {

/// Parameters of the host graph a decomposition is written against.
/// A decomposition of mu*K_n uses lambda = mu, m = 1.
struct DecompositionContext {
  int lambda = 1;
  int m = 1;
  int n = 2;

  friend bool operator==(const DecompositionContext&, const DecompositionContext&) = default;
};

using Cycle = std::vector<VertexId>;
using VertexPair = std::pair<VertexId, VertexId>;

/// Cycles as closed vertex sequences plus an optional 1-factor. A 2-element
/// sequence is a 2-cycle on two parallel edges.
struct CycleDecomposition {
  std::vector<Cycle> cycles;
  std::optional<std::vector<VertexPair>> one_factor;
  DecompositionContext context;

  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

enum class FailureKind {
  UncoveredEdge,
  OvercoveredEdge,
  IntraPartEdge,
  BadCycle,
  BadOneFactor,
  LengthMismatch,
  ParityMismatch,
  PropertyViolation,
};

std::string to_string(FailureKind kind);

struct Failure {
  FailureKind kind;
  std::string detail;
};

struct VerificationReport {
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }
  bool has(FailureKind kind) const;
  void add(FailureKind kind, std::string detail) { failures.push_back({kind, std::move(detail)}); }
  void merge(const VerificationReport& other);
};

/// Checks that the cycles plus the 1-factor partition the edge multiset of g
/// exactly. Never throws on bad input; every problem becomes a failure.
VerificationReport verify_decomposition(const Multigraph& g, const CycleDecomposition& d);

/// As above, and additionally requires the cycle-length multiset to equal
/// `expected_lengths`.
VerificationReport verify_decomposition(const Multigraph& g, const CycleDecomposition& d,
                                        std::vector<int> expected_lengths);

/// Sorted multiset of cycle lengths.
std::vector<int> decomposition_lengths(const CycleDecomposition& d);

/// Splits a subgraph in which every touched vertex has degree 2 into its
/// cycles. Each cycle starts at its smallest vertex and leaves along the
/// lower EdgeId. Throws InvariantViolation if some vertex has degree other
/// than 0 or 2 in the subgraph.
std::vector<Cycle> two_regular_cycles(const Multigraph& g, const std::vector<EdgeId>& edges);

}  // namespace cdecomp
