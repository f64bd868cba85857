#pragma once

#include <functional>
#include <vector>

#include "cdecomp/decomposition.hpp"
#include "cdecomp/multigraph.hpp"

namespace cdecomp {

/// A graph on the way from lambda*m^2*K_n to lambda*K_{n x m}. Every vertex
/// carries an amalgam weight (how many final vertices it still stands for).
/// Colors 1..k are the cycle classes; in odd mode color k+1 is the class
/// that becomes the 1-factor.
struct AmalgamState {
  int lambda = 1;
  int m = 1;
  int n = 2;
  Multigraph graph;
  std::vector<int> weight;          // by vertex index
  EdgeColoring coloring;            // k or k+1 colors
  std::vector<int> cycle_lengths;   // c_1..c_k of the seed
  bool odd_mode = false;

  int k() const { return static_cast<int>(cycle_lengths.size()); }
  int order() const { return graph.vertex_count(); }
  std::vector<EdgeId> class_edges(int color) const;
};

/// Order-n state: lambda*m^2*K_n with each seed cycle turned into an m-fold
/// cycle of its own color. `seed` must decompose (lambda*m)*K_n.
AmalgamState amalgamate_base(int lambda, int m, int n, const CycleDecomposition& seed);

/// Whether the alpha-detachment `g` (alpha split into alpha and beta) is
/// connected, decided from the components of g - {alpha, beta}: some
/// component must see both alpha and beta. Indices are vertex indices.
bool is_detachment_connected(const Multigraph& g, int alpha, int beta);

/// P1-P4 (and P4d/P4e in odd mode); one failure per violated property.
VerificationReport check_state_properties(const AmalgamState& state);

/// Splits a vertex of weight >= 2 into itself (weight - 1) and a new vertex
/// of weight 1 while keeping P1-P4. `alpha` is a vertex index.
AmalgamState split_vertex_step(const AmalgamState& state, int alpha);

/// Lowest (part, slot) vertex whose weight exceeds 1, or -1.
int next_split_vertex(const AmalgamState& state);

#ifdef NDEBUG
inline constexpr bool kCheckEachStepByDefault = false;
#else
inline constexpr bool kCheckEachStepByDefault = true;
#endif

struct DetachOptions {
  bool check_each_step = kCheckEachStepByDefault;
  /// Called with the base state (step 0) and after every split.
  std::function<void(const AmalgamState&, int step)> observer;
};

/// Cycle decomposition of lambda*K_{n x m} with lengths c_i*m, built from a
/// decomposition of (lambda*m)*K_n.
CycleDecomposition detach_full(int lambda, int m, int n, const CycleDecomposition& seed,
                               const DetachOptions& options = {});

/// Final-state extraction: the unique non-trivial component of each class as
/// a cycle, class k+1 as the 1-factor.
CycleDecomposition extract_decomposition(const AmalgamState& state);

}  // namespace cdecomp
