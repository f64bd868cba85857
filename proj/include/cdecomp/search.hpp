#pragma once

#include <optional>
#include <vector>

#include "cdecomp/decomposition.hpp"

namespace cdecomp {

/// Largest mu*C(n,2) accepted by search_decomposition.
inline constexpr int kSearchEdgeLimit = 60;

/// Exhaustive backtracking for a decomposition of mu*K_n into cycles of the
/// given lengths (plus a 1-factor when mu(n-1) is odd). An empty result
/// certifies that none exists. Throws std::invalid_argument beyond the
/// edge limit.
std::optional<CycleDecomposition> search_decomposition(int mu, int n, const std::vector<int>& lengths);

}  // namespace cdecomp
