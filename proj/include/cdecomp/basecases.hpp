#pragma once

#include <optional>
#include <string>
#include <utility>

#include "cdecomp/decomposition.hpp"
#include "cdecomp/multigraph.hpp"

namespace cdecomp {

/// The ten auxiliary decompositions on four labeled vertices used to
/// assemble cycle decompositions of mu*K_4.
enum class BlockId { D1 = 1, D2, D3, D4, D5, D6, D7, D8, D9, D10 };

std::string to_string(BlockId id);

struct Block {
  Multigraph host;  // on VertexId{0..3, 0}
  CycleDecomposition decomposition;
};

/// D1  3^4 of 2K4            D6  3^2 4^1 of 2(K4-P1)
/// D2  4^3 of 2K4            D7  3^2 of K4+2P1, with 1-factor
/// D3  4^2 of 2C4            D8  4^2 of K4+2I4, with 1-factor
/// D4  3^2 of 2C3            D9  4^3 of 3K4-2I4, with 1-factor
/// D5  4^1 of K4, 1-factor   D10 3^4 of 3K4-2P2, with 1-factor
Block building_block(BlockId id);

/// Split of (mu, a, b, c) into the quantities the mu*K_4 assembly
/// dispatches on: b = 4*b_quads + b_rest, c = 3*c_triples + c_rest,
/// eta = mu - 2*b_quads - 2*c_triples.
struct K4Params {
  int mu = 0, a = 0, b = 0, c = 0;
  int delta = 0;
  int b_quads = 0, b_rest = 0;
  int c_triples = 0, c_rest = 0;
  int eta = 0;
};

/// Empty when the parameters are admissible; otherwise the failed clause.
std::optional<std::string> muK3_rejection(int mu, int a, int b);
std::optional<std::string> muK4_rejection(int mu, int a, int b, int c);

/// Throws std::invalid_argument naming the failed clause.
K4Params k4_params(int mu, int a, int b, int c);

/// floor(mu/2) 2-cycles, plus the single edge as a 1-factor when mu is odd.
CycleDecomposition decompose_muK2(int mu);

/// a 2-cycles and b triangles of mu*K_3. Requires 2a + 3b = 3mu.
CycleDecomposition decompose_muK3(int mu, int a, int b);

/// a 2-cycles, b 3-cycles and c 4-cycles of mu*K_4 (plus a 1-factor when mu
/// is odd).
CycleDecomposition decompose_muK4(int mu, int a, int b, int c);

}  // namespace cdecomp
