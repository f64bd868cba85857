#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cdecomp/decomposition.hpp"

namespace cdecomp {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Line-oriented decomposition format:
//
//   lambda <int>
//   m <int>
//   n <int>
//   cycle <v> <v> ... <v>
//   onefactor <v>:<v> <v>:<v> ...
//
// where <v> is `part.slot`. '#' starts a comment.

CycleDecomposition parse_decomposition(std::istream& in);
CycleDecomposition parse_decomposition(std::string_view text);

/// `comments` maps a cycle index to a comment line emitted before it.
void write_decomposition(std::ostream& out, const CycleDecomposition& d,
                         const std::vector<std::pair<std::size_t, std::string>>& comments = {});
std::string format_decomposition(const CycleDecomposition& d);

VertexId parse_vertex(std::string_view token);

/// Parses `2^3,4` into {2,2,2,4}. Throws std::invalid_argument.
std::vector<int> parse_lengths(std::string_view text);

}  // namespace cdecomp
