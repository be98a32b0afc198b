#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "ght/graph.hpp"

namespace ght {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text format: `p <n> <m>` then `m` lines `e <u> <v> [mult]`, 1-indexed.
// Blank lines and lines starting with `c` or `#` are ignored.
Graph ReadGraph(std::istream& in);
Graph ReadGraphFile(const std::string& path);
void WriteGraph(std::ostream& out, const Graph& g);
void WriteGraphFile(const std::string& path, const Graph& g);

}  // namespace ght
