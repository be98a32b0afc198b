#include "ght/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace ght {

namespace {

[[noreturn]] void Fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

Graph ReadGraph(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == 'c' || tag[0] == '#') continue;
    if (tag == "p") {
      if (n >= 0) Fail(line_no, "duplicate header");
      if (!(ls >> n >> m) || n < 0 || m < 0) Fail(line_no, "malformed header");
    } else if (tag == "e") {
      if (n < 0) Fail(line_no, "edge before header");
      long long u, v, mult = 1;
      if (!(ls >> u >> v)) Fail(line_no, "malformed edge");
      if (!(ls >> mult)) {
        mult = 1;
        ls.clear();
      }
      if (u < 1 || v < 1 || u > n || v > n) Fail(line_no, "endpoint out of range");
      if (u == v) Fail(line_no, "self-loop");
      if (mult < 1) Fail(line_no, "multiplicity must be positive");
      edges.push_back({static_cast<NodeId>(u - 1), static_cast<NodeId>(v - 1), mult, 0});
    } else {
      Fail(line_no, "unknown record '" + tag + "'");
    }
    std::string rest;
    if (ls >> rest) Fail(line_no, "trailing tokens");
  }
  if (n < 0) throw ParseError("missing header");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph ReadGraphFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return ReadGraph(in);
}

void WriteGraph(std::ostream& out, const Graph& g) {
  out << "p " << g.num_nodes() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) {
    out << "e " << e.u + 1 << ' ' << e.v + 1;
    if (e.mult != 1) out << ' ' << e.mult;
    out << '\n';
  }
}

void WriteGraphFile(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  WriteGraph(out, g);
}

}  // namespace ght
