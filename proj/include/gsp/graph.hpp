#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gsp/vertex_set.hpp"

namespace gsp {

// Raised by parse_edge_list with the offending 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Simple undirected graph, vertices 0..n-1. Immutable after construction.
// Edges are stored as (min(u,v), max(u,v)) and kept sorted, so iteration
// order is deterministic.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edge_list);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  bool has_edge(int u, int v) const;

  // Per-vertex neighbor bitmasks; only available when n <= 64.
  std::vector<std::uint64_t> adjacency_masks() const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

// Edge-list text format: '#' comment lines, then n, then one "u v" per line.
Graph parse_edge_list(const std::string& text);
std::string render_edge_list(const Graph& g);

// L = D - A as an integer matrix; rows sum to zero.
std::vector<std::vector<long long>> laplacian(const Graph& g);

bool is_connected(const Graph& g);
// Connectivity of the subgraph induced by a nonempty S.
bool induced_connected(const Graph& g, const VertexSet& s);

struct DegreeStats {
  int d_min = 0;
  int d_max = 0;
  std::vector<int> degrees;
};
DegreeStats degree_stats(const Graph& g);

}  // namespace gsp
