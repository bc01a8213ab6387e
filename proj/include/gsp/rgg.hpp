#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gsp/graph.hpp"

namespace gsp {

// Random geometric graph: n seeded uniform points in the unit square,
// edge iff Euclidean distance < radius. Point coordinates are derived from
// the raw generator words, so the same seed gives the same graph on every
// platform.
struct RggInstance {
  Graph graph;
  std::vector<std::pair<double, double>> points;
  std::uint64_t seed_used = 0;
};

RggInstance random_geometric(int n, double radius, std::uint64_t seed);

// Retries with seed+1, seed+2, ... until the graph comes out connected.
// Throws after `max_retries` failures.
RggInstance random_geometric_connected(int n, double radius, std::uint64_t seed,
                                       int max_retries = 64);

}  // namespace gsp
