#include "gsp/rgg.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace gsp {

namespace {
// uniform double in [0,1) from the top 53 bits; bit-identical everywhere
double unit_double(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }
}  // namespace

RggInstance random_geometric(int n, double radius, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_geometric: n >= 1 required");
  if (!(radius > 0.0)) throw std::invalid_argument("random_geometric: radius must be positive");

  std::mt19937_64 rng(seed);
  RggInstance inst;
  inst.seed_used = seed;
  inst.points.reserve(n);
  for (int i = 0; i < n; ++i) {
    double x = unit_double(rng);
    double y = unit_double(rng);
    inst.points.emplace_back(x, y);
  }
  std::vector<std::pair<int, int>> edges;
  double r2 = radius * radius;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double dx = inst.points[i].first - inst.points[j].first;
      double dy = inst.points[i].second - inst.points[j].second;
      if (dx * dx + dy * dy < r2) edges.emplace_back(i, j);
    }
  }
  inst.graph = Graph(n, std::move(edges));
  return inst;
}

RggInstance random_geometric_connected(int n, double radius, std::uint64_t seed,
                                       int max_retries) {
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    RggInstance inst = random_geometric(n, radius, seed + attempt);
    if (is_connected(inst.graph)) return inst;
  }
  throw std::runtime_error("random_geometric_connected: no connected instance within " +
                           std::to_string(max_retries) + " retries from seed " +
                           std::to_string(seed));
}

}  // namespace gsp
