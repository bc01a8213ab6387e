#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace gsp::detail {

// Connectivity of the subgraph induced by bitmask s, given per-vertex
// neighbor masks.
inline bool mask_connected(std::uint64_t s, const std::vector<std::uint64_t>& adj) {
  if (s == 0) return false;
  std::uint64_t start = s & (~s + 1);
  std::uint64_t visited = start;
  std::uint64_t frontier = start;
  while (frontier != 0) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f != 0) {
      int v = std::countr_zero(f);
      f &= f - 1;
      next |= adj[v];
    }
    frontier = next & s & ~visited;
    visited |= frontier;
  }
  return visited == s;
}

// |delta(S)| where comp is the complement mask of s.
inline int mask_boundary(std::uint64_t s, std::uint64_t comp,
                         const std::vector<std::uint64_t>& adj) {
  int count = 0;
  std::uint64_t rest = s;
  while (rest != 0) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    count += std::popcount(adj[v] & comp);
  }
  return count;
}

}  // namespace gsp::detail
