#include "gsp/mincut.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace gsp {

std::pair<int, VertexSet> min_cut(const Graph& g) {
  int n = g.num_vertices();
  if (n < 2) throw std::invalid_argument("min_cut: need at least 2 vertices");
  if (!is_connected(g)) throw std::invalid_argument("min_cut: graph must be connected");

  std::vector<std::vector<int>> w(n, std::vector<int>(n, 0));
  for (auto [u, v] : g.edges()) {
    w[u][v] = 1;
    w[v][u] = 1;
  }

  // groups[i] = original vertices merged into supervertex i
  std::vector<std::vector<int>> groups(n);
  for (int v = 0; v < n; ++v) groups[v] = {v};
  std::vector<int> active(n);
  for (int v = 0; v < n; ++v) active[v] = v;

  int best = std::numeric_limits<int>::max();
  std::vector<int> best_group;

  while (active.size() > 1) {
    // maximum adjacency search over the active supervertices
    size_t m = active.size();
    std::vector<char> in_a(m, 0);
    std::vector<int> keyi(m, 0);
    int prev = -1, last = -1;
    for (size_t step = 0; step < m; ++step) {
      int pick = -1;
      for (size_t i = 0; i < m; ++i)
        if (!in_a[i] && (pick < 0 || keyi[i] > keyi[pick])) pick = static_cast<int>(i);
      in_a[pick] = 1;
      prev = last;
      last = pick;
      for (size_t i = 0; i < m; ++i)
        if (!in_a[i]) keyi[i] += w[active[pick]][active[i]];
    }

    int t = active[last];
    int cut_of_phase = 0;
    for (size_t i = 0; i < m; ++i)
      if (static_cast<int>(i) != last) cut_of_phase += w[t][active[i]];

    if (cut_of_phase < best) {
      best = cut_of_phase;
      best_group = groups[t];
    }

    // merge t into s = active[prev]
    int s = active[prev];
    for (size_t i = 0; i < m; ++i) {
      int u = active[i];
      if (u == s || u == t) continue;
      w[s][u] += w[t][u];
      w[u][s] += w[u][t];
    }
    groups[s].insert(groups[s].end(), groups[t].begin(), groups[t].end());
    active.erase(active.begin() + last);
  }

  VertexSet side(n);
  for (int v : best_group) side.add(v);
  return {best, side};
}

}  // namespace gsp
