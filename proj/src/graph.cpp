#include "gsp/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gsp {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  adj_.assign(n, {});
  std::set<std::pair<int, int>> seen;
  edges_.reserve(edge_list.size());
  for (auto [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("Graph: vertex index out of range");
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    auto e = std::minmax(u, v);
    if (!seen.insert(e).second) throw std::invalid_argument("Graph: duplicate edge");
    edges_.emplace_back(e.first, e.second);
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  const auto& nb = adj_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
  if (n_ > 64) throw std::logic_error("adjacency_masks: n > 64");
  std::vector<std::uint64_t> m(n_, 0);
  for (auto [u, v] : edges_) {
    m[u] |= std::uint64_t(1) << v;
    m[v] |= std::uint64_t(1) << u;
  }
  return m;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  long long n = -1;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;

  while (std::getline(in, line)) {
    ++lineno;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;

    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n) || n < 0) throw ParseError(lineno, "expected vertex count");
      std::string extra;
      if (ls >> extra) throw ParseError(lineno, "trailing tokens after vertex count");
      continue;
    }
    long long u, v;
    if (!(ls >> u >> v)) throw ParseError(lineno, "expected edge \"u v\"");
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "trailing tokens after edge");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(lineno, "vertex index out of range [0," + std::to_string(n) + ")");
    if (u == v) throw ParseError(lineno, "self-loop");
    auto e = std::minmax(u, v);
    if (!seen.insert(e).second) throw ParseError(lineno, "duplicate edge");
    edges.emplace_back(static_cast<int>(e.first), static_cast<int>(e.second));
  }
  if (n < 0) throw ParseError(lineno == 0 ? 1 : lineno, "missing vertex count");
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string render_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

std::vector<std::vector<long long>> laplacian(const Graph& g) {
  int n = g.num_vertices();
  std::vector<std::vector<long long>> L(n, std::vector<long long>(n, 0));
  for (int v = 0; v < n; ++v) L[v][v] = g.degree(v);
  for (auto [u, v] : g.edges()) {
    L[u][v] = -1;
    L[v][u] = -1;
  }
  return L;
}

namespace {

// Reachable set from `start`, restricted to vertices where allowed(v).
template <typename Allowed>
int reach_count(const Graph& g, int start, Allowed allowed) {
  std::vector<char> visited(g.num_vertices(), 0);
  std::vector<int> stack{start};
  visited[start] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u)) {
      if (!visited[w] && allowed(w)) {
        visited[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count;
}

}  // namespace

bool is_connected(const Graph& g) {
  int n = g.num_vertices();
  if (n <= 1) return true;
  return reach_count(g, 0, [](int) { return true; }) == n;
}

bool induced_connected(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.num_vertices())
    throw std::invalid_argument("induced_connected: set universe mismatch");
  int size = s.size();
  if (size == 0) throw std::invalid_argument("induced_connected: empty set");
  int start = s.members().front();
  return reach_count(g, start, [&](int v) { return s.contains(v); }) == size;
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats st;
  int n = g.num_vertices();
  st.degrees.resize(n);
  for (int v = 0; v < n; ++v) st.degrees[v] = g.degree(v);
  if (n > 0) {
    st.d_min = *std::min_element(st.degrees.begin(), st.degrees.end());
    st.d_max = *std::max_element(st.degrees.begin(), st.degrees.end());
  }
  return st;
}

}  // namespace gsp
