#include "gsp/l1.hpp"

#include <bit>
#include <thread>

#include "gsp/mincut.hpp"
#include "mask_ops.hpp"

namespace gsp {

namespace {

using detail::mask_boundary;
using detail::mask_connected;

struct Candidate {
  long long boundary = 0;
  int size = 0;
  std::uint64_t mask = 0;
  bool valid = false;
};

// Total order: smaller rho, then smaller |S|, then lexicographically
// smaller membership string ("1" at v iff v in S; '0' < '1', so at the
// first differing vertex the side NOT containing it wins).
bool better(const Candidate& a, const Candidate& b, int n) {
  if (!b.valid) return a.valid;
  if (!a.valid) return false;
  long long la = a.boundary * (static_cast<long long>(b.size) * (n - b.size));
  long long lb = b.boundary * (static_cast<long long>(a.size) * (n - a.size));
  if (la != lb) return la < lb;
  if (a.size != b.size) return a.size < b.size;
  if (a.mask == b.mask) return false;
  int v = std::countr_zero(a.mask ^ b.mask);
  return ((a.mask >> v) & 1) == 0;
}

Candidate scan_range(std::uint64_t lo, std::uint64_t hi, int n,
                     const std::vector<std::uint64_t>& adj, std::uint64_t full) {
  Candidate best;
  for (std::uint64_t m = lo; m < hi; ++m) {
    std::uint64_t s = (m << 1) | 1;  // vertex 0 always on this side
    std::uint64_t comp = full & ~s;
    if (!mask_connected(s, adj) || !mask_connected(comp, adj)) continue;
    Candidate c;
    c.boundary = mask_boundary(s, comp, adj);
    c.size = std::popcount(s);
    c.mask = s;
    c.valid = true;
    if (better(c, best, n)) best = c;
  }
  return best;
}

}  // namespace

L1Result b_exact(const Graph& g, int cap, int workers) {
  int n = g.num_vertices();
  if (n < 2) throw std::invalid_argument("b_exact: need at least 2 vertices");
  if (n > cap)
    throw CapExceeded("b_exact: n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  if (n > 64) throw CapExceeded("b_exact: n > 64 unsupported");
  if (!is_connected(g)) throw std::invalid_argument("b_exact: graph must be connected");

  auto adj = g.adjacency_masks();
  std::uint64_t full = (n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
  std::uint64_t total = (std::uint64_t(1) << (n - 1)) - 1;  // excludes S = V

  if (workers <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    workers = hw == 0 ? 1 : static_cast<int>(hw);
  }
  if (total < 4096) workers = 1;
  if (static_cast<std::uint64_t>(workers) > total) workers = static_cast<int>(total);

  Candidate best;
  if (workers == 1) {
    best = scan_range(0, total, n, adj, full);
  } else {
    std::vector<Candidate> results(workers);
    std::vector<std::thread> threads;
    std::uint64_t chunk = total / workers;
    for (int w = 0; w < workers; ++w) {
      std::uint64_t lo = chunk * w;
      std::uint64_t hi = (w == workers - 1) ? total : chunk * (w + 1);
      threads.emplace_back(
          [&, w, lo, hi] { results[w] = scan_range(lo, hi, n, adj, full); });
    }
    for (auto& t : threads) t.join();
    for (const auto& c : results)
      if (better(c, best, n)) best = c;
  }

  if (!best.valid) throw std::runtime_error("b_exact: no connected bipartition found");

  VertexSet side = VertexSet::from_mask(n, best.mask);
  L1Result r;
  r.sparsest = make_cut(g, side);
  r.b = Rational(n, 2) * r.sparsest.rho;
  r.vector = l1_fiedler_from_cut(g, side);
  r.enumerated = total;
  return r;
}

QuasiOracleResult b_quasi_oracle_witness(const Graph& g) {
  int n = g.num_vertices();
  if (n < 2) throw std::invalid_argument("b_quasi_oracle: need at least 2 vertices");
  if (n > 12) throw CapExceeded("b_quasi_oracle: n > 12 over oracle cap");
  if (!is_connected(g)) throw std::invalid_argument("b_quasi_oracle: graph must be connected");

  auto adj = g.adjacency_masks();
  std::uint64_t full = (std::uint64_t(1) << n) - 1;

  std::vector<int> delta(std::size_t(1) << n, 0);
  for (std::uint64_t s = 1; s < full; ++s)
    delta[s] = mask_boundary(s, full & ~s, adj);

  // minimize xi(S1)+xi(S2) = (d1 s2 + d2 s1)/(s1 s2); track as a fraction
  long long best_num = -1, best_den = 1;
  std::uint64_t best_s1 = 0, best_s2 = 0;
  for (std::uint64_t s1 = 1; s1 < full; ++s1) {
    std::uint64_t rest = full & ~s1;
    int sz1 = std::popcount(s1);
    for (std::uint64_t s2 = rest; s2 != 0; s2 = (s2 - 1) & rest) {
      int sz2 = std::popcount(s2);
      long long num = static_cast<long long>(delta[s1]) * sz2 +
                      static_cast<long long>(delta[s2]) * sz1;
      long long den = static_cast<long long>(sz1) * sz2;
      if (best_num < 0 || num * best_den < best_num * den) {
        best_num = num;
        best_den = den;
        best_s1 = s1;
        best_s2 = s2;
      }
    }
  }
  QuasiOracleResult r;
  r.value = Rational(best_num, 2 * best_den);
  r.witness.s1 = VertexSet::from_mask(n, best_s1);
  r.witness.s2 = VertexSet::from_mask(n, best_s2);
  return r;
}

Rational b_quasi_oracle(const Graph& g) { return b_quasi_oracle_witness(g).value; }

std::vector<Rational> l1_vector_exact(const Graph& g, const VertexSet& s) {
  int n = g.num_vertices();
  if (s.universe() != n) throw std::invalid_argument("l1_vector_exact: set universe mismatch");
  int size = s.size();
  if (size == 0 || size == n)
    throw std::invalid_argument("l1_vector_exact: S must be a nonempty proper subset");
  Rational pos(1, 2LL * size);
  Rational neg(-1, 2LL * (n - size));
  std::vector<Rational> x(n);
  for (int v = 0; v < n; ++v) x[v] = s.contains(v) ? pos : neg;
  return x;
}

SmoothingVector l1_fiedler_from_cut(const Graph& g, const VertexSet& s) {
  auto exact = l1_vector_exact(g, s);
  SmoothingVector sv;
  sv.values.reserve(exact.size());
  for (const auto& r : exact) sv.values.push_back(r.to_double());
  sv.regime = NormRegime::L1;
  sv.objective = f1(g, sv.values);
  return sv;
}

BUpperBound heuristic_b_upper(const Graph& g) {
  auto [mc, side] = min_cut(g);
  BUpperBound ub;
  ub.witness = make_cut(g, side);
  ub.bound = Rational(g.num_vertices(), 2) * ub.witness.rho;
  return ub;
}

}  // namespace gsp
