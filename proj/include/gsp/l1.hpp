#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gsp/cut.hpp"
#include "gsp/graph.hpp"
#include "gsp/rational.hpp"
#include "gsp/smoothing.hpp"

namespace gsp {

// Exact computation refused because the graph is over the subset
// enumeration cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultEnumerationCap = 26;

struct L1Result {
  Rational b;
  Cut sparsest;            // canonical witness, contains vertex 0
  SmoothingVector vector;  // two-valued optimal vector built from the witness
  std::uint64_t enumerated = 0;  // candidate subsets inspected
};

// Exact b(G) = (n/2) min rho(S) by exhaustive enumeration of subsets
// containing vertex 0 whose both sides induce connected subgraphs.
// Canonical witness: smallest rho, then smallest |S|, then
// lexicographically smallest membership string. `workers` = 0 picks a
// thread count automatically; the result is identical for any value.
L1Result b_exact(const Graph& g, int cap = kDefaultEnumerationCap, int workers = 0);

// Disjoint nonempty vertex pair; need not cover V.
struct QuasiBipartition {
  VertexSet s1;
  VertexSet s2;
  bool valid() const {
    if (s1.universe() != s2.universe() || s1.empty() || s2.empty()) return false;
    for (int v : s1.members())
      if (s2.contains(v)) return false;
    return true;
  }
};

struct QuasiOracleResult {
  Rational value;
  QuasiBipartition witness;
};

// Brute-force minimum of (1/2)(xi(S1) + xi(S2)) over all disjoint nonempty
// pairs, with no connectivity or partition requirement. Independent check
// of b_exact; capped at n <= 12.
Rational b_quasi_oracle(const Graph& g);
QuasiOracleResult b_quasi_oracle_witness(const Graph& g);

// Two-valued vector for a cut: 1/(2|S|) on S, -1/(2|V\S|) elsewhere.
SmoothingVector l1_fiedler_from_cut(const Graph& g, const VertexSet& s);
std::vector<Rational> l1_vector_exact(const Graph& g, const VertexSet& s);

// (n/2) rho at the global min-cut side; cheap upper bound on b(G).
struct BUpperBound {
  Rational bound;
  Cut witness;
};
BUpperBound heuristic_b_upper(const Graph& g);

}  // namespace gsp
