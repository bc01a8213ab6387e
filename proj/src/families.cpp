#include "gsp/families.hpp"

#include <bit>
#include <stdexcept>

namespace gsp {

Family family_from_string(const std::string& name) {
  if (name == "path") return Family::Path;
  if (name == "cycle") return Family::Cycle;
  if (name == "star") return Family::Star;
  if (name == "complete") return Family::Complete;
  if (name == "wheel") return Family::Wheel;
  if (name == "cube") return Family::Cube;
  if (name == "broom") return Family::Broom;
  if (name == "starlike") return Family::Starlike;
  throw std::invalid_argument("unknown family: " + name);
}

std::string to_string(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Star: return "star";
    case Family::Complete: return "complete";
    case Family::Wheel: return "wheel";
    case Family::Cube: return "cube";
    case Family::Broom: return "broom";
    case Family::Starlike: return "starlike";
  }
  return "?";
}

namespace {

void validate(const FamilySpec& s) {
  switch (s.family) {
    case Family::Path:
      if (s.n < 1) throw std::invalid_argument("path: n >= 1 required");
      break;
    case Family::Cycle:
      if (s.n < 3) throw std::invalid_argument("cycle: n >= 3 required");
      break;
    case Family::Star:
      if (s.n < 2) throw std::invalid_argument("star: n >= 2 required");
      break;
    case Family::Complete:
      if (s.n < 1) throw std::invalid_argument("complete: n >= 1 required");
      break;
    case Family::Wheel:
      if (s.n < 4) throw std::invalid_argument("wheel: n >= 4 required");
      break;
    case Family::Cube:
      if (s.n != 8) throw std::invalid_argument("cube: n is fixed at 8");
      break;
    case Family::Broom:
      if (s.ell < 2) throw std::invalid_argument("broom: ell >= 2 required");
      if (s.n < s.ell + 1) throw std::invalid_argument("broom: n >= ell + 1 required");
      break;
    case Family::Starlike:
      if (s.parts.size() < 2) throw std::invalid_argument("starlike: at least 2 stars required");
      for (int p : s.parts)
        if (p < 1) throw std::invalid_argument("starlike: star sizes must be >= 1");
      break;
  }
}

}  // namespace

Graph generate(const FamilySpec& spec) {
  validate(spec);
  std::vector<std::pair<int, int>> edges;
  int n = spec.n;
  switch (spec.family) {
    case Family::Path:
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::Cycle:
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(0, n - 1);
      break;
    case Family::Star:
      for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
      break;
    case Family::Complete:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      break;
    case Family::Wheel:
      for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
      for (int i = 1; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(1, n - 1);
      break;
    case Family::Cube:
      for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
          if (std::popcount(static_cast<unsigned>(i ^ j)) == 1) edges.emplace_back(i, j);
      break;
    case Family::Broom:
      for (int i = 0; i + 1 < spec.ell; ++i) edges.emplace_back(i, i + 1);
      for (int j = spec.ell; j < n; ++j) edges.emplace_back(spec.ell - 1, j);
      break;
    case Family::Starlike: {
      int base = 1;
      for (int p : spec.parts) {
        edges.emplace_back(0, base);  // hub to star center
        for (int t = 1; t < p; ++t) edges.emplace_back(base, base + t);
        base += p;
      }
      break;
    }
  }
  return Graph(n, std::move(edges));
}

Rational closed_form_b(const FamilySpec& spec) {
  validate(spec);
  int n = spec.n;
  switch (spec.family) {
    case Family::Path:
      if (n < 2) throw std::invalid_argument("closed_form_b: path needs n >= 2");
      if (n % 2 == 0) return Rational(2, n);
      return Rational(2LL * n, static_cast<long long>(n) * n - 1);
    case Family::Cycle:
      if (n % 2 == 0) return Rational(4, n);
      return Rational(n, static_cast<long long>(n / 2) * ((n + 1) / 2));
    case Family::Star:
      return Rational(1, 2) + Rational(1, 2LL * (n - 1));
    case Family::Complete:
      if (n < 2) throw std::invalid_argument("closed_form_b: complete graph needs n >= 2");
      return Rational(n, 2);
    case Family::Wheel: {
      // Sparsest cuts keep the hub with a rim arc: |S| = i cuts n-i spokes
      // plus 2 rim edges. The minimizer of (n-i+2)/(i(n-i)) sits strictly
      // inside [2, n-1] once n >= 9, so scan the whole range exactly.
      Rational best(1);  // rho of the hub singleton
      for (int i = 2; i <= n - 1; ++i) {
        Rational rho(n - i + 2, static_cast<long long>(i) * (n - i));
        if (rho < best) best = rho;
      }
      return Rational(n, 2) * best;
    }
    case Family::Cube:
      return Rational(1);
    case Family::Broom: {
      int ell = spec.ell;
      if (2 * ell <= n)
        return Rational(n, 2LL * (ell - 1) * (n - ell + 1));
      if (n % 2 == 0) return Rational(2, n);
      return Rational(2LL * n, static_cast<long long>(n) * n - 1);
    }
    case Family::Starlike: {
      long long n_max = 0;
      for (int p : spec.parts) n_max = std::max<long long>(n_max, p);
      return Rational(n, 2 * n_max * (n - n_max));
    }
  }
  throw std::logic_error("closed_form_b: unreachable");
}

}  // namespace gsp
