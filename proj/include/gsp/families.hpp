#pragma once

#include <string>
#include <vector>

#include "gsp/graph.hpp"
#include "gsp/rational.hpp"

namespace gsp {

enum class Family { Path, Cycle, Star, Complete, Wheel, Cube, Broom, Starlike };

Family family_from_string(const std::string& name);
std::string to_string(Family f);

// Named graph family with its parameters.
//   path/cycle/star/complete: n
//   wheel: n total vertices (center + cycle of n-1), n >= 4
//   cube: the 3-dimensional hypercube, n fixed at 8
//   broom: path of ell vertices plus n-ell extra leaves on its last vertex
//   starlike: stars of sizes parts[0..k-1] with centers joined to a hub
struct FamilySpec {
  Family family = Family::Path;
  int n = 0;
  int ell = 0;              // broom only
  std::vector<int> parts;   // starlike only

  static FamilySpec path(int n) { return {Family::Path, n, 0, {}}; }
  static FamilySpec cycle(int n) { return {Family::Cycle, n, 0, {}}; }
  static FamilySpec star(int n) { return {Family::Star, n, 0, {}}; }
  static FamilySpec complete(int n) { return {Family::Complete, n, 0, {}}; }
  static FamilySpec wheel(int n) { return {Family::Wheel, n, 0, {}}; }
  static FamilySpec cube() { return {Family::Cube, 8, 0, {}}; }
  static FamilySpec broom(int ell, int n) { return {Family::Broom, n, ell, {}}; }
  static FamilySpec starlike(std::vector<int> parts) {
    FamilySpec s{Family::Starlike, 0, 0, std::move(parts)};
    for (int p : s.parts) s.n += p;
    s.n += 1;
    return s;
  }
};

// Labeling conventions: paths/cycles consecutive; star and wheel center at
// vertex 0; broom path vertices 0..ell-1 then leaves; starlike hub at 0,
// stars in argument order with each star's center first; cube vertices are
// 3-bit labels, adjacent iff they differ in one bit.
Graph generate(const FamilySpec& spec);

// Exact b for every family above, in closed form.
Rational closed_form_b(const FamilySpec& spec);

}  // namespace gsp
