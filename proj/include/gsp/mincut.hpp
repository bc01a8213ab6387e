#pragma once

#include <utility>

#include "gsp/graph.hpp"
#include "gsp/vertex_set.hpp"

namespace gsp {

// Global minimum edge cut of a connected graph via Stoer-Wagner
// contraction; returns the cut size and a side achieving it.
std::pair<int, VertexSet> min_cut(const Graph& g);

}  // namespace gsp
