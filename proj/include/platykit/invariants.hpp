#pragma once

#include <limits>

#include "platykit/graph.hpp"
#include "platykit/hamiltonicity.hpp"

namespace platykit {

/// Girth of a forest.
inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

struct InvariantSummary {
  int girth = kInfiniteGirth;
  int min_degree = 0;
  int max_degree = 0;
  int vertex_connectivity = 0;
  bool planar = false;
  bool cubic = false;
};

/// Length of a shortest cycle, or kInfiniteGirth.
int girth(const Graph& g);

/// Exact vertex connectivity; K_n has connectivity n - 1 and K_1 has 0.
int vertex_connectivity(const Graph& g);

bool is_planar(const Graph& g);

/// Class-1 test for cubic graphs. Throws std::invalid_argument if g is not cubic.
bool is_three_edge_colorable(const Graph& g);

/// True iff no edge cut of fewer than c edges leaves two components that both
/// contain a cycle. Cubic graphs only, c <= 4.
bool cyclic_edge_connectivity_at_least(const Graph& g, int c);

/// Cubic, girth >= 5, cyclically 4-edge-connected, not 3-edge-colourable.
/// A false report names the first failing clause in `reason`.
PropertyReport is_snark(const Graph& g);

InvariantSummary summarize(const Graph& g);

}  // namespace platykit
