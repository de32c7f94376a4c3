#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "platykit/graph.hpp"

namespace platykit {

/// Path v = p_1, ..., p_k = w whose interior vertices have degree 2 and whose
/// endpoints form a vertex cut. Oriented from the smaller endpoint.
struct Ear {
  std::vector<int> vertices;

  int k() const { return static_cast<int>(vertices.size()); }
  int front() const { return vertices.front(); }
  int back() const { return vertices.back(); }
  friend bool operator==(const Ear&, const Ear&) = default;
};

/// Outer cycle u_0..u_{n-1} (vertices 0..n-1), inner vertices v_i = n + i with
/// v_i ~ v_{i+k}, spokes u_i v_i. Requires n >= 5 and 1 <= k < n/2.
Graph generalized_petersen(int n, int k);

/// GP(n, k) with each spoke u_i v_i subdivided twice: w1_i = 2n + i sits next
/// to u_i and w2_i = 3n + i next to v_i.
Graph petersen_prism(int n, int k);

/// Two copies of g (top i, bottom n + i) with each pair joined through a
/// midpoint 2n + i.
Graph dotted_prism(const Graph& g);

/// All maximal ears sorted lexicographically. Throws if g is not 2-connected.
std::vector<Ear> list_ears(const Graph& g);

/// Replaces the interior of `ear` by a fresh path of new_k - 2 vertices.
/// Remaining vertices keep their relative order; the new interior vertices are
/// appended, numbered from the ear's front endpoint.
Graph replace_ear(const Graph& g, const Ear& ear, int new_k);

/// Replaces every 3-ear by a 4-ear.
Graph d_operation(const Graph& g);

/// For a triangle v1 v2 v3 of cubic vertices: adds v1' = n and v2' = n + 1,
/// deletes v1v3 and v2v3, and adds v1v1', v2v2', v1'v2', v1'v3, v2'v3. The
/// result has the triangle {n, n + 1, v3}.
Graph apply_triangle_T(const Graph& g, std::array<int, 3> triangle);

/// Replaces cubic vertex v with a triangle. With neighbours a < b < c, v keeps
/// the edge to a, new vertex n takes b and new vertex n + 1 takes c.
Graph expand_vertex_to_triangle(const Graph& g, int v);

/// Lexicographically smallest triangle (a < b < c), if any.
std::optional<std::array<int, 3>> find_triangle(const Graph& g);

enum class FixtureId {
  petersen,
  tietze,
  fig7_left,
  fig7_right,
  fig8a_poly21,
  fig8b_poly28,
  fig9a_poly22,
  fig9b_poly23,
};

Graph fixture(FixtureId id);
/// Throws std::invalid_argument for an unknown name.
Graph fixture(std::string_view name);
std::string_view fixture_name(FixtureId id);
std::vector<FixtureId> all_fixtures();

/// The emphasised 3-ear of fig7_left.
Ear fig7_left_marked_ear();

}  // namespace platykit
