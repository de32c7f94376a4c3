#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "platykit/bits.hpp"

namespace platykit {

struct Edge {
  int u = 0;
  int v = 0;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Raised by decode_graph6 on malformed input.
class Graph6Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on 1..256 vertices stored as neighbour bitsets.
/// Orders up to 64 use one word per row; larger orders switch to four.
class Graph {
 public:
  static constexpr int kMaxOrder = 256;
  static constexpr int kNarrowOrder = 64;

  using NarrowRows = std::vector<Bits<1>>;
  using WideRows = std::vector<Bits<4>>;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Throws std::invalid_argument on an out-of-range endpoint, a loop, or a
  /// repeated edge.
  static Graph from_edge_list(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }
  bool wide() const noexcept { return n_ > kNarrowOrder; }

  bool has_edge(int u, int v) const;
  int degree(int v) const;
  int min_degree() const;
  int max_degree() const;
  std::vector<int> neighbors(int v) const;
  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  /// Degrees sorted ascending.
  std::vector<int> degree_sequence() const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;
  /// Vertex v of this graph becomes vertex perm[v] of the result.
  Graph relabeled(std::span<const int> perm) const;

  template <int W>
  std::span<const Bits<W>> rows() const {
    if constexpr (W == 1) return std::get<NarrowRows>(rows_);
    else return std::get<WideRows>(rows_);
  }

  /// Calls f with the row span of whichever width this graph uses.
  template <class F>
  decltype(auto) visit(F&& f) const {
    if (wide()) return f(rows<4>());
    return f(rows<1>());
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  void check_vertex(int v) const;
  void set_edge(int u, int v, bool present);

  int n_ = 0;
  int m_ = 0;
  std::variant<NarrowRows, WideRows> rows_;
};

enum class WitnessKind { cycle, path };

struct HamWitness {
  WitnessKind kind = WitnessKind::cycle;
  std::vector<int> vertices;
};

/// Consecutive adjacency, distinctness, full coverage, and closure for cycles.
bool is_valid_witness(const Graph& g, const HamWitness& w);

/// Multigraph edge collection; loops and parallel edges allowed.
struct EdgeMultiset {
  int n = 0;
  std::vector<Edge> edges;  // u <= v, sorted

  std::vector<int> degrees() const;  // a loop adds 2
  int min_degree() const;
};

std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view s);

/// Induced subgraph on V - {v}; survivors keep their relative order.
Graph delete_vertex(const Graph& g, int v);

/// Replaces every maximal chain of degree-2 vertices by one edge between the
/// chain's anchors (vertices of degree != 2). Anchors are renumbered 0..k-1 in
/// their original order. Throws if some component is a bare cycle.
EdgeMultiset suppress_degree_two(const Graph& g);

/// Complete graph, cycle, path and empty-graph helpers used across modules.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

}  // namespace platykit
