#include "platykit/invariants.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace platykit {
namespace {

std::vector<std::vector<int>> adjacency(const Graph& g) {
  std::vector<std::vector<int>> adj(g.order());
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

bool is_cubic(const Graph& g) { return g.min_degree() == 3 && g.max_degree() == 3; }

void require_cubic(const Graph& g, const char* what) {
  if (!is_cubic(g)) throw std::invalid_argument(std::string(what) + " needs a cubic graph");
}

// Unit-capacity flow on the vertex-split network: v_in = 2v, v_out = 2v + 1.
class VertexFlow {
 public:
  explicit VertexFlow(const std::vector<std::vector<int>>& adj) : n_(static_cast<int>(adj.size())) {
    head_.assign(2 * n_, -1);
    for (int v = 0; v < n_; ++v) add_arc(2 * v, 2 * v + 1);
    for (int u = 0; u < n_; ++u)
      for (int w : adj[u]) add_arc(2 * u + 1, 2 * w);
  }

  // Number of internally vertex-disjoint s-t paths, stopping at `limit`.
  int local_connectivity(int s, int t, int limit) {
    std::fill(cap_.begin(), cap_.end(), 0);
    for (std::size_t a = 0; a < to_.size(); a += 2) cap_[a] = 1;
    const int src = 2 * s + 1;
    const int sink = 2 * t;
    int flow = 0;
    std::vector<int> via(2 * n_);
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> q;
      q.push(src);
      via[src] = -2;
      while (!q.empty() && via[sink] == -1) {
        const int x = q.front();
        q.pop();
        for (int a = head_[x]; a != -1; a = next_[a]) {
          if (cap_[a] > 0 && via[to_[a]] == -1) {
            via[to_[a]] = a;
            q.push(to_[a]);
          }
        }
      }
      if (via[sink] == -1) break;
      for (int x = sink; x != src; x = to_[via[x] ^ 1]) {
        --cap_[via[x]];
        ++cap_[via[x] ^ 1];
      }
      ++flow;
    }
    return flow;
  }

 private:
  void add_arc(int a, int b) {
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      to_.push_back(y);
      next_.push_back(head_[x]);
      head_[x] = static_cast<int>(to_.size()) - 1;
      cap_.push_back(0);
    }
  }

  int n_;
  std::vector<int> head_, next_, to_, cap_;
};

struct EdgeColoring {
  std::vector<Edge> edges;
  std::vector<int> color;
  std::vector<unsigned> used;  // per vertex bitmask of colours

  unsigned options(int e) const { return 7u & ~(used[edges[e].u] | used[edges[e].v]); }

  bool solve(int remaining) {
    if (remaining == 0) return true;
    int best = -1;
    int best_count = 4;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      if (color[e] >= 0) continue;
      const int c = std::popcount(options(e));
      if (c < best_count) {
        best = e;
        best_count = c;
        if (c <= 1) break;
      }
    }
    if (best_count == 0) return false;
    unsigned opts = options(best);
    // Colour symmetry: the very first edge takes colour 0.
    if (remaining == static_cast<int>(edges.size())) opts = 1;
    const auto [u, v] = edges[best];
    for (int c = 0; c < 3; ++c) {
      if (!(opts >> c & 1)) continue;
      color[best] = c;
      used[u] |= 1u << c;
      used[v] |= 1u << c;
      if (solve(remaining - 1)) return true;
      used[u] &= ~(1u << c);
      used[v] &= ~(1u << c);
      color[best] = -1;
    }
    return false;
  }
};

// Components of g minus the marked edges, counting those that contain a cycle.
int cyclic_components(int n, const std::vector<Edge>& edges, const std::vector<char>& removed) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> vcount(n, 1), ecount(n, 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (removed[i]) continue;
    int a = find(edges[i].u);
    int b = find(edges[i].v);
    if (a != b) {
      parent[b] = a;
      vcount[a] += vcount[b];
      ecount[a] += ecount[b];
    }
    ++ecount[a];
  }
  int cyclic = 0;
  for (int v = 0; v < n; ++v)
    if (find(v) == v && ecount[v] >= vcount[v]) ++cyclic;
  return cyclic;
}

bool has_cyclic_cut(int n, const std::vector<Edge>& edges, std::vector<char>& removed, int start,
                    int left) {
  if (left == 0) return cyclic_components(n, edges, removed) >= 2;
  for (int i = start; i < static_cast<int>(edges.size()); ++i) {
    removed[i] = 1;
    const bool hit = has_cyclic_cut(n, edges, removed, i + 1, left - 1);
    removed[i] = 0;
    if (hit) return true;
  }
  return false;
}

}  // namespace

int girth(const Graph& g) {
  const int n = g.order();
  const auto adj = adjacency(g);
  int best = kInfiniteGirth;
  std::vector<int> dist(n), parent(n);
  for (int r = 0; r < n; ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[r] = 0;
    parent[r] = -1;
    std::queue<int> q;
    q.push(r);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      if (best != kInfiniteGirth && 2 * dist[x] + 1 >= best) break;
      for (int y : adj[x]) {
        if (dist[y] == -1) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push(y);
        } else if (y != parent[x]) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  return best;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n == 1) return 0;
  if (g.size() == n * (n - 1) / 2) return n - 1;
  VertexFlow flow(adjacency(g));
  int k = g.min_degree();
  // A minimum separator misses one of the first k + 1 vertices.
  for (int i = 0; i <= k && i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j)) continue;
      k = std::min(k, flow.local_connectivity(i, j, k));
    }
  return k;
}

bool is_three_edge_colorable(const Graph& g) {
  require_cubic(g, "3-edge-colouring");
  EdgeColoring col;
  col.edges = g.edges();
  col.color.assign(col.edges.size(), -1);
  col.used.assign(g.order(), 0);
  return col.solve(static_cast<int>(col.edges.size()));
}

bool cyclic_edge_connectivity_at_least(const Graph& g, int c) {
  require_cubic(g, "cyclic edge connectivity");
  if (c > 4) throw std::invalid_argument("cyclic edge connectivity supports c <= 4");
  const auto edges = g.edges();
  std::vector<char> removed(edges.size(), 0);
  for (int k = 0; k < c; ++k)
    if (has_cyclic_cut(g.order(), edges, removed, 0, k)) return false;
  return true;
}

PropertyReport is_snark(const Graph& g) {
  PropertyReport r;
  r.predicate = "snark";
  if (!is_cubic(g)) {
    r.reason = "cubic";
    return r;
  }
  if (girth(g) < 5) {
    r.reason = "girth";
    return r;
  }
  if (!cyclic_edge_connectivity_at_least(g, 4)) {
    r.reason = "cyclic_edge_connectivity";
    return r;
  }
  if (is_three_edge_colorable(g)) {
    r.reason = "three_edge_colorable";
    return r;
  }
  r.verdict = true;
  return r;
}

InvariantSummary summarize(const Graph& g) {
  InvariantSummary s;
  s.girth = girth(g);
  s.min_degree = g.min_degree();
  s.max_degree = g.max_degree();
  s.vertex_connectivity = vertex_connectivity(g);
  s.planar = is_planar(g);
  s.cubic = is_cubic(g);
  return s;
}

}  // namespace platykit
