#include "platykit/graph.hpp"

#include <algorithm>

namespace platykit {

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxOrder)
    throw std::invalid_argument("graph order must be in 1.." + std::to_string(kMaxOrder) +
                                ", got " + std::to_string(n));
  if (n > kNarrowOrder) rows_ = WideRows(n);
  else rows_ = NarrowRows(n);
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw std::invalid_argument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} has an endpoint outside 0.." + std::to_string(n - 1));
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    if (g.has_edge(e.u, e.v))
      throw std::invalid_argument("duplicate edge {" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + "}");
    g.set_edge(e.u, e.v, true);
  }
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " not in 0.." +
                            std::to_string(n_ - 1));
}

void Graph::set_edge(int u, int v, bool present) {
  std::visit(
      [&](auto& r) {
        if (r[u].test(v) == present) return;
        if (present) {
          r[u].set(v);
          r[v].set(u);
          ++m_;
        } else {
          r[u].reset(v);
          r[v].reset(u);
          --m_;
        }
      },
      rows_);
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return visit([&](auto r) { return r[u].test(v); });
}

int Graph::degree(int v) const {
  check_vertex(v);
  return visit([&](auto r) { return r[v].count(); });
}

int Graph::min_degree() const {
  return visit([&](auto r) {
    int best = n_;
    for (const auto& row : r) best = std::min(best, row.count());
    return best;
  });
}

int Graph::max_degree() const {
  return visit([&](auto r) {
    int best = 0;
    for (const auto& row : r) best = std::max(best, row.count());
    return best;
  });
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  visit([&](auto r) { r[v].for_each([&](int w) { out.push_back(w); }); });
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  visit([&](auto r) {
    for (int u = 0; u < n_; ++u)
      r[u].for_each([&](int w) {
        if (w > u) out.push_back({u, w});
      });
  });
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

Graph Graph::with_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  Graph g = *this;
  g.set_edge(u, v, true);
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  Graph g = *this;
  g.set_edge(u, v, false);
  return g;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw std::invalid_argument("relabeling must have one entry per vertex");
  std::vector<bool> seen(n_, false);
  for (int p : perm) {
    if (p < 0 || p >= n_ || seen[p]) throw std::invalid_argument("relabeling is not a permutation");
    seen[p] = true;
  }
  Graph g(n_);
  for (const Edge& e : edges()) g.set_edge(perm[e.u], perm[e.v], true);
  return g;
}

bool is_valid_witness(const Graph& g, const HamWitness& w) {
  const int n = g.order();
  if (static_cast<int>(w.vertices.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : w.vertices) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (int i = 0; i + 1 < n; ++i)
    if (!g.has_edge(w.vertices[i], w.vertices[i + 1])) return false;
  if (w.kind == WitnessKind::cycle)
    return n >= 3 && g.has_edge(w.vertices.back(), w.vertices.front());
  return true;
}

std::vector<int> EdgeMultiset::degrees() const {
  std::vector<int> d(n, 0);
  for (const Edge& e : edges) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

int EdgeMultiset::min_degree() const {
  auto d = degrees();
  return d.empty() ? 0 : *std::min_element(d.begin(), d.end());
}

// graph6: order header, then x(0,1), x(0,2), x(1,2), x(0,3), ... packed into
// 6-bit groups, each offset by 63.
std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  g.visit([&](auto r) {
    int acc = 0;
    int nbits = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) {
        acc = (acc << 1) | (r[i].test(j) ? 1 : 0);
        if (++nbits == 6) {
          out.push_back(static_cast<char>(acc + 63));
          acc = 0;
          nbits = 0;
        }
      }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  });
  return out;
}

Graph decode_graph6(std::string_view s) {
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
  if (s.empty()) throw Graph6Error("empty graph6 string");
  for (char c : s)
    if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126)
      throw Graph6Error("graph6 character outside 63..126");
  std::size_t pos = 0;
  long n = 0;
  if (s[0] != 126) {
    n = s[0] - 63;
    pos = 1;
  } else {
    if (s.size() >= 2 && s[1] == 126) throw Graph6Error("graph6 order exceeds 256");
    if (s.size() < 4) throw Graph6Error("truncated graph6 order header");
    n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
    pos = 4;
  }
  if (n < 1) throw Graph6Error("graph6 order must be at least 1");
  if (n > Graph::kMaxOrder) throw Graph6Error("graph6 order " + std::to_string(n) + " exceeds 256");
  const long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() - pos < need) throw Graph6Error("truncated graph6 bit section");
  if (s.size() - pos > need) throw Graph6Error("excess characters after graph6 bit section");
  std::vector<Edge> edges;
  long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int byte = s[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

Graph delete_vertex(const Graph& g, int v) {
  const int n = g.order();
  if (v < 0 || v >= n) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  if (n == 1) throw std::invalid_argument("cannot delete the only vertex");
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e.u == v || e.v == v) continue;
    edges.push_back({e.u - (e.u > v), e.v - (e.v > v)});
  }
  return Graph::from_edge_list(n - 1, edges);
}

EdgeMultiset suppress_degree_two(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<int> index(n, -1);
  int anchors = 0;
  for (int v = 0; v < n; ++v)
    if (deg[v] != 2) index[v] = anchors++;

  EdgeMultiset out;
  out.n = anchors;
  std::vector<bool> chain_seen(n, false);
  for (int u = 0; u < n; ++u) {
    if (deg[u] == 2) continue;
    for (int first : g.neighbors(u)) {
      if (deg[first] != 2) {
        if (first > u) out.edges.push_back({index[u], index[first]});
        continue;
      }
      if (chain_seen[first]) continue;
      int prev = u;
      int cur = first;
      while (deg[cur] == 2) {
        chain_seen[cur] = true;
        auto nb = g.neighbors(cur);
        int nxt = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = nxt;
      }
      int a = std::min(index[u], index[cur]);
      int b = std::max(index[u], index[cur]);
      out.edges.push_back({a, b});
    }
  }
  for (int v = 0; v < n; ++v)
    if (deg[v] == 2 && !chain_seen[v])
      throw std::invalid_argument("component through vertex " + std::to_string(v) +
                                  " is a cycle of degree-2 vertices with no anchor");
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph::from_edge_list(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph::from_edge_list(n, e);
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::from_edge_list(n, e);
}

}  // namespace platykit
