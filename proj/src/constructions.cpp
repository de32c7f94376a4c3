#include "platykit/constructions.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "platykit/invariants.hpp"

namespace platykit {
namespace {

void check_petersen_params(int n, int k) {
  if (n < 5 || k < 1 || 2 * k >= n)
    throw std::invalid_argument("parameters need n >= 5 and 1 <= k < n/2");
}

Graph build(int n, std::vector<Edge>& edges) {
  for (Edge& e : edges)
    if (e.u > e.v) std::swap(e.u, e.v);
  std::sort(edges.begin(), edges.end());
  return Graph::from_edge_list(n, edges);
}

int components_without(const Graph& g, int a, int b) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  seen[a] = seen[b] = 1;
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++comps;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int y : g.neighbors(x))
        if (!seen[y]) {
          seen[y] = 1;
          q.push(y);
        }
    }
  }
  return comps;
}

// Replaces the interiors of pairwise disjoint ears, each by new_k - 2 vertices.
Graph rebuild_ears(const Graph& g, const std::vector<Ear>& ears, int new_k) {
  const int n = g.order();
  std::vector<char> interior(n, 0);
  for (const Ear& e : ears)
    for (int i = 1; i + 1 < e.k(); ++i) interior[e.vertices[i]] = 1;
  std::vector<int> index(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (!interior[v]) index[v] = next++;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (!interior[e.u] && !interior[e.v]) edges.push_back({index[e.u], index[e.v]});
  for (const Ear& e : ears) {
    int prev = index[e.front()];
    for (int i = 0; i < new_k - 2; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, index[e.back()]});
  }
  return build(next, edges);
}

const std::vector<std::string_view>& names() {
  static const std::vector<std::string_view> kNames = {
      "petersen",     "tietze",       "fig7_left",    "fig7_right",
      "fig8a_poly21", "fig8b_poly28", "fig9a_poly22", "fig9b_poly23"};
  return kNames;
}

}  // namespace

namespace detail {
std::vector<std::pair<std::string, Graph>> load_fixtures();
}

Graph generalized_petersen(int n, int k) {
  check_petersen_params(n, k);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.push_back({i, (i + 1) % n});
    edges.push_back({i, n + i});
    edges.push_back({n + i, n + (i + k) % n});
  }
  return build(2 * n, edges);
}

Graph petersen_prism(int n, int k) {
  check_petersen_params(n, k);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.push_back({i, (i + 1) % n});
    edges.push_back({i, 2 * n + i});
    edges.push_back({2 * n + i, 3 * n + i});
    edges.push_back({3 * n + i, n + i});
    edges.push_back({n + i, n + (i + k) % n});
  }
  return build(4 * n, edges);
}

Graph dotted_prism(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    edges.push_back({e.u, e.v});
    edges.push_back({n + e.u, n + e.v});
  }
  for (int i = 0; i < n; ++i) {
    edges.push_back({i, 2 * n + i});
    edges.push_back({2 * n + i, n + i});
  }
  return build(3 * n, edges);
}

std::vector<Ear> list_ears(const Graph& g) {
  const int n = g.order();
  if (n < 3 || vertex_connectivity(g) < 2)
    throw std::invalid_argument("ears are defined for 2-connected graphs");
  std::vector<Ear> ears;
  for (int a = 0; a < n; ++a) {
    if (g.degree(a) == 2) continue;
    for (int x : g.neighbors(a)) {
      if (g.degree(x) != 2) continue;
      Ear ear{{a}};
      int prev = a;
      int cur = x;
      while (g.degree(cur) == 2) {
        ear.vertices.push_back(cur);
        const auto nb = g.neighbors(cur);
        const int step = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = step;
      }
      ear.vertices.push_back(cur);
      if (cur <= a) continue;  // found from the other end, or a loop
      if (components_without(g, a, cur) < 2) continue;
      ears.push_back(std::move(ear));
    }
  }
  std::sort(ears.begin(), ears.end(),
            [](const Ear& p, const Ear& q) { return p.vertices < q.vertices; });
  return ears;
}

Graph replace_ear(const Graph& g, const Ear& ear, int new_k) {
  if (new_k < 3) throw std::invalid_argument("an ear has at least 3 vertices");
  Ear oriented = ear;
  if (!oriented.vertices.empty() && oriented.front() > oriented.back())
    std::reverse(oriented.vertices.begin(), oriented.vertices.end());
  const auto ears = list_ears(g);
  if (std::find(ears.begin(), ears.end(), oriented) == ears.end())
    throw std::invalid_argument("not an ear of the graph");
  return rebuild_ears(g, {ear}, new_k);
}

Graph d_operation(const Graph& g) {
  std::vector<Ear> threes;
  for (Ear& e : list_ears(g))
    if (e.k() == 3) threes.push_back(std::move(e));
  return rebuild_ears(g, threes, 4);
}

Graph apply_triangle_T(const Graph& g, std::array<int, 3> triangle) {
  const auto [v1, v2, v3] = triangle;
  const int n = g.order();
  for (int v : triangle)
    if (v < 0 || v >= n) throw std::invalid_argument("triangle vertex out of range");
  if (v1 == v2 || v2 == v3 || v1 == v3 || !g.has_edge(v1, v2) || !g.has_edge(v2, v3) ||
      !g.has_edge(v1, v3))
    throw std::invalid_argument("vertices do not form a triangle");
  for (int v : triangle)
    if (g.degree(v) != 3) throw std::invalid_argument("triangle vertex is not cubic");
  const int p1 = n;
  const int p2 = n + 1;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const Edge a{std::min(v1, v3), std::max(v1, v3)};
    const Edge b{std::min(v2, v3), std::max(v2, v3)};
    if (e == a || e == b) continue;
    edges.push_back(e);
  }
  edges.insert(edges.end(), {{v1, p1}, {v2, p2}, {p1, p2}, {p1, v3}, {p2, v3}});
  return build(n + 2, edges);
}

Graph expand_vertex_to_triangle(const Graph& g, int v) {
  const int n = g.order();
  if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
  if (g.degree(v) != 3) throw std::invalid_argument("vertex is not cubic");
  const auto nb = g.neighbors(v);
  const int b = nb[1];
  const int c = nb[2];
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if ((e.u == v || e.v == v) && (e.u == b || e.v == b || e.u == c || e.v == c)) continue;
    edges.push_back(e);
  }
  edges.insert(edges.end(), {{b, n}, {c, n + 1}, {v, n}, {v, n + 1}, {n, n + 1}});
  return build(n + 2, edges);
}

std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b : g.neighbors(a)) {
      if (b <= a) continue;
      for (int c : g.neighbors(b))
        if (c > b && g.has_edge(a, c)) return std::array<int, 3>{a, b, c};
    }
  return std::nullopt;
}

std::string_view fixture_name(FixtureId id) { return names().at(static_cast<int>(id)); }

std::vector<FixtureId> all_fixtures() {
  std::vector<FixtureId> out;
  for (std::size_t i = 0; i < names().size(); ++i) out.push_back(static_cast<FixtureId>(i));
  return out;
}

Graph fixture(std::string_view name) {
  static const auto table = detail::load_fixtures();
  for (const auto& [key, g] : table)
    if (key == name) return g;
  throw std::invalid_argument("unknown fixture: " + std::string(name));
}

Graph fixture(FixtureId id) { return fixture(fixture_name(id)); }

Ear fig7_left_marked_ear() {
  return Ear{{8, 11, 9}};
}

}  // namespace platykit
