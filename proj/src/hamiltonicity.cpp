#include "platykit/hamiltonicity.hpp"

#include <algorithm>
#include <stdexcept>

#include "ham_engine.hpp"

namespace platykit {
namespace {

template <int W>
std::vector<Bits<W>> copy_rows(const Graph& g, int n_aug) {
  std::vector<Bits<W>> rows(n_aug);
  for (const Edge& e : g.edges()) {
    rows[e.u].set(e.v);
    rows[e.v].set(e.u);
  }
  return rows;
}

// Cycle search on g extended to n_aug vertices; `edit` adjusts the rows
// before the search (extra vertex, replaced vertex, added edge).
template <class Edit>
bool run_cycle(const Graph& g, int n_aug, Edit&& edit, std::span<const Edge> forced,
               std::vector<int>* cycle, std::uint64_t* nodes) {
  return detail::dispatch_width(n_aug, [&]<int W>() {
    auto rows = copy_rows<W>(g, n_aug);
    edit(rows);
    thread_local detail::CycleSearch<W> search;
    search.reset_nodes();
    const bool ok = search.run(std::span<const Bits<W>>(rows), forced, cycle);
    if (nodes) *nodes += search.nodes();
    return ok;
  });
}

struct NoEdit {
  template <class R>
  void operator()(R&) const {}
};

// Universal extra vertex x = n: a cycle through x is a spanning path of g.
struct AddUniversal {
  int n;
  template <class R>
  void operator()(R& rows) const {
    for (int v = 0; v < n; ++v) {
      rows[v].set(n);
      rows[n].set(v);
    }
  }
};

// Vertex v rewired to every other vertex: a cycle is a spanning path of g - v.
struct ReplaceByUniversal {
  int n;
  int v;
  template <class R>
  void operator()(R& rows) const {
    for (int u = 0; u < n; ++u) {
      if (u == v) continue;
      rows[u].set(v);
      rows[v].set(u);
    }
  }
};

struct AddEdge {
  int a;
  int b;
  template <class R>
  void operator()(R& rows) const {
    rows[a].set(b);
    rows[b].set(a);
  }
};

HamWitness checked(const Graph& g, HamWitness w) {
  if (!is_valid_witness(g, w)) throw std::logic_error("search produced an invalid witness");
  return w;
}

// Cycle on n+1 vertices through x = n, opened at x into a path.
std::vector<int> open_at(const std::vector<int>& cycle, int x) {
  const auto it = std::find(cycle.begin(), cycle.end(), x);
  std::vector<int> path(it + 1, cycle.end());
  path.insert(path.end(), cycle.begin(), it);
  return path;
}

bool deleted_traceable(const Graph& g, int v, std::uint64_t* nodes) {
  const int n = g.order();
  if (n - 1 == 1) return true;
  return run_cycle(g, n, ReplaceByUniversal{n, v}, {}, nullptr, nodes);
}

bool deleted_hamiltonian(const Graph& g, int v, std::uint64_t* nodes) {
  if (g.order() - 1 < 3) return false;
  return find_hamiltonian_cycle(delete_vertex(g, v), nodes).has_value();
}

PropertyReport make_report(std::string name) {
  PropertyReport r;
  r.predicate = std::move(name);
  return r;
}

}  // namespace

std::optional<HamWitness> find_hamiltonian_cycle(const Graph& g, std::uint64_t* nodes) {
  const int n = g.order();
  if (n < 3) throw std::invalid_argument("hamiltonian cycle search needs n >= 3");
  std::vector<int> cycle;
  if (!run_cycle(g, n, NoEdit{}, {}, &cycle, nodes)) return std::nullopt;
  std::rotate(cycle.begin(), std::find(cycle.begin(), cycle.end(), 0), cycle.end());
  if (cycle[1] > cycle.back()) std::reverse(cycle.begin() + 1, cycle.end());
  return checked(g, {WitnessKind::cycle, std::move(cycle)});
}

std::optional<HamWitness> find_hamiltonian_path(const Graph& g,
                                                std::optional<std::pair<int, int>> endpoints,
                                                std::uint64_t* nodes) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("hamiltonian path search needs n >= 2");
  if (!endpoints) {
    std::vector<int> cycle;
    if (!run_cycle(g, n + 1, AddUniversal{n}, {}, &cycle, nodes)) return std::nullopt;
    return checked(g, {WitnessKind::path, open_at(cycle, n)});
  }
  const auto [a, b] = *endpoints;
  if (a < 0 || b < 0 || a >= n || b >= n || a == b)
    throw std::invalid_argument("path endpoints must be distinct vertices of the graph");
  if (n == 2) {
    if (!g.has_edge(a, b)) return std::nullopt;
    return HamWitness{WitnessKind::path, {a, b}};
  }
  // A cycle through the (possibly added) edge ab, minus that edge.
  std::vector<int> cycle;
  const Edge forced[] = {{a, b}};
  if (!run_cycle(g, n, AddEdge{a, b}, forced, &cycle, nodes)) return std::nullopt;
  const auto ia = std::find(cycle.begin(), cycle.end(), a) - cycle.begin();
  std::vector<int> path;
  const int step = cycle[(ia + 1) % n] == b ? n - 1 : 1;
  for (int k = 0; k < n; ++k) path.push_back(cycle[(ia + static_cast<long>(k) * step) % n]);
  return checked(g, {WitnessKind::path, std::move(path)});
}

std::optional<HamWitness> find_hamiltonian_path_from(const Graph& g, int start,
                                                     std::uint64_t* nodes) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("hamiltonian path search needs n >= 2");
  if (start < 0 || start >= n) throw std::invalid_argument("start vertex out of range");
  std::vector<int> cycle;
  const Edge forced[] = {{n, start}};
  if (!run_cycle(g, n + 1, AddUniversal{n}, forced, &cycle, nodes)) return std::nullopt;
  auto path = open_at(cycle, n);
  if (path.front() != start) std::reverse(path.begin(), path.end());
  return checked(g, {WitnessKind::path, std::move(path)});
}

bool is_hamiltonian(const Graph& g) {
  return g.order() >= 3 && find_hamiltonian_cycle(g).has_value();
}

bool is_traceable(const Graph& g) {
  return g.order() == 1 || find_hamiltonian_path(g).has_value();
}

bool dirac_sufficient(const Graph& g) {
  return g.order() >= 3 && 2 * g.min_degree() >= g.order();
}

PropertyReport is_platypus(const Graph& g) {
  auto r = make_report("platypus");
  const int n = g.order();
  if (n < 3) {
    r.reason = "n < 3";
    return r;
  }
  if (auto w = find_hamiltonian_cycle(g, &r.nodes_searched)) {
    r.witness = std::move(w);
    r.reason = "hamiltonian";
    return r;
  }
  for (int v = 0; v < n; ++v) {
    if (!deleted_traceable(g, v, &r.nodes_searched)) {
      r.vertex = v;
      r.reason = "vertex-deleted subgraph not traceable";
      return r;
    }
  }
  r.verdict = true;
  return r;
}

PropertyReport is_hypohamiltonian(const Graph& g) {
  auto r = make_report("hypohamiltonian");
  const int n = g.order();
  if (n < 3) {
    r.reason = "n < 3";
    return r;
  }
  if (auto w = find_hamiltonian_cycle(g, &r.nodes_searched)) {
    r.witness = std::move(w);
    r.reason = "hamiltonian";
    return r;
  }
  for (int v = 0; v < n; ++v) {
    if (!deleted_hamiltonian(g, v, &r.nodes_searched)) {
      r.vertex = v;
      r.reason = "vertex-deleted subgraph not hamiltonian";
      return r;
    }
  }
  r.verdict = true;
  return r;
}

PropertyReport is_hypotraceable(const Graph& g) {
  auto r = make_report("hypotraceable");
  const int n = g.order();
  if (n < 3) {
    r.reason = "n < 3";
    return r;
  }
  if (auto w = find_hamiltonian_path(g, std::nullopt, &r.nodes_searched)) {
    r.witness = std::move(w);
    r.reason = "traceable";
    return r;
  }
  for (int v = 0; v < n; ++v) {
    if (!deleted_traceable(g, v, &r.nodes_searched)) {
      r.vertex = v;
      r.reason = "vertex-deleted subgraph not traceable";
      return r;
    }
  }
  r.verdict = true;
  return r;
}

PropertyReport is_homogeneously_traceable(const Graph& g) {
  auto r = make_report("homogeneously_traceable");
  const int n = g.order();
  if (n < 2) {
    r.reason = "n < 2";
    return r;
  }
  for (int v = 0; v < n; ++v) {
    if (!find_hamiltonian_path_from(g, v, &r.nodes_searched)) {
      r.vertex = v;
      r.reason = "no spanning path starts at vertex";
      return r;
    }
  }
  r.verdict = true;
  return r;
}

PropertyReport is_maximally_non_hamiltonian(const Graph& g) {
  auto r = make_report("maximally_non_hamiltonian");
  const int n = g.order();
  if (n < 3) {
    r.reason = "n < 3";
    return r;
  }
  if (auto w = find_hamiltonian_cycle(g, &r.nodes_searched)) {
    r.witness = std::move(w);
    r.reason = "hamiltonian";
    return r;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      if (!find_hamiltonian_path(g, std::make_pair(u, v), &r.nodes_searched)) {
        r.pair = Edge{u, v};
        r.reason = "non-adjacent pair not joined by a spanning path";
        return r;
      }
    }
  r.verdict = true;
  return r;
}

PropertyReport lemma2_audit(const Graph& g) {
  auto r = make_report("lemma2_audit");
  auto mnh = is_maximally_non_hamiltonian(g);
  r.nodes_searched += mnh.nodes_searched;
  if (!mnh.verdict) {
    r.applicable = false;
    r.verdict = true;
    r.reason = "not applicable: not maximally non-hamiltonian";
    return r;
  }
  auto plat = is_platypus(g);
  r.nodes_searched += plat.nodes_searched;
  const bool small_max_degree = g.max_degree() < g.order() - 1;
  r.verdict = plat.verdict == small_max_degree;
  r.reason = std::string(plat.verdict ? "platypus" : "not a platypus") +
             (r.verdict ? ", consistent" : ", equivalence violated");
  return r;
}

}  // namespace platykit
