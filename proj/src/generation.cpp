#include "platykit/generation.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <thread>

#include "canon_engine.hpp"
#include "ham_engine.hpp"
#include "platykit/hamiltonicity.hpp"
#include "platykit/invariants.hpp"
#include "platykit/isomorphism.hpp"

namespace platykit {
namespace {

using Row = Bits<1>;
using Perm = std::vector<int>;

struct Node {
  std::vector<Row> rows;
  int edges = 0;
};

struct Task {
  Node node;
  std::vector<Perm> gens;
};

class UnionFind {
 public:
  UnionFind() = default;
  explicit UnionFind(int n) { reset(n); }
  void reset(int n) {
    parent_.resize(n);
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

Graph to_graph(std::span<const Row> rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    rows[u].for_each([&](int v) {
      if (v > u) edges.push_back({u, v});
    });
  return Graph::from_edge_list(n, edges);
}

// Orderly generation by canonical edge augmentation at fixed order. A graph
// H = G + e is accepted as a child of G when e lies in the automorphism orbit
// of H's canonical edge: among the edges of maximal invariant key, the one
// whose canonical endpoint positions are lexicographically greatest.
class Generator {
 public:
  explicit Generator(const GenSpec& spec) : spec_(spec), n_(spec.order) {}

  Task root() {
    Task t;
    t.node.rows.assign(n_, Row{});
    canonize(t.node.rows);
    t.gens = canon_.generators();
    return t;
  }

  // Visits the root's subtree. With split_depth >= 0, nodes at that depth are
  // handed to `defer` instead of being expanded.
  template <class Defer>
  void run(const Task& t, int split_depth, Defer&& defer) {
    visit(t.node, t.gens, split_depth, defer);
  }

  void run(const Task& t) {
    auto none = [](Task&&) {};
    visit(t.node, t.gens, -1, none);
  }

  // Accepted nodes at the split depth are visited here, without re-checking.
  void expand_task(const Task& t) {
    auto none = [](Task&&) {};
    expand(t.node, t.gens, -1, none);
  }

  std::vector<std::string>& found() { return found_; }
  GenStats& stats() { return stats_; }

 private:
  bool platypus_mode() const { return spec_.target == GenTarget::platypuses; }

  void canonize(std::span<const Row> rows) {
    ++stats_.canonical_calls;
    canon_.run(rows);
  }

  template <class Defer>
  void visit(const Node& node, const std::vector<Perm>& gens, int split_depth, Defer& defer) {
    ++stats_.nodes;
    consider(node);
    if (split_depth >= 0 && node.edges == split_depth) {
      defer(Task{node, gens});
      return;
    }
    expand(node, gens, split_depth, defer);
  }

  template <class Defer>
  void expand(const Node& node, const std::vector<Perm>& gens, int split_depth, Defer& defer) {
    const int n = n_;
    auto pair_index = [n](int a, int b) { return a * n + b; };
    UnionFind& orbits = level(node.edges).orbits;
    orbits.reset(n * n);
    for (const Perm& p : gens)
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          if (node.rows[a].test(b)) continue;
          int x = p[a], y = p[b];
          if (x > y) std::swap(x, y);
          orbits.unite(pair_index(a, b), pair_index(x, y));
        }
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (node.rows[a].test(b)) continue;
        if (orbits.find(pair_index(a, b)) != pair_index(a, b)) continue;
        try_child(node, a, b, split_depth, defer);
      }
  }

  bool within_distance(const std::vector<Row>& rows, int a, int b, int limit) const {
    Row seen = Row::single(a);
    Row frontier = seen;
    for (int d = 1; d <= limit; ++d) {
      Row next;
      frontier.for_each([&](int v) { next |= rows[v]; });
      next -= seen;
      if (next.test(b)) return true;
      if (next.none()) return false;
      seen |= next;
      frontier = next;
    }
    return false;
  }

  static int key(const std::vector<Row>& rows, int x, int y) {
    int dx = rows[x].count();
    int dy = rows[y].count();
    if (dx > dy) std::swap(dx, dy);
    return (dx * 65 + dy) * 65 + (rows[x] & rows[y]).count();
  }

  template <class Defer>
  void try_child(const Node& node, int a, int b, int split_depth, Defer& defer) {
    const int n = n_;
    const bool enforce_girth = spec_.min_girth > 3 && (!platypus_mode() || spec_.prunes.girth);
    if (enforce_girth && within_distance(node.rows, a, b, spec_.min_girth - 2)) {
      ++stats_.pruned_girth;
      return;
    }
    if (platypus_mode() && spec_.prunes.degree) {
      const int cap = n - 4;
      if (node.rows[a].count() + 1 > cap || node.rows[b].count() + 1 > cap) {
        ++stats_.pruned_degree;
        return;
      }
    }
    Node& child = level(node.edges + 1).node;
    child.rows = node.rows;
    child.edges = node.edges + 1;
    child.rows[a].set(b);
    child.rows[b].set(a);

    const int own = key(child.rows, a, b);
    int ties = 0;
    for (int x = 0; x < n; ++x) {
      bool worse = false;
      child.rows[x].for_each([&](int y) {
        if (y <= x || worse) return;
        const int k = key(child.rows, x, y);
        if (k > own) worse = true;
        else if (k == own) ++ties;
      });
      if (worse) return;
    }

    if (platypus_mode() && spec_.prunes.hamiltonian && hamiltonian_through(child.rows, a, b)) {
      ++stats_.pruned_hamiltonian;
      return;
    }

    canonize(child.rows);
    if (ties > 1 && !is_canonical_edge(child.rows, a, b, own)) return;
    visit(child, canon_.generators(), split_depth, defer);
  }

  // Child = parent + ab with a non-hamiltonian parent, so any hamiltonian
  // cycle uses ab.
  bool hamiltonian_through(const std::vector<Row>& rows, int a, int b) {
    const int n = n_;
    if (n < 3) return false;
    int min_deg = n;
    for (const Row& r : rows) min_deg = std::min(min_deg, r.count());
    if (2 * min_deg >= n) return true;
    const Edge forced[] = {{a, b}};
    return search_.run(std::span<const Row>(rows), forced);
  }

  bool is_canonical_edge(const std::vector<Row>& rows, int a, int b, int own) {
    const int n = n_;
    const auto& lab = canon_.canonical_lab();
    std::vector<int>& pos = pos_;
    pos.resize(n);
    for (int p = 0; p < n; ++p) pos[lab[p]] = p;
    std::pair<int, int> best{-1, -1};
    Edge best_edge{};
    for (int x = 0; x < n; ++x)
      rows[x].for_each([&](int y) {
        if (y <= x || key(rows, x, y) != own) return;
        const std::pair<int, int> p{std::max(pos[x], pos[y]), std::min(pos[x], pos[y])};
        if (p > best) {
          best = p;
          best_edge = {x, y};
        }
      });
    if (best_edge == Edge{a, b}) return true;
    UnionFind& orbits = edge_orbits_;
    orbits.reset(n * n);
    for (const Perm& p : canon_.generators())
      for (int x = 0; x < n; ++x)
        rows[x].for_each([&](int y) {
          if (y <= x) return;
          int s = p[x], t = p[y];
          if (s > t) std::swap(s, t);
          orbits.unite(x * n + y, s * n + t);
        });
    return orbits.find(a * n + b) == orbits.find(best_edge.u * n + best_edge.v);
  }

  // Every accepted node has been canonized just before this call.
  void consider(const Node& node) {
    if (!platypus_mode()) {
      found_.push_back(encode_graph6(to_graph(canon_.canonical_rows())));
      return;
    }
    if (!candidate(node)) return;
    ++stats_.candidates_checked;
    const Graph g = to_graph(node.rows);
    if (!spec_.prunes.girth && girth(g) < spec_.min_girth) return;
    if (!is_platypus(g).verdict) return;
    found_.push_back(encode_graph6(to_graph(canon_.canonical_rows())));
  }

  // Conditions that follow directly from every vertex-deleted subgraph being
  // traceable: minimum degree 2 and no cut vertex.
  bool candidate(const Node& node) const {
    const int n = n_;
    if (n < 3) return false;
    for (const Row& r : node.rows)
      if (r.count() < 2) return false;
    for (int cut = 0; cut < n; ++cut) {
      const int start = cut == 0 ? 1 : 0;
      Row seen = Row::single(start);
      Row frontier = seen;
      const Row removed = Row::single(cut);
      while (frontier.any()) {
        Row next;
        frontier.for_each([&](int v) { next |= node.rows[v]; });
        next -= seen;
        next -= removed;
        seen |= next;
        frontier = next;
      }
      if (seen.count() != n - 1) return false;
    }
    return true;
  }

  // Scratch storage for one augmentation-tree depth.
  struct Level {
    Node node;
    UnionFind orbits;
  };

  Level& level(int depth) {
    if (static_cast<int>(levels_.size()) <= depth) levels_.resize(depth + 1);
    return levels_[depth];
  }

  GenSpec spec_;
  int n_;
  std::deque<Level> levels_;
  std::vector<int> pos_;
  UnionFind edge_orbits_;
  detail::Canonizer<1> canon_;
  detail::CycleSearch<1> search_;
  std::vector<std::string> found_;
  GenStats stats_;
};

void merge_stats(GenStats& into, const GenStats& s) {
  into.nodes += s.nodes;
  into.canonical_calls += s.canonical_calls;
  into.pruned_hamiltonian += s.pruned_hamiltonian;
  into.pruned_girth += s.pruned_girth;
  into.pruned_degree += s.pruned_degree;
  into.candidates_checked += s.candidates_checked;
}

GenResult run_generation(const GenSpec& spec) {
  const auto t0 = std::chrono::steady_clock::now();
  GenResult out;
  Generator main(spec);
  const Task root = main.root();
  const int jobs = std::max(1, spec.jobs);
  if (jobs == 1) {
    main.run(root);
  } else {
    const int split = spec.split_depth >= 0 ? spec.split_depth : std::max(1, spec.order / 2 + 1);
    std::vector<Task> tasks;
    main.run(root, split, [&](Task&& t) { tasks.push_back(std::move(t)); });
    std::atomic<std::size_t> next{0};
    std::vector<Generator> workers(jobs, Generator(spec));
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j)
      threads.emplace_back([&, j] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) workers[j].expand_task(tasks[i]);
      });
    for (auto& th : threads) th.join();
    for (auto& w : workers) {
      auto& f = w.found();
      main.found().insert(main.found().end(), f.begin(), f.end());
      merge_stats(main.stats(), w.stats());
    }
  }
  out.canonical_list = std::move(main.found());
  std::sort(out.canonical_list.begin(), out.canonical_list.end());
  if (std::adjacent_find(out.canonical_list.begin(), out.canonical_list.end()) !=
      out.canonical_list.end())
    throw std::logic_error("generation produced a duplicate isomorphism class");
  out.count = out.canonical_list.size();
  out.stats = main.stats();
  out.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

void validate(const GenSpec& spec) {
  if (spec.order < 1 || spec.order > Graph::kNarrowOrder)
    throw std::invalid_argument("generation supports orders 1..64");
  if (spec.min_girth < 3) throw std::invalid_argument("min_girth must be at least 3");
}

}  // namespace

bool census_within_guard(int order, int min_girth) {
  if (order <= 11) return true;
  if (order <= 14) return min_girth >= 4;
  if (order <= 16) return min_girth >= 6;
  return false;
}

bool all_graphs_within_guard(int order) { return order <= 11; }

bool guard_override_from_env() {
  const char* v = std::getenv("PLATYKIT_GUARD_OVERRIDE");
  return v != nullptr && std::string(v) == "1";
}

GenResult generate(const GenSpec& spec) {
  validate(spec);
  const bool allowed = spec.target == GenTarget::platypuses
                           ? census_within_guard(spec.order, spec.min_girth)
                           : all_graphs_within_guard(spec.order);
  if (!allowed && !spec.override_guard)
    throw GuardError("order " + std::to_string(spec.order) + " with girth >= " +
                     std::to_string(spec.min_girth) +
                     " exceeds the default resource guard; set PLATYKIT_GUARD_OVERRIDE=1");
  return run_generation(spec);
}

GenResult generate_all_graphs(int n, int min_girth, int jobs, bool override_guard) {
  GenSpec spec;
  spec.order = n;
  spec.min_girth = min_girth;
  spec.target = GenTarget::all_graphs;
  spec.jobs = jobs;
  spec.override_guard = override_guard;
  return generate(spec);
}

GenResult generate_platypuses(const GenSpec& spec) {
  GenSpec s = spec;
  s.target = GenTarget::platypuses;
  return generate(s);
}

AuditReport audit_stream(std::span<const Graph> graphs, const AuditFlags& flags) {
  AuditReport rep;
  for (const Graph& g : graphs) {
    ++rep.examined;
    if (!is_platypus(g).verdict) {
      ++rep.skipped;
      rep.skip_reasons.push_back("not a platypus");
      continue;
    }
    ++rep.platypuses;
    const int n = g.order();
    std::string canon;
    auto flag = [&](std::string rule, std::string detail) {
      if (canon.empty()) canon = canonical_string(g);
      rep.violations.push_back({canon, std::move(rule), std::move(detail)});
    };
    const int delta = g.max_degree();
    if (flags.max_degree && delta > n - 4)
      flag("max_degree", "max degree " + std::to_string(delta) + " exceeds n - 4");
    if (flags.max_degree && (delta == n - 1 || delta == n - 2 || delta == n - 3))
      flag("forbidden_max_degree", "max degree " + std::to_string(delta));
    if (flags.top_degree_clique) {
      std::vector<int> top;
      for (int v = 0; v < n; ++v)
        if (g.degree(v) == n - 4) top.push_back(v);
      for (std::size_t i = 0; i < top.size(); ++i)
        for (std::size_t j = i + 1; j < top.size(); ++j)
          if (!g.has_edge(top[i], top[j]))
            flag("top_degree_clique", "vertices " + std::to_string(top[i]) + " and " +
                                          std::to_string(top[j]) + " are not adjacent");
    }
    if (flags.two_connected && vertex_connectivity(g) < 2) flag("two_connected", "cut vertex");
    if (flags.degree_two_neighbours)
      for (int v = 0; v < n; ++v) {
        int c = 0;
        for (int w : g.neighbors(v)) c += g.degree(w) == 2;
        if (c > 1) flag("degree_two_neighbours", "vertex " + std::to_string(v));
      }
    if (flags.planar_girth && is_planar(g) && girth(g) > 9)
      flag("planar_girth", "planar with girth " + std::to_string(girth(g)));
    if (flags.mnh_consistency) {
      const auto r = lemma2_audit(g);
      if (r.applicable && !r.verdict) flag("mnh_consistency", r.reason);
    }
  }
  return rep;
}

}  // namespace platykit
