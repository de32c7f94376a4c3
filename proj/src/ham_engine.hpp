#pragma once

// Hamiltonian cycle search over a bitset adjacency matrix.
//
// Edge-choice depth-first search with constraint propagation:
//  - a vertex with two chosen edges loses every other available edge;
//  - a vertex with exactly two available edges has both chosen;
//  - a vertex with fewer than two available edges is a dead end;
//  - chosen edges form vertex-disjoint paths, and the edge joining the two
//    ends of a non-spanning path is deleted (no premature cycles);
//  - the available graph must stay connected, and 2-connected.
// Branching extends the path endpoint with the fewest remaining options,
// trying continuations with fewest available edges first. Path questions are
// reduced to cycle questions by the callers (extra vertex or forced edge).

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "platykit/bits.hpp"
#include "platykit/graph.hpp"

namespace platykit::detail {

template <int W>
class CycleSearch {
 public:
  /// rows must be symmetric and loop-free. Returns true and fills cycle (if
  /// non-null) with a hamiltonian cycle containing every forced edge.
  bool run(std::span<const Bits<W>> rows, std::span<const Edge> forced,
           std::vector<int>* cycle = nullptr) {
    n_ = static_cast<int>(rows.size());
    if (n_ < 3) return false;
    ensure_level(0);
    Level& root = levels_[0];
    for (int v = 0; v < n_; ++v) {
      root.avail[v] = rows[v];
      root.adeg[v] = static_cast<std::int16_t>(rows[v].count());
      root.cdeg[v] = 0;
      root.cn[2 * v] = root.cn[2 * v + 1] = -1;
      root.other[v] = static_cast<std::int16_t>(v);
      root.seg[v] = 1;
    }
    root.complete = false;
    queue_.clear();
    in_queue_.assign(n_, 0);
    for (const Edge& e : forced)
      if (!choose(root, e.u, e.v)) return false;
    for (int v = 0; v < n_; ++v) push(v);
    if (!propagate(root)) return false;
    if (!root.complete && !biconnected(root)) return false;
    int found = solve(0);
    if (found < 0) return false;
    if (cycle) extract(levels_[found], *cycle);
    return true;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  void reset_nodes() noexcept { nodes_ = 0; }

 private:
  struct Level {
    std::vector<Bits<W>> avail;
    std::vector<std::int16_t> adeg, cdeg, cn, other, seg;
    bool complete = false;
  };

  void ensure_level(int l) {
    if (static_cast<int>(levels_.size()) <= l) levels_.resize(l + 1);
    Level& L = levels_[l];
    if (static_cast<int>(L.avail.size()) < n_) {
      L.avail.resize(n_);
      L.adeg.resize(n_);
      L.cdeg.resize(n_);
      L.cn.resize(2 * n_);
      L.other.resize(n_);
      L.seg.resize(n_);
    }
  }

  void copy_level(int from, int to) {
    ensure_level(to);
    const Level& a = levels_[from];
    Level& b = levels_[to];
    std::copy_n(a.avail.begin(), n_, b.avail.begin());
    std::copy_n(a.adeg.begin(), n_, b.adeg.begin());
    std::copy_n(a.cdeg.begin(), n_, b.cdeg.begin());
    std::copy_n(a.cn.begin(), 2 * n_, b.cn.begin());
    std::copy_n(a.other.begin(), n_, b.other.begin());
    std::copy_n(a.seg.begin(), n_, b.seg.begin());
    b.complete = a.complete;
  }

  void push(int v) {
    if (!in_queue_[v]) {
      in_queue_[v] = 1;
      queue_.push_back(v);
    }
  }

  static bool chosen(const Level& L, int a, int b) {
    return L.cn[2 * a] == b || L.cn[2 * a + 1] == b;
  }

  bool remove(Level& L, int a, int b) {
    if (!L.avail[a].test(b)) return true;
    if (chosen(L, a, b)) return false;
    L.avail[a].reset(b);
    L.avail[b].reset(a);
    --L.adeg[a];
    --L.adeg[b];
    push(a);
    push(b);
    return true;
  }

  bool choose(Level& L, int a, int b) {
    if (chosen(L, a, b)) return true;
    if (!L.avail[a].test(b)) return false;
    if (L.cdeg[a] == 2 || L.cdeg[b] == 2) return false;
    const int ea = L.other[a];
    const int eb = L.other[b];
    const bool closing = ea == b;
    if (closing && L.seg[a] != n_) return false;
    L.cn[2 * a + L.cdeg[a]++] = static_cast<std::int16_t>(b);
    L.cn[2 * b + L.cdeg[b]++] = static_cast<std::int16_t>(a);
    if (closing) {
      L.complete = true;
      return true;
    }
    const int size = L.seg[a] + L.seg[b];
    L.other[ea] = static_cast<std::int16_t>(eb);
    L.other[eb] = static_cast<std::int16_t>(ea);
    L.seg[ea] = L.seg[eb] = static_cast<std::int16_t>(size);
    push(a);
    push(b);
    if (size > 2 && size < n_ && L.avail[ea].test(eb)) return remove(L, ea, eb);
    return true;
  }

  bool propagate(Level& L) {
    bool ok = true;
    std::size_t head = 0;
    while (head < queue_.size()) {
      const int v = queue_[head++];
      in_queue_[v] = 0;
      if (!ok || L.complete) continue;
      if (L.cdeg[v] == 2) {
        if (L.adeg[v] > 2) {
          Bits<W> extra = L.avail[v];
          extra.reset(L.cn[2 * v]);
          extra.reset(L.cn[2 * v + 1]);
          extra.for_each([&](int w) { ok = ok && remove(L, v, w); });
        }
      } else if (L.adeg[v] < 2) {
        ok = false;
      } else if (L.adeg[v] == 2) {
        Bits<W> both = L.avail[v];
        both.for_each([&](int w) { ok = ok && (L.complete || choose(L, v, w)); });
      }
    }
    queue_.clear();
    return ok;
  }

  bool connected(const Level& L) const {
    Bits<W> seen = Bits<W>::single(0);
    Bits<W> frontier = seen;
    while (frontier.any()) {
      Bits<W> next;
      frontier.for_each([&](int v) { next |= L.avail[v]; });
      next -= seen;
      seen |= next;
      frontier = next;
    }
    return seen.count() == n_;
  }

  // Iterative lowpoint DFS; false if the available graph has a cut vertex or
  // is disconnected.
  bool biconnected(const Level& L) {
    disc_.assign(n_, -1);
    low_.assign(n_, 0);
    parent_.assign(n_, -1);
    cursor_.assign(n_, -1);
    int time = 0;
    int root_children = 0;
    stack_.clear();
    stack_.push_back(0);
    disc_[0] = low_[0] = time++;
    while (!stack_.empty()) {
      const int v = stack_.back();
      const int w = L.avail[v].next(cursor_[v]);
      if (w >= 0) {
        cursor_[v] = w;
        if (disc_[w] < 0) {
          parent_[w] = v;
          disc_[w] = low_[w] = time++;
          if (v == 0) ++root_children;
          stack_.push_back(w);
        } else if (w != parent_[v]) {
          low_[v] = std::min(low_[v], disc_[w]);
        }
      } else {
        stack_.pop_back();
        const int p = parent_[v];
        if (p >= 0) {
          low_[p] = std::min(low_[p], low_[v]);
          if (p != 0 && low_[v] >= disc_[p]) return false;
        }
      }
    }
    return time == n_ && root_children <= 1;
  }

  // Returns the level index holding the completed cycle, or -1.
  int solve(int l) {
    while (true) {
      ++nodes_;
      Level& L = levels_[l];
      if (L.complete) return l;
      if (!connected(L)) return -1;
      if (n_ > 8 && !biconnected(L)) return -1;
      const int v = pick_vertex(L);
      const int w = pick_neighbor(L, v);
      copy_level(l, l + 1);
      {
        Level& C = levels_[l + 1];
        if (choose(C, v, w) && propagate(C)) {
          int r = solve(l + 1);
          if (r >= 0) return r;
        } else {
          queue_.clear();
          std::fill(in_queue_.begin(), in_queue_.end(), 0);
        }
      }
      Level& P = levels_[l];
      if (!remove(P, v, w) || !propagate(P)) {
        queue_.clear();
        std::fill(in_queue_.begin(), in_queue_.end(), 0);
        return -1;
      }
    }
  }

  int pick_vertex(const Level& L) const {
    int best = -1;
    int best_key = 1 << 30;
    for (int v = 0; v < n_; ++v) {
      if (L.cdeg[v] == 2) continue;
      const int key = 2 * (L.adeg[v] - L.cdeg[v]) + (L.cdeg[v] == 1 ? 0 : 1);
      if (key < best_key) {
        best_key = key;
        best = v;
      }
    }
    return best;
  }

  int pick_neighbor(const Level& L, int v) const {
    int best = -1;
    int best_deg = 1 << 30;
    L.avail[v].for_each([&](int w) {
      if (chosen(L, v, w)) return;
      if (L.adeg[w] < best_deg) {
        best_deg = L.adeg[w];
        best = w;
      }
    });
    return best;
  }

  void extract(const Level& L, std::vector<int>& cycle) const {
    cycle.clear();
    int prev = -1;
    int cur = 0;
    for (int i = 0; i < n_; ++i) {
      cycle.push_back(cur);
      int nxt = L.cn[2 * cur] != prev ? L.cn[2 * cur] : L.cn[2 * cur + 1];
      prev = cur;
      cur = nxt;
    }
  }

  int n_ = 0;
  std::vector<Level> levels_;
  std::vector<int> queue_;
  std::vector<char> in_queue_;
  std::vector<int> disc_, low_, parent_, cursor_, stack_;
  std::uint64_t nodes_ = 0;
};

/// Runs f.template operator()<W>() with W the word count needed for n vertices.
template <class F>
decltype(auto) dispatch_width(int n, F&& f) {
  switch (words_for(n)) {
    case 1: return f.template operator()<1>();
    case 2: return f.template operator()<2>();
    case 3: return f.template operator()<3>();
    case 4: return f.template operator()<4>();
    default: return f.template operator()<5>();
  }
}

}  // namespace platykit::detail
