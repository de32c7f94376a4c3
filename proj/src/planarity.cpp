// Left-right planarity test (boolean only, no embedding).

#include <algorithm>
#include <vector>

#include "platykit/invariants.hpp"

namespace platykit {
namespace {

constexpr int kNone = -1;

struct Interval {
  int low = kNone;
  int high = kNone;
  bool empty() const { return low == kNone && high == kNone; }
};

struct ConflictPair {
  Interval left;
  Interval right;
  void swap() { std::swap(left, right); }
};

class LrTester {
 public:
  explicit LrTester(const Graph& g) : n_(g.order()) {
    adj_.resize(n_);
    for (const Edge& e : g.edges()) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    edge_id_.assign(static_cast<std::size_t>(n_) * n_, kNone);
    height_.assign(n_, kNone);
    parent_edge_.assign(n_, kNone);
    out_.resize(n_);
  }

  bool planar() {
    for (int v = 0; v < n_; ++v) {
      if (height_[v] != kNone) continue;
      height_[v] = 0;
      roots_.push_back(v);
      orient(v);
    }
    for (int v = 0; v < n_; ++v)
      std::stable_sort(out_[v].begin(), out_[v].end(),
                       [&](int a, int b) { return nesting_[a] < nesting_[b]; });
    for (int r : roots_)
      if (!test(r)) return false;
    return true;
  }

 private:
  int id(int v, int w) const { return edge_id_[static_cast<std::size_t>(v) * n_ + w]; }

  int new_edge(int v, int w) {
    const int e = static_cast<int>(src_.size());
    src_.push_back(v);
    dst_.push_back(w);
    lowpt_.push_back(0);
    lowpt2_.push_back(0);
    nesting_.push_back(0);
    ref_.push_back(kNone);
    lowpt_edge_.push_back(kNone);
    stack_bottom_.push_back(0);
    edge_id_[static_cast<std::size_t>(v) * n_ + w] = e;
    out_[v].push_back(e);
    return e;
  }

  void orient(int v) {
    const int pe = parent_edge_[v];
    for (int w : adj_[v]) {
      if (id(v, w) != kNone || id(w, v) != kNone) continue;
      const int e = new_edge(v, w);
      lowpt_[e] = lowpt2_[e] = height_[v];
      if (height_[w] == kNone) {
        parent_edge_[w] = e;
        height_[w] = height_[v] + 1;
        orient(w);
      } else {
        lowpt_[e] = height_[w];
      }
      nesting_[e] = 2 * lowpt_[e] + (lowpt2_[e] < height_[v] ? 1 : 0);
      if (pe != kNone) {
        if (lowpt_[e] < lowpt_[pe]) {
          lowpt2_[pe] = std::min(lowpt_[pe], lowpt2_[e]);
          lowpt_[pe] = lowpt_[e];
        } else if (lowpt_[e] > lowpt_[pe]) {
          lowpt2_[pe] = std::min(lowpt2_[pe], lowpt_[e]);
        } else {
          lowpt2_[pe] = std::min(lowpt2_[pe], lowpt2_[e]);
        }
      }
    }
  }

  // Writes through an absent interval end are dropped.
  void set_ref(int e, int target) {
    if (e != kNone) ref_[e] = target;
  }

  bool conflicting(const Interval& i, int b) const {
    return !i.empty() && lowpt_[i.high] > lowpt_[b];
  }

  int lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt_[p.right.low];
    if (p.right.empty()) return lowpt_[p.left.low];
    return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
  }

  bool test(int v) {
    const int pe = parent_edge_[v];
    for (std::size_t i = 0; i < out_[v].size(); ++i) {
      const int e = out_[v][i];
      const int w = dst_[e];
      stack_bottom_[e] = static_cast<int>(stack_.size());
      if (e == parent_edge_[w]) {
        if (!test(w)) return false;
      } else {
        lowpt_edge_[e] = e;
        ConflictPair p;
        p.right = Interval{e, e};
        stack_.push_back(p);
      }
      if (lowpt_[e] < height_[v]) {
        if (i == 0) {
          if (pe != kNone) lowpt_edge_[pe] = lowpt_edge_[e];
        } else if (!add_constraints(e, pe)) {
          return false;
        }
      }
    }
    if (pe != kNone) remove_back_edges(pe);
    return true;
  }

  bool add_constraints(int ei, int e) {
    ConflictPair p;
    do {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.left.empty()) q.swap();
      if (!q.left.empty()) return false;
      if (lowpt_[q.right.low] > lowpt_[e]) {
        if (p.right.empty()) p.right = q.right;
        else set_ref(p.right.low, q.right.high);
        p.right.low = q.right.low;
      } else {
        set_ref(q.right.low, lowpt_edge_[e]);
      }
    } while (static_cast<int>(stack_.size()) != stack_bottom_[ei]);

    while (!stack_.empty() &&
           (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (conflicting(q.right, ei)) q.swap();
      if (conflicting(q.right, ei)) return false;
      set_ref(p.right.low, q.right.high);
      if (q.right.low != kNone) p.right.low = q.right.low;
      if (p.left.empty()) p.left = q.left;
      else set_ref(p.left.low, q.left.high);
      p.left.low = q.left.low;
    }
    if (!(p.left.empty() && p.right.empty())) stack_.push_back(p);
    return true;
  }

  void remove_back_edges(int e) {
    const int u = src_[e];
    while (!stack_.empty() && lowest(stack_.back()) == height_[u]) stack_.pop_back();
    if (!stack_.empty()) {
      ConflictPair p = stack_.back();
      stack_.pop_back();
      while (p.left.high != kNone && dst_[p.left.high] == u) p.left.high = ref_[p.left.high];
      if (p.left.high == kNone && p.left.low != kNone) {
        set_ref(p.left.low, p.right.low);
        p.left.low = kNone;
      }
      while (p.right.high != kNone && dst_[p.right.high] == u) p.right.high = ref_[p.right.high];
      if (p.right.high == kNone && p.right.low != kNone) {
        set_ref(p.right.low, p.left.low);
        p.right.low = kNone;
      }
      stack_.push_back(p);
    }
    if (lowpt_[e] < height_[u] && !stack_.empty()) {
      const int hl = stack_.back().left.high;
      const int hr = stack_.back().right.high;
      set_ref(e, (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr])) ? hl : hr);
    }
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> edge_id_;
  std::vector<int> height_, parent_edge_, roots_;
  std::vector<std::vector<int>> out_;
  std::vector<int> src_, dst_, lowpt_, lowpt2_, nesting_, ref_, lowpt_edge_, stack_bottom_;
  std::vector<ConflictPair> stack_;
};

}  // namespace

bool is_planar(const Graph& g) {
  const int n = g.order();
  if (n < 5) return true;
  if (g.size() > 3 * n - 6) return false;
  return LrTester(g).planar();
}

}  // namespace platykit
