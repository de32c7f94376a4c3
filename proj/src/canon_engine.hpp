#pragma once

// Canonical labelling by individualisation-refinement.
//
// Every node of the search tree carries an equitable ordered partition and a
// hash of the refinement that produced it (its trace). Leaves are discrete
// partitions; the canonical leaf is the least one under (trace sequence,
// relabelled adjacency rows). Automorphisms are recognised as leaves with the
// same relabelled graph as the first leaf or the current best leaf. Subtrees
// are skipped when their trace is already worse than the best and differs
// from the first path, when their root is in the orbit of an explored sibling
// under automorphisms fixing the path so far, and, after an automorphism
// equivalent to the first leaf is found, for the rest of the diverging
// subtree. The group order is the product over the first path of the orbit
// length of its individualised vertex under the stabiliser of its prefix.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "platykit/bits.hpp"

namespace platykit::detail {

inline std::uint64_t mix_hash(std::uint64_t h, std::uint64_t x) noexcept {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h *= 0xff51afd7ed558ccdULL;
  return h ^ (h >> 29);
}

template <int W>
class Canonizer {
 public:
  void run(std::span<const Bits<W>> rows) {
    rows_ = rows;
    n_ = static_cast<int>(rows.size());
    const std::size_t depth = static_cast<std::size_t>(n_) + 1;
    lab_.resize(depth * n_);
    len_.resize(depth * n_);
    trace_.assign(depth, 0);
    path_.assign(depth, -1);
    cell_.resize(depth * n_);
    explored_.resize(depth * n_);
    orbit_.resize(depth * n_);
    orbit_sizes_.clear();
    gens_.clear();
    first_.valid = false;
    best_.valid = false;
    first_path_.clear();

    int* lab = level_lab(0);
    int* len = level_len(0);
    std::iota(lab, lab + n_, 0);
    len[0] = n_;
    queue_.assign(1, 0);
    trace_[0] = refine(lab, len);
    search(0, true, -1);
  }

  /// Position -> original vertex for the canonical leaf.
  const std::vector<int>& canonical_lab() const { return best_.lab; }
  /// Rows of the canonically relabelled graph.
  const std::vector<Bits<W>>& canonical_rows() const { return best_.rows; }
  /// Automorphisms found (vertex -> image), generating the full group.
  const std::vector<std::vector<int>>& generators() const { return gens_; }
  /// Orbit lengths along the first path; their product is |Aut|.
  const std::vector<int>& orbit_sizes() const { return orbit_sizes_; }

 private:
  struct Leaf {
    bool valid = false;
    std::vector<int> lab;
    std::vector<Bits<W>> rows;
    std::vector<std::uint64_t> trace;
  };

  int* level_lab(int d) { return lab_.data() + static_cast<std::size_t>(d) * n_; }
  int* level_len(int d) { return len_.data() + static_cast<std::size_t>(d) * n_; }

  // Refines (lab, len) to the coarsest equitable partition below it, using the
  // cell starts in queue_ as initial splitters. Returns the trace hash.
  std::uint64_t refine(int* lab, int* len) {
    std::uint64_t h = 0x51afd7ed558ccdULL;
    in_queue_.assign(n_, 0);
    for (int s : queue_) in_queue_[s] = 1;
    count_.resize(n_);
    sorted_count_.resize(n_);
    scratch_.resize(n_);
    std::size_t head = 0;
    int cells = 0;
    for (int s = 0; s < n_; s += len[s]) ++cells;
    while (head < queue_.size() && cells < n_) {
      const int ws = queue_[head++];
      in_queue_[ws] = 0;
      Bits<W> splitter;
      for (int i = ws; i < ws + len[ws]; ++i) splitter.set(lab[i]);
      for (int x = 0; x < n_;) {
        const int sz = len[x];
        if (sz == 1) {
          ++x;
          continue;
        }
        int lo = n_;
        int hi = -1;
        for (int i = x; i < x + sz; ++i) {
          const int c = (rows_[lab[i]] & splitter).count();
          count_[i] = c;
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        }
        if (lo == hi) {
          x += sz;
          continue;
        }
        // Counting sort of the cell by splitter count.
        bucket_.assign(hi - lo + 2, 0);
        for (int i = x; i < x + sz; ++i) ++bucket_[count_[i] - lo + 1];
        for (std::size_t b = 1; b < bucket_.size(); ++b) bucket_[b] += bucket_[b - 1];
        for (int i = x; i < x + sz; ++i) {
          const int dest = x + bucket_[count_[i] - lo]++;
          scratch_[dest] = lab[i];
          sorted_count_[dest] = count_[i];
        }
        std::copy(scratch_.begin() + x, scratch_.begin() + x + sz, lab + x);
        const bool was_queued = in_queue_[x];
        int largest = x;
        int largest_size = 0;
        int frag = x;
        while (frag < x + sz) {
          const int c = sorted_count_[frag];
          int end = frag + 1;
          while (end < x + sz && sorted_count_[end] == c) ++end;
          len[frag] = end - frag;
          h = mix_hash(h, (static_cast<std::uint64_t>(x) << 40) ^
                              (static_cast<std::uint64_t>(c) << 20) ^
                              static_cast<std::uint64_t>(end - frag));
          if (end - frag > largest_size) {
            largest_size = end - frag;
            largest = frag;
          }
          if (frag != x) ++cells;
          frag = end;
        }
        for (int f = x; f < x + sz; f += len[f]) {
          if (in_queue_[f]) continue;
          if (was_queued || f != largest) {
            in_queue_[f] = 1;
            queue_.push_back(f);
          }
        }
        x += sz;
      }
    }
    queue_.clear();
    return mix_hash(h, static_cast<std::uint64_t>(cells));
  }

  // 0 = finished normally; k >= 0 otherwise = abandon everything below level k.
  static constexpr int kNone = -1;

  int search(int d, bool eq_first, int diverge) {
    int* lab = level_lab(d);
    int* len = level_len(d);
    const bool building_first = !first_.valid;
    if (!building_first) {
      if (eq_first && trace_[d] != first_.trace[d]) eq_first = false;
      if (!eq_first && compare_to_best(d) > 0) return kNone;
    }
    int target = -1;
    for (int s = 0; s < n_; s += len[s])
      if (len[s] > 1) {
        target = s;
        break;
      }
    if (target < 0) return leaf(d, eq_first, diverge);

    const int size = len[target];
    const std::size_t base = static_cast<std::size_t>(d) * n_;
    int* cell = cell_.data() + base;
    int* explored = explored_.data() + base;
    int* orbit = orbit_.data() + base;
    std::copy(lab + target, lab + target + size, cell);
    int n_explored = 0;
    std::size_t orbit_gens = static_cast<std::size_t>(-1);
    const bool on_first_path = building_first;

    for (int ci = 0; ci < size; ++ci) {
      const int v = cell[ci];
      if (n_explored > 0) {
        if (orbit_gens != gens_.size()) {
          compute_orbits(d, orbit);
          orbit_gens = gens_.size();
        }
        bool skip = false;
        for (int k = 0; k < n_explored; ++k)
          if (orbit[explored[k]] == orbit[v]) {
            skip = true;
            break;
          }
        if (skip) continue;
      }
      int* clab = level_lab(d + 1);
      int* clen = level_len(d + 1);
      std::copy(lab, lab + n_, clab);
      std::copy(len, len + n_, clen);
      const int pos = static_cast<int>(std::find(clab + target, clab + target + size, v) - clab);
      std::swap(clab[pos], clab[target]);
      clen[target] = 1;
      clen[target + 1] = size - 1;
      queue_.assign(1, target);
      trace_[d + 1] = refine(clab, clen);
      path_[d] = v;
      if (!first_.valid && static_cast<int>(first_path_.size()) == d) first_path_.push_back(v);
      int child_diverge = diverge;
      if (child_diverge < 0 && first_path_[d] != v) child_diverge = d + 1;
      const int jump = search(d + 1, eq_first, child_diverge);
      explored[n_explored++] = v;
      if (jump != kNone && jump < d) return jump;
    }
    if (on_first_path) {
      compute_orbits(d, orbit);
      const int first_child = first_path_[d];
      int len_orbit = 0;
      for (int ci = 0; ci < size; ++ci)
        if (orbit[cell[ci]] == orbit[first_child]) ++len_orbit;
      if (static_cast<int>(orbit_sizes_.size()) <= d) orbit_sizes_.resize(d + 1, 1);
      orbit_sizes_[d] = len_orbit;
    }
    return kNone;
  }

  int compare_to_best(int d) const {
    const int blen = static_cast<int>(best_.trace.size());
    for (int i = 0; i <= d; ++i) {
      if (i >= blen) return 1;
      if (trace_[i] != best_.trace[i]) return trace_[i] < best_.trace[i] ? -1 : 1;
    }
    return 0;
  }

  void leaf_rows(const int* lab, std::vector<Bits<W>>& out) {
    perm_.resize(n_);
    for (int p = 0; p < n_; ++p) perm_[lab[p]] = p;
    out.assign(n_, Bits<W>{});
    for (int p = 0; p < n_; ++p) rows_[lab[p]].for_each([&](int w) { out[p].set(perm_[w]); });
  }

  void store(Leaf& leaf, const int* lab, int d) {
    leaf.valid = true;
    leaf.lab.assign(lab, lab + n_);
    leaf.rows = cur_rows_;
    leaf.trace.assign(trace_.begin(), trace_.begin() + d + 1);
  }

  void add_generator(const Leaf& from, const int* lab) {
    std::vector<int> g(n_);
    bool identity = true;
    for (int p = 0; p < n_; ++p) {
      g[from.lab[p]] = lab[p];
      identity = identity && from.lab[p] == lab[p];
    }
    if (!identity) gens_.push_back(std::move(g));
  }

  int leaf(int d, bool eq_first, int diverge) {
    const int* lab = level_lab(d);
    leaf_rows(lab, cur_rows_);
    if (!first_.valid) {
      store(first_, lab, d);
      best_ = first_;
      orbit_sizes_.assign(d, 1);
      return kNone;
    }
    if (eq_first && static_cast<int>(first_.trace.size()) == d + 1 && cur_rows_ == first_.rows) {
      add_generator(first_, lab);
      return diverge > 0 ? diverge - 1 : kNone;
    }
    int cmp = compare_to_best(d);
    if (cmp == 0) {
      if (static_cast<int>(best_.trace.size()) != d + 1) cmp = -1;
      else cmp = rows_compare(cur_rows_, best_.rows);
    }
    if (cmp == 0) {
      add_generator(best_, lab);
    } else if (cmp < 0) {
      store(best_, lab, d);
    }
    return kNone;
  }

  static int rows_compare(const std::vector<Bits<W>>& a, const std::vector<Bits<W>>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] < b[i]) return -1;
      if (b[i] < a[i]) return 1;
    }
    return 0;
  }

  // Orbits of the group generated by the automorphisms fixing path_[0..d-1].
  void compute_orbits(int d, int* orbit) {
    std::iota(orbit, orbit + n_, 0);
    auto find = [&](int x) {
      while (orbit[x] != x) x = orbit[x] = orbit[orbit[x]];
      return x;
    };
    for (const auto& g : gens_) {
      bool fixes = true;
      for (int i = 0; i < d && fixes; ++i) fixes = g[path_[i]] == path_[i];
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(v);
        int b = find(g[v]);
        if (a != b) orbit[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) orbit[v] = find(v);
  }

  std::span<const Bits<W>> rows_;
  int n_ = 0;
  std::vector<int> lab_, len_, cell_, explored_, orbit_;
  std::vector<std::uint64_t> trace_;
  std::vector<int> path_;
  std::vector<int> first_path_;
  std::vector<int> queue_;
  std::vector<char> in_queue_;
  std::vector<int> count_, sorted_count_, scratch_, bucket_, perm_;
  std::vector<Bits<W>> cur_rows_;
  std::vector<std::vector<int>> gens_;
  std::vector<int> orbit_sizes_;
  Leaf first_, best_;
};

}  // namespace platykit::detail
