#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "platykit/graph.hpp"

namespace platykit {

/// Raised when a request exceeds the default resource guard.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GenTarget { all_graphs, platypuses };

/// Subtree prunes applied during platypus generation. Each is monotone under
/// edge addition; disabling them only costs time.
struct Prunes {
  bool hamiltonian = true;
  bool girth = true;
  bool degree = true;
};

struct GenSpec {
  int order = 0;
  int min_girth = 3;  // 3 means unconstrained
  GenTarget target = GenTarget::platypuses;
  Prunes prunes;
  int jobs = 1;
  /// Tree depth (edge count) at which work is handed to workers.
  int split_depth = -1;  // -1 picks a default
  bool override_guard = false;
};

struct GenStats {
  std::uint64_t nodes = 0;  // accepted augmentation-tree nodes
  std::uint64_t canonical_calls = 0;
  std::uint64_t pruned_hamiltonian = 0;
  std::uint64_t pruned_girth = 0;
  std::uint64_t pruned_degree = 0;
  std::uint64_t candidates_checked = 0;
  double wall_seconds = 0.0;
};

struct GenResult {
  std::uint64_t count = 0;
  std::vector<std::string> canonical_list;  // strictly increasing
  GenStats stats;
};

/// Default platypus census guard: n <= 11 for any girth, 12..14 need girth
/// >= 4, 15..16 need girth >= 6.
bool census_within_guard(int order, int min_girth);
/// Exhaustive graph generation guard: n <= 11.
bool all_graphs_within_guard(int order);
/// PLATYKIT_GUARD_OVERRIDE=1 in the environment.
bool guard_override_from_env();

/// One representative per isomorphism class of graphs on n vertices with
/// girth >= min_girth, as sorted canonical graph6 strings.
GenResult generate_all_graphs(int n, int min_girth, int jobs = 1, bool override_guard = false);

GenResult generate(const GenSpec& spec);

/// Isomorphism classes of platypuses of the given order and girth bound.
GenResult generate_platypuses(const GenSpec& spec);

struct AuditFlags {
  bool max_degree = true;        // max degree <= n - 4
  bool top_degree_clique = true; // degree n - 4 vertices pairwise adjacent
  bool two_connected = true;
  bool degree_two_neighbours = true;  // at most one degree-2 neighbour each
  bool planar_girth = true;      // planar implies girth <= 9
  bool mnh_consistency = true;   // max-degree criterion for maximally non-hamiltonian graphs
};

struct AuditViolation {
  std::string canonical;
  std::string rule;
  std::string detail;
};

struct AuditReport {
  std::uint64_t examined = 0;
  std::uint64_t platypuses = 0;
  std::uint64_t skipped = 0;  // not a platypus
  std::vector<AuditViolation> violations;
  std::vector<std::string> skip_reasons;  // one per skipped graph, "not a platypus"
};

AuditReport audit_stream(std::span<const Graph> graphs, const AuditFlags& flags = {});

}  // namespace platykit
