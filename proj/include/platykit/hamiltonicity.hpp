#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "platykit/graph.hpp"

namespace platykit {

/// Outcome of a hamiltonicity-derived predicate. A false verdict carries the
/// reason it failed: a witness (the graph is hamiltonian or traceable when it
/// must not be), an offending vertex v (G - v fails the required property),
/// or an offending non-adjacent pair.
struct PropertyReport {
  std::string predicate;
  bool verdict = false;
  bool applicable = true;
  std::optional<HamWitness> witness;
  std::optional<int> vertex;
  std::optional<Edge> pair;
  std::string reason;
  std::uint64_t nodes_searched = 0;
};

/// Throws std::invalid_argument when n < 3.
std::optional<HamWitness> find_hamiltonian_cycle(const Graph& g,
                                                 std::uint64_t* nodes = nullptr);

/// Spanning path, optionally with both ends fixed. Throws std::invalid_argument
/// when n < 2 or the endpoints are equal or out of range.
std::optional<HamWitness> find_hamiltonian_path(
    const Graph& g, std::optional<std::pair<int, int>> endpoints = std::nullopt,
    std::uint64_t* nodes = nullptr);

/// Spanning path that starts at `start`.
std::optional<HamWitness> find_hamiltonian_path_from(const Graph& g, int start,
                                                     std::uint64_t* nodes = nullptr);

bool is_hamiltonian(const Graph& g);
bool is_traceable(const Graph& g);

/// Minimum degree at least n/2 (Dirac): hamiltonian without search.
bool dirac_sufficient(const Graph& g);

/// Non-hamiltonian, n >= 3, and every vertex-deleted subgraph traceable.
PropertyReport is_platypus(const Graph& g);
PropertyReport is_hypohamiltonian(const Graph& g);
PropertyReport is_hypotraceable(const Graph& g);
PropertyReport is_homogeneously_traceable(const Graph& g);
PropertyReport is_maximally_non_hamiltonian(const Graph& g);

/// For maximally non-hamiltonian graphs, checks that being a platypus is
/// equivalent to max degree < n - 1. Verdict true means consistent;
/// `applicable` is false for graphs that are not maximally non-hamiltonian.
PropertyReport lemma2_audit(const Graph& g);

}  // namespace platykit
