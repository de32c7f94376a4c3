#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "platykit/constructions.hpp"
#include "platykit/generation.hpp"
#include "platykit/hamiltonicity.hpp"

using namespace platykit;

namespace {

std::vector<Graph> all_graphs(int n) {
  std::vector<Graph> out;
  for (const auto& s : generate_all_graphs(n, 3).canonical_list) out.push_back(decode_graph6(s));
  return out;
}

Graph star(int leaves) {
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph::from_edge_list(leaves + 1, edges);
}

// K_p and K_q sharing one vertex.
Graph glued_cliques(int p, int q) {
  std::vector<Edge> edges;
  for (int u = 0; u < p; ++u)
    for (int v = u + 1; v < p; ++v) edges.push_back({u, v});
  std::vector<int> second{0};
  for (int i = 1; i < q; ++i) second.push_back(p - 1 + i);
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) edges.push_back({second[i], second[j]});
  return Graph::from_edge_list(p + q - 1, edges);
}

}  // namespace

TEST_SUITE("hamiltonicity") {
  TEST_CASE("cycle and path witnesses") {
    const auto c = find_hamiltonian_cycle(cycle_graph(5));
    REQUIRE(c);
    CHECK(c->kind == WitnessKind::cycle);
    CHECK(c->vertices == std::vector<int>{0, 1, 2, 3, 4});

    const auto p = find_hamiltonian_path(cycle_graph(5), std::make_pair(0, 1));
    REQUIRE(p);
    CHECK(p->vertices == std::vector<int>{0, 4, 3, 2, 1});
    CHECK_FALSE(find_hamiltonian_path(cycle_graph(5), std::make_pair(0, 2)));

    const auto free_path = find_hamiltonian_path(fixture(FixtureId::petersen));
    REQUIRE(free_path);
    CHECK(is_valid_witness(fixture(FixtureId::petersen), *free_path));
    CHECK_FALSE(find_hamiltonian_cycle(fixture(FixtureId::petersen)));
    CHECK_FALSE(find_hamiltonian_cycle(petersen_prism(7, 2)));
  }

  TEST_CASE("precondition errors") {
    CHECK_THROWS_AS(find_hamiltonian_cycle(path_graph(2)), std::invalid_argument);
    CHECK_THROWS_AS(find_hamiltonian_path(Graph(1)), std::invalid_argument);
    CHECK_THROWS_AS(find_hamiltonian_path(cycle_graph(4), std::make_pair(1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(find_hamiltonian_path(cycle_graph(4), std::make_pair(0, 4)), std::invalid_argument);
    CHECK_THROWS_AS(find_hamiltonian_path_from(cycle_graph(4), 7), std::invalid_argument);
  }

  TEST_CASE("witness validator rejects broken sequences") {
    const Graph c5 = cycle_graph(5);
    CHECK(is_valid_witness(c5, {WitnessKind::cycle, {0, 1, 2, 3, 4}}));
    CHECK_FALSE(is_valid_witness(c5, {WitnessKind::cycle, {0, 1, 2, 4, 3}}));
    CHECK_FALSE(is_valid_witness(c5, {WitnessKind::cycle, {0, 1, 2, 3}}));
    CHECK_FALSE(is_valid_witness(c5, {WitnessKind::path, {0, 1, 2, 3, 3}}));
    CHECK(is_valid_witness(c5, {WitnessKind::path, {1, 2, 3, 4, 0}}));
    CHECK_FALSE(is_valid_witness(path_graph(5), {WitnessKind::cycle, {0, 1, 2, 3, 4}}));
  }

  TEST_CASE("named predicate examples") {
    const Graph petersen = fixture(FixtureId::petersen);
    const Graph k4 = complete_graph(4);
    CHECK(is_platypus(petersen).verdict);
    CHECK(is_hypohamiltonian(petersen).verdict);
    CHECK(is_homogeneously_traceable(petersen).verdict);
    CHECK(is_maximally_non_hamiltonian(petersen).verdict);
    CHECK(is_maximally_non_hamiltonian(fixture(FixtureId::tietze)).verdict);
    CHECK(is_platypus(petersen_prism(9, 2)).verdict);

    const auto k4_report = is_platypus(k4);
    CHECK_FALSE(k4_report.verdict);
    REQUIRE(k4_report.witness);
    CHECK(is_valid_witness(k4, *k4_report.witness));
    CHECK_FALSE(is_hypohamiltonian(k4).verdict);
    CHECK_FALSE(is_hypotraceable(k4).verdict);
    CHECK_FALSE(is_maximally_non_hamiltonian(k4).verdict);

    const auto k2 = is_platypus(complete_graph(2));
    CHECK_FALSE(k2.verdict);
    CHECK(k2.reason == "n < 3");

    const Graph dotted_triangle = dotted_prism(cycle_graph(3));
    CHECK(is_platypus(dotted_triangle).verdict);
    CHECK_FALSE(is_hypohamiltonian(dotted_triangle).verdict);
    CHECK(oracle::platypus(dotted_triangle));
    CHECK_FALSE(oracle::hypohamiltonian(dotted_triangle));

    CHECK(is_homogeneously_traceable(cycle_graph(5)).verdict);
    CHECK_FALSE(is_homogeneously_traceable(star(3)).verdict);
    CHECK_FALSE(is_maximally_non_hamiltonian(cycle_graph(5)).verdict);
  }

  TEST_CASE("platypus counterexamples") {
    const auto path = is_platypus(path_graph(5));
    CHECK_FALSE(path.verdict);
    REQUIRE(path.vertex);
    CHECK_FALSE(oracle::hamiltonian_path(delete_vertex(path_graph(5), *path.vertex)));
  }

  TEST_CASE("maximal non-hamiltonicity degree audit") {
    const auto petersen = lemma2_audit(fixture(FixtureId::petersen));
    CHECK(petersen.applicable);
    CHECK(petersen.verdict);
    CHECK(petersen.reason == "platypus, consistent");

    const Graph glued = glued_cliques(4, 4);
    CHECK(is_maximally_non_hamiltonian(glued).verdict);
    const auto glued_report = lemma2_audit(glued);
    CHECK(glued_report.applicable);
    CHECK(glued_report.verdict);
    CHECK(glued_report.reason == "not a platypus, consistent");

    const auto c5 = lemma2_audit(cycle_graph(5));
    CHECK_FALSE(c5.applicable);
  }

  TEST_CASE("agreement with the subset oracle on every graph up to 8 vertices") {
    std::uint64_t platypuses = 0;
    for (int n = 3; n <= 8; ++n) {
      for (const Graph& g : all_graphs(n)) {
        const bool ham = oracle::hamiltonian_cycle(g);
        const auto cycle = find_hamiltonian_cycle(g);
        REQUIRE(cycle.has_value() == ham);
        if (cycle) REQUIRE(is_valid_witness(g, *cycle));
        const auto path = find_hamiltonian_path(g);
        REQUIRE(path.has_value() == oracle::hamiltonian_path(g));
        if (path) REQUIRE(is_valid_witness(g, *path));

        const bool plat = is_platypus(g).verdict;
        REQUIRE(plat == oracle::platypus(g));
        platypuses += plat;
        const bool hypo = is_hypohamiltonian(g).verdict;
        const bool hypot = is_hypotraceable(g).verdict;
        const bool homog = is_homogeneously_traceable(g).verdict;
        REQUIRE(hypo == oracle::hypohamiltonian(g));
        REQUIRE(hypot == oracle::hypotraceable(g));
        REQUIRE(homog == oracle::homogeneously_traceable(g));
        REQUIRE(is_maximally_non_hamiltonian(g).verdict == oracle::maximally_non_hamiltonian(g));
        // Class inclusions.
        if (hypo || hypot || (homog && !ham)) REQUIRE(plat);
        const auto audit = lemma2_audit(g);
        REQUIRE(audit.verdict);
      }
    }
    CHECK(platypuses == 0);
  }

  TEST_CASE("endpoint queries agree with the oracle") {
    for (const Graph& g : all_graphs(7)) {
      for (int s = 0; s < 7; ++s) {
        const auto from = find_hamiltonian_path_from(g, s);
        REQUIRE(from.has_value() == oracle::hamiltonian_path_from(g, s));
        if (from) REQUIRE(from->vertices.front() == s);
        for (int t = s + 1; t < 7; t += 3) {
          const auto between = find_hamiltonian_path(g, std::make_pair(s, t));
          REQUIRE(between.has_value() == oracle::hamiltonian_path_between(g, s, t));
          if (between) {
            REQUIRE(between->vertices.front() == s);
            REQUIRE(between->vertices.back() == t);
            REQUIRE(is_valid_witness(g, *between));
          }
        }
      }
    }
  }

  TEST_CASE("random sparse graphs on 12 to 18 vertices agree with the oracle") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 120; ++trial) {
      const int n = 12 + trial % 7;
      const Graph g = oracle::random_graph(n, 0.18 + 0.002 * trial, rng);
      CAPTURE(encode_graph6(g));
      REQUIRE(is_hamiltonian(g) == oracle::hamiltonian_cycle(g));
      REQUIRE(is_traceable(g) == oracle::hamiltonian_path(g));
    }
    for (int trial = 0; trial < 30; ++trial) {
      const Graph g = oracle::random_cubic(16, rng);
      CAPTURE(encode_graph6(g));
      REQUIRE(is_hamiltonian(g) == oracle::hamiltonian_cycle(g));
      REQUIRE(is_platypus(g).verdict == oracle::platypus(g));
    }
  }

  TEST_CASE("hamiltonicity is monotone under edge addition") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 6 + trial % 12;
      Graph g = oracle::random_graph(n, 0.35, rng);
      if (!is_hamiltonian(g)) continue;
      std::uniform_int_distribution<int> pick(0, n - 1);
      for (int k = 0; k < 5; ++k) {
        const int u = pick(rng), v = pick(rng);
        if (u == v || g.has_edge(u, v)) continue;
        g = g.with_edge(u, v);
        REQUIRE(is_hamiltonian(g));
      }
    }
  }

  TEST_CASE("dense graphs take the minimum degree shortcut") {
    const Graph g = complete_graph(12).without_edge(0, 1).without_edge(2, 3);
    CHECK(dirac_sufficient(g));
    const auto w = find_hamiltonian_cycle(g);
    REQUIRE(w);
    CHECK(is_valid_witness(g, *w));
    CHECK_FALSE(dirac_sufficient(cycle_graph(5)));
  }
}
