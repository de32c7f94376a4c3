#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "platykit/constructions.hpp"
#include "platykit/graph.hpp"

using namespace platykit;

TEST_SUITE("graph") {
  TEST_CASE("edge list validation") {
    const Edge loop[] = {{1, 1}};
    CHECK_THROWS_AS(Graph::from_edge_list(3, loop), std::invalid_argument);
    const Edge dup[] = {{0, 1}, {1, 0}};
    CHECK_THROWS_AS(Graph::from_edge_list(3, dup), std::invalid_argument);
    const Edge out[] = {{0, 3}};
    CHECK_THROWS_AS(Graph::from_edge_list(3, out), std::invalid_argument);
    CHECK_THROWS(Graph(0));
    CHECK_THROWS(Graph(257));
    CHECK_NOTHROW(Graph(256));
  }

  TEST_CASE("degrees and edges") {
    const Graph g = complete_graph(5).without_edge(0, 1);
    CHECK(g.size() == 9);
    CHECK(g.degree(0) == 3);
    CHECK(g.min_degree() == 3);
    CHECK(g.max_degree() == 4);
    CHECK(g.degree_sequence() == std::vector<int>{3, 3, 4, 4, 4});
    CHECK(g.neighbors(0) == std::vector<int>{2, 3, 4});
    CHECK(g.edges().front() == Edge{0, 2});
    CHECK(g.with_edge(0, 1) == complete_graph(5));
    CHECK(cycle_graph(6).size() == 6);
    CHECK(path_graph(6).size() == 5);
  }

  TEST_CASE("known graph6 strings") {
    CHECK(encode_graph6(Graph(1)) == "@");
    CHECK(encode_graph6(complete_graph(2)) == "A_");
    CHECK(encode_graph6(complete_graph(4)) == "C~");
    CHECK(encode_graph6(generalized_petersen(5, 2)) == "IheA@GUAo");
    CHECK(decode_graph6("IheA@GUAo") == generalized_petersen(5, 2));
  }

  TEST_CASE("graph6 round trip across header widths") {
    std::mt19937_64 rng(11);
    for (int n : {1, 2, 5, 30, 62, 63, 64, 65, 100, 200, 256}) {
      for (double p : {0.0, 0.1, 0.5, 1.0}) {
        const Graph g = oracle::random_graph(n, p, rng);
        CAPTURE(n);
        CHECK(g.wide() == (n > 64));
        const std::string s = encode_graph6(g);
        CHECK(s.front() == (n <= 62 ? static_cast<char>(63 + n) : '~'));
        CHECK(decode_graph6(s) == g);
      }
    }
  }

  TEST_CASE("malformed graph6 is rejected") {
    for (const char* bad : {"", "I", "IheA@GUA", "IheA@GUAoo", "I he", "~~??????", "\x7f", "~?"})
      CHECK_THROWS_AS(decode_graph6(bad), Graph6Error);
  }

  TEST_CASE("relabeling and vertex deletion") {
    const Graph p = path_graph(4);
    const int perm[] = {3, 2, 1, 0};
    CHECK(p.relabeled(perm) == p);
    const int bad[] = {0, 0, 1, 2};
    CHECK_THROWS(p.relabeled(bad));
    const Graph d = delete_vertex(cycle_graph(5), 2);
    CHECK(d == path_graph(4).relabeled(std::vector<int>{2, 3, 0, 1}));
    CHECK_THROWS(delete_vertex(Graph(1), 0));
  }

  TEST_CASE("suppressing degree-two chains") {
    SUBCASE("a Petersen prism collapses to its generalized Petersen graph") {
      const auto multi = suppress_degree_two(petersen_prism(7, 2));
      CHECK(multi.n == 14);
      CHECK(multi.edges == generalized_petersen(7, 2).edges());
    }
    SUBCASE("theta graph gives a triple edge") {
      const Edge theta[] = {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 1}};
      const auto multi = suppress_degree_two(Graph::from_edge_list(6, theta));
      CHECK(multi.n == 2);
      CHECK(multi.edges == std::vector<Edge>(3, Edge{0, 1}));
      CHECK(multi.min_degree() == 3);
    }
    SUBCASE("bowtie gives two loops") {
      const Edge bowtie[] = {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}};
      const auto multi = suppress_degree_two(Graph::from_edge_list(5, bowtie));
      CHECK(multi.n == 1);
      CHECK(multi.edges == std::vector<Edge>(2, Edge{0, 0}));
      CHECK(multi.degrees() == std::vector<int>{4});
    }
    SUBCASE("a path keeps its two ends") {
      const auto multi = suppress_degree_two(path_graph(5));
      CHECK(multi.n == 2);
      CHECK(multi.edges == std::vector<Edge>{{0, 1}});
    }
    SUBCASE("a bare cycle has no anchor") {
      CHECK_THROWS_AS(suppress_degree_two(cycle_graph(5)), std::invalid_argument);
    }
  }
}
