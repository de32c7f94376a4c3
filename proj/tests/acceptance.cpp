// Acceptance run: one PASS/FAIL/SKIP line per criterion.
//   platykit_acceptance [--tier required|extended] [--jobs N]

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli.hpp"
#include "oracles.hpp"
#include "platykit/constructions.hpp"
#include "platykit/generation.hpp"
#include "platykit/hamiltonicity.hpp"
#include "platykit/invariants.hpp"
#include "platykit/isomorphism.hpp"

using namespace platykit;

namespace {

struct Check {
  bool ok = true;
  std::vector<std::string> notes;
  std::vector<std::string> failures;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

class Census {
 public:
  explicit Census(int jobs) : jobs_(jobs) {}

  // Cached so audits reuse the census lists.
  const GenResult& get(int n, int g) {
    auto key = std::make_pair(n, g);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    GenSpec s;
    s.order = n;
    s.min_girth = g;
    s.jobs = jobs_;
    s.override_guard = true;
    const auto t0 = std::chrono::steady_clock::now();
    GenResult r = generate_platypuses(s);
    r.stats.wall_seconds = seconds_since(t0);
    return cache_.emplace(key, std::move(r)).first->second;
  }

  void cell(Check& c, int n, int g, std::uint64_t expected, double limit_seconds) {
    const auto& r = get(n, g);
    std::ostringstream label;
    label << "(" << n << ", g>=" << g << ")";
    c.expect(r.count == expected, label.str() + " expected " + std::to_string(expected) + " got " +
                                      std::to_string(r.count));
    c.expect(r.stats.wall_seconds <= limit_seconds,
             label.str() + " exceeded " + fmt_seconds(limit_seconds));
    c.note(label.str() + "=" + std::to_string(r.count) + " " + fmt_seconds(r.stats.wall_seconds));
  }

 private:
  int jobs_;
  std::map<std::pair<int, int>, GenResult> cache_;
};

bool cubic(const Graph& g) { return g.min_degree() == 3 && g.max_degree() == 3; }

Check criterion1(Census& census) {
  Check c;
  census.cell(c, 9, 3, 4, 600);
  census.cell(c, 10, 3, 48, 600);
  census.cell(c, 10, 4, 2, 600);
  census.cell(c, 10, 5, 2, 600);
  int delta3 = 0, delta4 = 0;
  for (const auto& s : census.get(9, 3).canonical_list) {
    const int d = decode_graph6(s).max_degree();
    delta3 += d == 3;
    delta4 += d == 4;
  }
  c.expect(delta3 == 1 && delta4 == 3, "order 9 max degrees are not one 3 and three 4");
  const Graph petersen = fixture(FixtureId::petersen);
  const std::vector<std::string> expected_g5 = [&] {
    std::vector<std::string> v{canonical_string(petersen), canonical_string(petersen.without_edge(0, 1))};
    std::sort(v.begin(), v.end());
    return v;
  }();
  c.expect(census.get(10, 5).canonical_list == expected_g5,
           "(10, g>=5) is not {Petersen, Petersen minus an edge}");
  return c;
}

Check criterion2(Census& census) {
  Check c;
  const std::vector<std::array<int, 3>> cells{{11, 4, 4},  {11, 5, 3},  {12, 4, 48},
                                              {12, 5, 7},  {12, 6, 1},  {13, 5, 27},
                                              {13, 6, 1},  {14, 6, 2},  {16, 7, 1}};
  for (const auto& [n, g, count] : cells) census.cell(c, n, g, count, 3600);
  // Exactly one order-11 platypus has girth 4.
  const auto& g4 = census.get(11, 4).canonical_list;
  const auto& g5 = census.get(11, 5).canonical_list;
  int girth_four = 0;
  for (const auto& s : g4) girth_four += girth(decode_graph6(s)) == 4;
  c.expect(girth_four == 1 && g4.size() - g5.size() == 1, "order 11 girth-4 platypus is not unique");
  c.expect(decode_graph6(census.get(16, 7).canonical_list.front()).order() == 16,
           "girth-7 platypus does not have 16 vertices");
  return c;
}

Check criterion3(Census& census) {
  Check c;
  census.cell(c, 11, 3, 814, 12 * 3600);
  census.cell(c, 14, 4, 6623, 12 * 3600);
  return c;
}

Check criterion4(bool extended) {
  Check c;
  for (int n : {5, 7, 9, 11})
    c.expect(is_platypus(petersen_prism(n, 2)).verdict, "PP(" + std::to_string(n) + ",2) not a platypus");
  int nonham = 0;
  for (int n = 5; n <= 13; n += 2)
    for (int k = 1; 2 * k < n; ++k) {
      const bool ham = is_hamiltonian(petersen_prism(n, k));
      c.expect(!ham, "PP(" + std::to_string(n) + "," + std::to_string(k) + ") hamiltonian");
      ++nonham;
    }
  c.note(std::to_string(nonham) + " odd prisms non-hamiltonian");
  const std::vector<std::array<int, 3>> ladder{{9, 2, 9},   {11, 3, 10}, {13, 5, 11}, {23, 5, 12},
                                               {31, 7, 13}, {39, 7, 14}, {49, 9, 15}, {59, 9, 16}};
  double slowest_girth = 0;
  for (const auto& [n, k, g] : ladder) {
    const auto t0 = std::chrono::steady_clock::now();
    const int got = girth(petersen_prism(n, k));
    slowest_girth = std::max(slowest_girth, seconds_since(t0));
    c.expect(got == g, "girth PP(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                           std::to_string(got) + ", expected " + std::to_string(g));
  }
  c.expect(slowest_girth < 5.0, "girth computation slower than seconds");
  c.note("girth ladder max " + fmt_seconds(slowest_girth));
  auto verify = [&](int n, int k, double limit) {
    const auto t0 = std::chrono::steady_clock::now();
    const bool plat = is_platypus(petersen_prism(n, k)).verdict;
    const double s = seconds_since(t0);
    const std::string name = "PP(" + std::to_string(n) + "," + std::to_string(k) + ")";
    c.expect(plat, name + " not a platypus");
    c.expect(s <= limit, name + " verification exceeded " + fmt_seconds(limit));
    c.note(name + " platypus " + fmt_seconds(s));
  };
  verify(13, 5, 600);
  if (extended)
    for (const auto& [n, k, g] : ladder)
      if (n >= 23) verify(n, k, 7200);
  return c;
}

Check criterion5() {
  Check c;
  Graph g = fixture(FixtureId::tietze);
  for (int k = 1; k <= 5; ++k) {
    const auto tri = find_triangle(g);
    c.expect(tri.has_value(), "T^" + std::to_string(k - 1) + " has no triangle");
    if (!tri) break;
    g = apply_triangle_T(g, *tri);
    c.expect(g.order() == 12 + 2 * k, "T^" + std::to_string(k) + " has wrong order");
    c.expect(cubic(g), "T^" + std::to_string(k) + " not cubic");
    c.expect(is_platypus(g).verdict, "T^" + std::to_string(k) + " not a platypus");
    c.expect(find_triangle(g).has_value(), "T^" + std::to_string(k) + " has no triangle");
  }
  c.note("orders 14..22");
  return c;
}

Check criterion6() {
  Check c;
  auto polyhedral = [&](FixtureId id, int order, int expected_girth) {
    const Graph g = fixture(id);
    const std::string name(fixture_name(id));
    c.expect(g.order() == order, name + " order");
    c.expect(is_planar(g), name + " not planar");
    c.expect(vertex_connectivity(g) == 3, name + " not 3-connected");
    if (expected_girth > 0) c.expect(girth(g) == expected_girth, name + " girth");
    c.expect(is_platypus(g).verdict, name + " not a platypus");
  };
  polyhedral(FixtureId::fig8a_poly21, 21, 4);
  polyhedral(FixtureId::fig8b_poly28, 28, 5);
  polyhedral(FixtureId::fig9a_poly22, 22, 0);
  polyhedral(FixtureId::fig9b_poly23, 23, 0);
  const Graph left = fixture(FixtureId::fig7_left);
  const Graph right = fixture(FixtureId::fig7_right);
  c.expect(is_platypus(left).verdict, "fig7_left not a platypus");
  c.expect(!is_platypus(right).verdict, "fig7_right is a platypus");
  c.expect(are_isomorphic(replace_ear(left, fig7_left_marked_ear(), 4), right),
           "ear replacement does not give fig7_right");
  return c;
}

Check criterion7() {
  Check c;
  const Graph petersen = fixture(FixtureId::petersen);
  const Graph tietze = fixture(FixtureId::tietze);
  for (const auto& [name, g] : {std::pair{"Petersen", petersen}, {"Tietze", tietze}}) {
    c.expect(is_platypus(g).verdict, std::string(name) + " not a platypus");
    c.expect(is_maximally_non_hamiltonian(g).verdict, std::string(name) + " not MNH");
  }
  c.expect(cubic(petersen) && girth(petersen) == 5, "Petersen cubic girth 5");
  c.expect(cyclic_edge_connectivity_at_least(petersen, 4), "Petersen cyclically 4-edge-connected");
  c.expect(!is_three_edge_colorable(petersen), "Petersen 3-edge-colourable");
  c.expect(is_snark(petersen).verdict, "Petersen not a snark");
  const auto t = is_snark(tietze);
  c.expect(!t.verdict && t.reason == "girth", "Tietze snark clause: " + t.reason);
  for (int v = 0; v < 10; ++v)
    c.expect(are_isomorphic(expand_vertex_to_triangle(petersen, v), tietze),
             "expansion at " + std::to_string(v) + " not Tietze");
  return c;
}

Check criterion8(Census& census, bool extended) {
  Check c;
  std::vector<int> orders{9, 10, 11};
  if (!extended) orders.pop_back();
  for (int n : orders) {
    std::vector<Graph> graphs;
    for (const auto& s : census.get(n, 3).canonical_list) graphs.push_back(decode_graph6(s));
    const auto report = audit_stream(graphs);
    c.expect(report.platypuses == graphs.size(), "order " + std::to_string(n) + " audit skipped graphs");
    for (const auto& v : report.violations) c.expect(false, v.rule + " " + v.canonical + " " + v.detail);
    for (const Graph& g : graphs) {
      const int d = g.max_degree();
      c.expect(d <= n - 4 && d != n - 1 && d != n - 2 && d != n - 3, "max degree bound");
    }
    c.note("order " + std::to_string(n) + ": " + std::to_string(report.platypuses) + " audited");
  }
  if (!extended) c.note("order 11 audited in the extended tier");
  return c;
}

Check criterion9() {
  Check c;
  for (int n = 1; n <= 7; ++n) {
    const auto got = generate_all_graphs(n, 3).count;
    const auto want = oracle::isomorphism_classes(n, 3);
    c.expect(got == want, "n=" + std::to_string(n) + ": " + std::to_string(got) + " vs oracle " +
                              std::to_string(want));
  }
  c.note("classes 1..7 match oracle");
  std::uint64_t plat = 0, oracle_plat = 0;
  for (int n = 1; n <= 8; ++n)
    for (const auto& s : generate_all_graphs(n, 3).canonical_list) {
      const Graph g = decode_graph6(s);
      plat += is_platypus(g).verdict;
      oracle_plat += oracle::platypus(g);
    }
  c.expect(plat == 0 && oracle_plat == 0, "platypus found on at most 8 vertices");
  std::mt19937_64 rng(20240);
  int round_trips = 0;
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + static_cast<int>(rng() % 256);
    const Graph g = oracle::random_graph(n, 0.05 + 0.9 * (i % 10) / 10.0, rng);
    c.expect(decode_graph6(encode_graph6(g)) == g, "graph6 round trip n=" + std::to_string(n));
    ++round_trips;
  }
  c.note(std::to_string(round_trips) + " codec round trips");
  for (int i = 0; i < 500; ++i) {
    const int n = 2 + i % 40;
    const Graph g = i % 2 ? oracle::random_graph(n, 0.3, rng) : oracle::random_cubic(4 + 2 * (i % 20), rng);
    c.expect(canonical_string(g) == canonical_string(oracle::shuffled(g, rng)), "relabelling changed canonical form");
  }
  c.note("500 relabellings invariant");
  return c;
}

Check criterion10() {
  Check c;
  // External lists (snark or plantri output) arrive as graph6 lines of any
  // order; run such a list through the command-line filter.
  std::mt19937_64 rng(38);
  std::string input;
  std::vector<std::string> snarks;
  for (int n : {38, 44, 62, 64, 90, 120}) input += encode_graph6(oracle::random_cubic(n, rng)) + "\n";
  input += encode_graph6(fixture(FixtureId::petersen)) + "\n";
  input += encode_graph6(petersen_prism(13, 5)) + "\n";
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run({"filter", "--snark", "--jobs", "2", "-"}, in, out, err);
  c.expect(code == cli::kOk, "filter exit code " + std::to_string(code));
  std::vector<std::string> expect;
  std::istringstream lines(input);
  for (std::string l; std::getline(lines, l);)
    if (is_snark(decode_graph6(l)).verdict) expect.push_back(l);
  std::string joined;
  for (const auto& s : expect) joined += s + "\n";
  c.expect(out.str() == joined, "filter output differs from direct evaluation");
  c.expect(!expect.empty(), "no snark in the sample list");
  c.note("external-list pipeline checked; large-order claims documented only");
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::string tier = "required";
  int jobs = 1;
  app.add_option("--tier", tier)->check(CLI::IsMember({"required", "extended"}));
  app.add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);
  const bool extended = tier == "extended";

  Census census(jobs);
  struct Criterion {
    int id;
    std::string title;
    std::function<Check()> run;
    bool extended_only = false;
  };
  const std::vector<Criterion> criteria{
      {1, "census required tier", [&] { return criterion1(census); }},
      {2, "census girth tier", [&] { return criterion2(census); }},
      {3, "census extended tier", [&] { return criterion3(census); }, true},
      {4, "Petersen prism constructions", [&] { return criterion4(extended); }},
      {5, "transformation chain", [] { return criterion5(); }},
      {6, "figure fixtures", [] { return criterion6(); }},
      {7, "named graphs", [] { return criterion7(); }},
      {8, "structural audits", [&] { return criterion8(census, extended); }},
      {9, "oracle suite", [] { return criterion9(); }},
      {10, "external lists", [] { return criterion10(); }},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    if (cr.extended_only && !extended) {
      std::printf("SKIP criterion %d: %s (extended tier)\n", cr.id, cr.title.c_str());
      std::fflush(stdout);
      continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
      c = cr.run();
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::string detail;
    for (const auto& n : c.notes) detail += (detail.empty() ? "" : "; ") + n;
    for (const auto& f : c.failures) detail += (detail.empty() ? "" : "; ") + std::string("FAILED ") + f;
    if (!detail.empty()) detail = " [" + detail + "]";
    std::printf("%s criterion %d: %s%s (%s)\n", c.ok ? "PASS" : "FAIL", cr.id, cr.title.c_str(),
                detail.c_str(), fmt_seconds(seconds_since(t0)).c_str());
    std::fflush(stdout);
    failed += !c.ok;
  }
  return failed == 0 ? 0 : 1;
}
