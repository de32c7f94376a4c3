#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "platykit/constructions.hpp"
#include "platykit/digest.hpp"
#include "platykit/generation.hpp"
#include "platykit/graph.hpp"
#include "platykit/hamiltonicity.hpp"
#include "platykit/invariants.hpp"
#include "platykit/isomorphism.hpp"

#ifndef PLATYKIT_VERSION
#define PLATYKIT_VERSION "0.0.0"
#endif

namespace platykit::cli {
namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

int to_int(const std::string& s, const char* what) {
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw UsageError(std::string(what) + " must be an integer, got '" + s + "'");
  return v;
}

std::string trim(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

json girth_json(int g) { return g == kInfiniteGirth ? json(nullptr) : json(g); }

json report_json(const PropertyReport& r) {
  json j;
  j["verdict"] = r.verdict;
  if (!r.applicable) j["applicable"] = false;
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (r.witness) {
    j["witness"] = {{"kind", r.witness->kind == WitnessKind::cycle ? "cycle" : "path"},
                    {"vertices", r.witness->vertices}};
  }
  if (r.vertex) j["vertex"] = *r.vertex;
  if (r.pair) j["pair"] = {r.pair->u, r.pair->v};
  j["nodes_searched"] = r.nodes_searched;
  return j;
}

// Opens `path` for reading; "-" is the caller's input stream.
class Input {
 public:
  Input(const std::string& path, std::istream& in) {
    if (path == "-") {
      stream_ = &in;
    } else {
      file_.open(path);
      if (!file_) throw UsageError("cannot open input file " + path);
      stream_ = &file_;
    }
  }
  std::istream& get() { return *stream_; }

 private:
  std::ifstream file_;
  std::istream* stream_ = nullptr;
};

void write_json_file(const std::string& path, const json& j) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << j.dump(2) << '\n';
}

struct Line {
  std::size_t number = 0;
  std::string text;
};

// Reads up to `limit` non-empty lines; updates the running input digest.
std::vector<Line> read_batch(std::istream& in, std::size_t limit, std::size_t& line_no,
                             std::uint64_t& digest) {
  std::vector<Line> batch;
  std::string raw;
  while (batch.size() < limit && std::getline(in, raw)) {
    ++line_no;
    digest = fnv1a64(raw, digest);
    digest = fnv1a64("\n", digest);
    std::string t = trim(raw);
    if (t.empty()) continue;
    batch.push_back({line_no, std::move(t)});
  }
  return batch;
}

template <class F>
void parallel_for(std::size_t count, int jobs, F&& f) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> threads;
  const int t = static_cast<int>(std::min<std::size_t>(jobs, count));
  for (int k = 0; k < t; ++k)
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) f(i);
    });
  for (auto& th : threads) th.join();
}

struct FilterSpec {
  bool platypus = false;
  bool hypohamiltonian = false;
  bool snark = false;
  bool planar = false;
  bool cubic = false;
  int connectivity = -1;
  int girth_min = -1;

  bool accepts(const Graph& g) const {
    if (cubic && !(g.min_degree() == 3 && g.max_degree() == 3)) return false;
    if (girth_min > 0 && girth(g) < girth_min) return false;
    if (planar && !is_planar(g)) return false;
    if (connectivity >= 0 && (g.order() < 2 ? 0 : vertex_connectivity(g)) < connectivity)
      return false;
    if (snark && !is_snark(g).verdict) return false;
    if (platypus && !is_platypus(g).verdict) return false;
    if (hypohamiltonian && !is_hypohamiltonian(g).verdict) return false;
    return true;
  }

  json to_json() const {
    json j;
    j["platypus"] = platypus;
    j["hypohamiltonian"] = hypohamiltonian;
    j["snark"] = snark;
    j["planar"] = planar;
    j["cubic"] = cubic;
    j["connectivity"] = connectivity >= 0 ? json(connectivity) : json(nullptr);
    j["girth_min"] = girth_min > 0 ? json(girth_min) : json(nullptr);
    return j;
  }
};

struct StreamOptions {
  std::string input = "-";
  std::string manifest;
  int jobs = 1;
  bool strict = false;
};

constexpr std::size_t kBatch = 256;

int cmd_filter(const FilterSpec& spec, const StreamOptions& opt, const std::vector<std::string>& args,
               std::istream& in, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  Input input(opt.input, in);
  std::size_t line_no = 0;
  std::uint64_t digest = fnv1a64("");
  std::uint64_t total = 0, passed = 0, malformed = 0;
  json verdicts = json::array();
  json bad_lines = json::array();
  const bool want_manifest = !opt.manifest.empty();
  bool aborted = false;
  while (!aborted) {
    auto batch = read_batch(input.get(), kBatch, line_no, digest);
    if (batch.empty()) break;
    std::vector<std::optional<Graph>> graphs(batch.size());
    std::vector<std::string> errors(batch.size());
    std::vector<char> pass(batch.size(), 0);
    std::vector<std::string> canon(batch.size());
    parallel_for(batch.size(), opt.jobs, [&](std::size_t i) {
      try {
        graphs[i] = decode_graph6(batch[i].text);
      } catch (const Graph6Error& e) {
        errors[i] = e.what();
        return;
      }
      pass[i] = spec.accepts(*graphs[i]);
      if (want_manifest) canon[i] = canonical_string(*graphs[i]);
    });
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (!graphs[i]) {
        ++malformed;
        err << "line " << batch[i].number << ": " << errors[i] << '\n';
        bad_lines.push_back(batch[i].number);
        if (opt.strict) {
          aborted = true;
          break;
        }
        continue;
      }
      ++total;
      if (pass[i]) {
        ++passed;
        out << batch[i].text << '\n';
      }
      if (want_manifest)
        verdicts.push_back(
            {{"line", batch[i].number}, {"canonical", canon[i]}, {"pass", pass[i] != 0}});
    }
  }
  if (want_manifest) {
    json m;
    m["command_line"] = args;
    m["version"] = PLATYKIT_VERSION;
    m["input_digest"] = hex64(digest);
    m["predicates"] = spec.to_json();
    m["counts"] = {{"total", total}, {"passed", passed}, {"failed", total - passed},
                   {"malformed", malformed}};
    m["malformed_lines"] = bad_lines;
    m["verdicts"] = verdicts;
    m["wall_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_json_file(opt.manifest, m);
  }
  return malformed ? kParse : kOk;
}

int cmd_canon(const StreamOptions& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  Input input(opt.input, in);
  std::size_t line_no = 0;
  std::uint64_t digest = fnv1a64("");
  bool bad = false;
  while (true) {
    auto batch = read_batch(input.get(), kBatch, line_no, digest);
    if (batch.empty()) break;
    std::vector<std::string> res(batch.size()), errors(batch.size());
    parallel_for(batch.size(), opt.jobs, [&](std::size_t i) {
      try {
        res[i] = canonical_string(decode_graph6(batch[i].text));
      } catch (const Graph6Error& e) {
        errors[i] = e.what();
      }
    });
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (!errors[i].empty()) {
        err << "line " << batch[i].number << ": " << errors[i] << '\n';
        bad = true;
        if (opt.strict) return kParse;
        continue;
      }
      out << res[i] << '\n';
    }
  }
  return bad ? kParse : kOk;
}

int cmd_audit(const StreamOptions& opt, const std::vector<std::string>& args, std::istream& in,
              std::ostream& out, std::ostream& err) {
  Input input(opt.input, in);
  std::size_t line_no = 0;
  std::uint64_t digest = fnv1a64("");
  AuditReport total;
  bool bad = false;
  while (true) {
    auto batch = read_batch(input.get(), kBatch, line_no, digest);
    if (batch.empty()) break;
    std::vector<std::optional<Graph>> graphs(batch.size());
    std::vector<AuditReport> reports(batch.size());
    std::vector<std::string> errors(batch.size());
    parallel_for(batch.size(), opt.jobs, [&](std::size_t i) {
      try {
        graphs[i] = decode_graph6(batch[i].text);
      } catch (const Graph6Error& e) {
        errors[i] = e.what();
        return;
      }
      reports[i] = audit_stream(std::span<const Graph>(&*graphs[i], 1));
    });
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (!graphs[i]) {
        err << "line " << batch[i].number << ": " << errors[i] << '\n';
        bad = true;
        if (opt.strict) return kParse;
        continue;
      }
      const auto& r = reports[i];
      total.examined += r.examined;
      total.platypuses += r.platypuses;
      total.skipped += r.skipped;
      total.violations.insert(total.violations.end(), r.violations.begin(), r.violations.end());
    }
  }
  json j;
  j["examined"] = total.examined;
  j["platypuses"] = total.platypuses;
  j["skipped_not_platypus"] = total.skipped;
  j["violations"] = json::array();
  for (const auto& v : total.violations)
    j["violations"].push_back(
        {{"canonical", v.canonical}, {"rule", v.rule}, {"detail", v.detail}});
  out << j.dump(2) << '\n';
  if (!opt.manifest.empty()) {
    json m = j;
    m["command_line"] = args;
    m["version"] = PLATYKIT_VERSION;
    m["input_digest"] = hex64(digest);
    write_json_file(opt.manifest, m);
  }
  if (bad) return kParse;
  return total.violations.empty() ? kOk : kViolation;
}

Graph graph_arg(const std::string& s, std::istream& in) {
  if (s != "-") return decode_graph6(trim(s));
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (!line.empty()) return decode_graph6(line);
  }
  throw Graph6Error("no graph on standard input");
}

Graph construct(const std::string& family, const std::vector<std::string>& p, std::istream& in) {
  auto need = [&](std::size_t k) {
    if (p.size() != k)
      throw UsageError(family + " takes " + std::to_string(k) + " parameter(s)");
  };
  auto order = [&](const std::string& s) {
    const int n = to_int(s, "order");
    if (n < 1 || n > Graph::kMaxOrder) throw UsageError("order out of range");
    return n;
  };
  if (family == "gp" || family == "pp") {
    need(2);
    const int n = to_int(p[0], "n");
    const int k = to_int(p[1], "k");
    if (n > Graph::kMaxOrder) throw UsageError("n out of range");
    return family == "gp" ? generalized_petersen(n, k) : petersen_prism(n, k);
  }
  if (family == "cycle") {
    need(1);
    const int n = order(p[0]);
    if (n < 3) throw UsageError("a cycle needs at least 3 vertices");
    return cycle_graph(n);
  }
  if (family == "complete") {
    need(1);
    return complete_graph(order(p[0]));
  }
  if (family == "path") {
    need(1);
    return path_graph(order(p[0]));
  }
  if (family == "dotted-cycle") {
    need(1);
    const int n = order(p[0]);
    if (n < 3) throw UsageError("a cycle needs at least 3 vertices");
    return dotted_prism(cycle_graph(n));
  }
  if (family == "dotted") {
    need(1);
    return dotted_prism(graph_arg(p[0], in));
  }
  if (family == "fixture") {
    need(1);
    return fixture(p[0]);
  }
  if (family == "tietze-chain") {
    need(1);
    const int k = to_int(p[0], "k");
    if (k < 0) throw UsageError("k must be non-negative");
    Graph g = fixture(FixtureId::tietze);
    for (int i = 0; i < k; ++i) g = apply_triangle_T(g, *find_triangle(g));
    return g;
  }
  if (family == "triangle-t") {
    need(1);
    Graph g = graph_arg(p[0], in);
    const auto t = find_triangle(g);
    if (!t) throw UsageError("graph has no triangle");
    return apply_triangle_T(g, *t);
  }
  if (family == "expand") {
    need(2);
    return expand_vertex_to_triangle(graph_arg(p[0], in), to_int(p[1], "vertex"));
  }
  if (family == "d-operation") {
    need(1);
    return d_operation(graph_arg(p[0], in));
  }
  throw UsageError("unknown family '" + family + "'");
}

json check_report(const Graph& g) {
  json j;
  const auto cf = canonical_form(g);
  j["graph6"] = encode_graph6(g);
  j["canonical"] = cf.graph6;
  j["order"] = g.order();
  j["size"] = g.size();
  j["aut_order"] = cf.aut_order.to_string();
  const bool cubic = g.min_degree() == 3 && g.max_degree() == 3;
  json inv;
  inv["girth"] = girth_json(girth(g));
  inv["min_degree"] = g.min_degree();
  inv["max_degree"] = g.max_degree();
  inv["vertex_connectivity"] = g.order() >= 2 ? vertex_connectivity(g) : 0;
  inv["planar"] = is_planar(g);
  inv["cubic"] = cubic;
  j["invariants"] = inv;
  if (g.order() >= 3) {
    const auto cyc = find_hamiltonian_cycle(g);
    j["hamiltonian"] = {{"verdict", cyc.has_value()}};
    if (cyc) j["hamiltonian"]["witness"] = cyc->vertices;
  } else {
    j["hamiltonian"] = {{"verdict", false}};
  }
  j["traceable"] = is_traceable(g);
  j["platypus"] = report_json(is_platypus(g));
  j["hypohamiltonian"] = report_json(is_hypohamiltonian(g));
  j["hypotraceable"] = report_json(is_hypotraceable(g));
  if (g.order() >= 2) j["homogeneously_traceable"] = report_json(is_homogeneously_traceable(g));
  j["maximally_non_hamiltonian"] = report_json(is_maximally_non_hamiltonian(g));
  j["mnh_max_degree_audit"] = report_json(lemma2_audit(g));
  const auto snark = is_snark(g);
  j["snark"] = {{"verdict", snark.verdict}};
  if (!snark.verdict) j["snark"]["failing_clause"] = snark.reason;
  return j;
}

struct CensusOptions {
  int order = 0;
  int girth = 3;
  int jobs = 1;
  int split_depth = -1;
  bool no_prunes = false;
  std::string output;
  std::string manifest;
};

int cmd_census(const CensusOptions& o, const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  GenSpec spec;
  spec.order = o.order;
  spec.min_girth = o.girth;
  spec.jobs = o.jobs;
  spec.split_depth = o.split_depth;
  if (o.no_prunes) spec.prunes = Prunes{false, false, false};
  if (o.order < 1 || o.order > Graph::kNarrowOrder) throw UsageError("order must be 1..64");
  if (o.girth < 3) throw UsageError("girth bound must be at least 3");
  if (!census_within_guard(o.order, o.girth)) {
    if (!guard_override_from_env()) {
      err << "census of order " << o.order << " with girth >= " << o.girth
          << " exceeds the resource guard; set PLATYKIT_GUARD_OVERRIDE=1 to run it anyway\n";
      return kGuard;
    }
    err << "warning: resource guard overridden\n";
    spec.override_guard = true;
  }
  const auto res = generate_platypuses(spec);
  const std::string stem =
      "census_n" + std::to_string(o.order) + "_g" + std::to_string(o.girth);
  const std::string g6_path = o.output.empty() ? stem + ".g6" : o.output;
  const std::string manifest_path = o.manifest.empty() ? g6_path + ".json" : o.manifest;
  {
    std::ofstream f(g6_path);
    if (!f) throw UsageError("cannot write " + g6_path);
    for (const auto& s : res.canonical_list) f << s << '\n';
  }
  std::uint64_t digest = fnv1a64("");
  for (const auto& s : res.canonical_list) digest = fnv1a64(s + "\n", digest);
  json m;
  m["order"] = o.order;
  m["min_girth"] = o.girth;
  m["count"] = res.count;
  m["prune_stats"] = {{"nodes", res.stats.nodes},
                      {"canonical_calls", res.stats.canonical_calls},
                      {"hamiltonian", res.stats.pruned_hamiltonian},
                      {"girth", res.stats.pruned_girth},
                      {"degree", res.stats.pruned_degree},
                      {"candidates_checked", res.stats.candidates_checked},
                      {"prunes_enabled", !o.no_prunes}};
  m["wall_seconds"] = res.stats.wall_seconds;
  m["graph6_file"] = g6_path;
  m["graph6_digest"] = hex64(digest);
  m["command_line"] = args;
  m["version"] = PLATYKIT_VERSION;
  write_json_file(manifest_path, m);
  out << res.count << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Platypus graph toolkit", "platykit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", PLATYKIT_VERSION);

  std::string family;
  std::vector<std::string> params;
  auto* construct_cmd = app.add_subcommand("construct", "Print a constructed graph as graph6");
  construct_cmd->add_option("family", family,
                             "gp, pp, cycle, complete, path, dotted-cycle, dotted, fixture, "
                             "tietze-chain, triangle-t, expand, d-operation")
      ->required();
  construct_cmd->add_option("params", params, "Family parameters");

  FilterSpec fspec;
  StreamOptions sopt;
  auto* filter_cmd = app.add_subcommand("filter", "Keep graph6 lines satisfying every predicate");
  filter_cmd->add_flag("--platypus", fspec.platypus);
  filter_cmd->add_flag("--hypohamiltonian", fspec.hypohamiltonian);
  filter_cmd->add_flag("--snark", fspec.snark);
  filter_cmd->add_flag("--planar", fspec.planar);
  filter_cmd->add_flag("--cubic", fspec.cubic);
  filter_cmd->add_option("--connectivity", fspec.connectivity, "Minimum vertex connectivity")
      ->check(CLI::NonNegativeNumber);
  filter_cmd->add_option("--girth-min", fspec.girth_min, "Minimum girth")
      ->check(CLI::PositiveNumber);

  auto add_stream_options = [&](CLI::App* c) {
    c->add_option("input", sopt.input, "graph6 file, - for standard input");
    c->add_option("--jobs", sopt.jobs)->check(CLI::PositiveNumber);
    c->add_option("--manifest", sopt.manifest, "Write a JSON manifest");
    c->add_flag("--strict", sopt.strict, "Abort on the first malformed line");
  };
  add_stream_options(filter_cmd);

  CensusOptions copt;
  auto* census_cmd = app.add_subcommand("census", "Enumerate platypuses of one order");
  census_cmd->add_option("order", copt.order)->required();
  census_cmd->add_option("--girth,--girth-min", copt.girth, "Lower bound on the girth");
  census_cmd->add_option("--jobs", copt.jobs)->check(CLI::PositiveNumber);
  census_cmd->add_option("--split-depth", copt.split_depth);
  census_cmd->add_option("--output", copt.output, "graph6 output file");
  census_cmd->add_option("--manifest", copt.manifest, "JSON manifest path");
  census_cmd->add_flag("--no-prunes", copt.no_prunes, "Disable subtree prunes");

  std::string graph_text;
  auto* check_cmd = app.add_subcommand("check", "Detailed JSON report for one graph");
  check_cmd->add_option("graph", graph_text, "graph6 string, - for standard input")->required();

  auto* canon_cmd = app.add_subcommand("canon", "Canonical graph6 for each input line");
  add_stream_options(canon_cmd);

  std::string first, second;
  auto* iso_cmd = app.add_subcommand("isomorphic", "Test two graph6 strings for isomorphism");
  iso_cmd->add_option("first", first)->required();
  iso_cmd->add_option("second", second)->required();

  auto* audit_cmd = app.add_subcommand("audit", "Structural audits over a graph6 stream");
  add_stream_options(audit_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*construct_cmd) {
      out << encode_graph6(construct(family, params, in)) << '\n';
      return kOk;
    }
    if (*filter_cmd) return cmd_filter(fspec, sopt, args, in, out, err);
    if (*census_cmd) return cmd_census(copt, args, out, err);
    if (*check_cmd) {
      out << check_report(graph_arg(graph_text, in)).dump(2) << '\n';
      return kOk;
    }
    if (*canon_cmd) return cmd_canon(sopt, in, out, err);
    if (*iso_cmd) {
      out << (are_isomorphic(graph_arg(first, in), graph_arg(second, in)) ? "true" : "false")
          << '\n';
      return kOk;
    }
    if (*audit_cmd) return cmd_audit(sopt, args, in, out, err);
  } catch (const Graph6Error& e) {
    err << "graph6: " << e.what() << '\n';
    return kParse;
  } catch (const GuardError& e) {
    err << e.what() << '\n';
    return kGuard;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace platykit::cli
