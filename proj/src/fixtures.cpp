#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "platykit/digest.hpp"
#include "platykit/graph.hpp"

namespace platykit::detail {

extern const char* const kFixtureText;

// Blocks of "name n m" followed by m lines "u v"; a leading "# fnv1a64 <hex>"
// line covers every other line.
std::vector<std::pair<std::string, Graph>> load_fixtures() {
  std::istringstream in(kFixtureText);
  std::string line, body;
  std::uint64_t expected = 0;
  bool have_sum = false;
  while (std::getline(in, line)) {
    if (line.rfind("# fnv1a64 ", 0) == 0) {
      expected = std::stoull(line.substr(10), nullptr, 16);
      have_sum = true;
    } else if (!line.empty()) {
      body += line + '\n';
    }
  }
  if (!have_sum || fnv1a64(body) != expected)
    throw std::logic_error("fixture data checksum mismatch");

  std::vector<std::pair<std::string, Graph>> out;
  std::istringstream blocks(body);
  std::string name;
  int n = 0, m = 0;
  while (blocks >> name >> n >> m) {
    std::vector<Edge> edges(m);
    for (Edge& e : edges)
      if (!(blocks >> e.u >> e.v)) throw std::logic_error("truncated fixture " + name);
    out.emplace_back(name, Graph::from_edge_list(n, edges));
  }
  return out;
}

}  // namespace platykit::detail
