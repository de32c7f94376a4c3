#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "platykit/graph.hpp"

namespace platykit {

/// Arbitrary-precision unsigned integer, just large enough for group orders
/// (|Aut| of a 256-vertex graph can exceed 2^128).
class GroupOrder {
 public:
  GroupOrder() = default;
  explicit GroupOrder(std::uint64_t v);

  GroupOrder& operator*=(std::uint32_t k);
  std::string to_string() const;
  /// Value if it fits in 64 bits.
  std::optional<std::uint64_t> to_u64() const;

  friend bool operator==(const GroupOrder&, const GroupOrder&) = default;

 private:
  std::vector<std::uint32_t> limbs_{1};  // little endian, base 2^32
};

struct CanonicalForm {
  std::string graph6;           // graph6 of the canonically relabelled graph
  std::vector<int> relabeling;  // input vertex -> canonical position
  GroupOrder aut_order;
};

CanonicalForm canonical_form(const Graph& g);
/// Canonical graph6 string only.
std::string canonical_string(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);
GroupOrder automorphism_group_order(const Graph& g);

}  // namespace platykit
