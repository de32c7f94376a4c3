#include "platykit/isomorphism.hpp"

#include <algorithm>

#include "canon_engine.hpp"

namespace platykit {

GroupOrder::GroupOrder(std::uint64_t v) : limbs_{} {
  do {
    limbs_.push_back(static_cast<std::uint32_t>(v));
    v >>= 32;
  } while (v);
}

GroupOrder& GroupOrder::operator*=(std::uint32_t k) {
  std::uint64_t carry = 0;
  for (auto& limb : limbs_) {
    const std::uint64_t p = static_cast<std::uint64_t>(limb) * k + carry;
    limb = static_cast<std::uint32_t>(p);
    carry = p >> 32;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
  return *this;
}

std::string GroupOrder::to_string() const {
  std::vector<std::uint32_t> v = limbs_;
  std::string digits;
  auto is_zero = [&] {
    return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
  };
  if (is_zero()) return "0";
  while (!is_zero()) {
    std::uint64_t rem = 0;
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
      const std::uint64_t cur = (rem << 32) | *it;
      *it = static_cast<std::uint32_t>(cur / 10);
      rem = cur % 10;
    }
    digits.push_back(static_cast<char>('0' + rem));
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::optional<std::uint64_t> GroupOrder::to_u64() const {
  if (limbs_.size() > 2) return std::nullopt;
  std::uint64_t v = limbs_[0];
  if (limbs_.size() == 2) v |= static_cast<std::uint64_t>(limbs_[1]) << 32;
  return v;
}

namespace {

template <int W>
CanonicalForm canon_impl(const Graph& g) {
  thread_local detail::Canonizer<W> canon;
  auto rows = g.rows<W>();
  canon.run(rows);
  const auto& lab = canon.canonical_lab();
  CanonicalForm out;
  out.relabeling.resize(g.order());
  for (int p = 0; p < g.order(); ++p) out.relabeling[lab[p]] = p;
  out.graph6 = encode_graph6(g.relabeled(out.relabeling));
  for (int s : canon.orbit_sizes()) out.aut_order *= static_cast<std::uint32_t>(s);
  return out;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.wide()) return canon_impl<4>(g);
  return canon_impl<1>(g);
}

std::string canonical_string(const Graph& g) { return canonical_form(g).graph6; }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  return canonical_string(a) == canonical_string(b);
}

GroupOrder automorphism_group_order(const Graph& g) { return canonical_form(g).aut_order; }

}  // namespace platykit
