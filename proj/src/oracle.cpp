#include "vmemb/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "tree_util.hpp"

namespace vmemb {

std::optional<SolveResult> linear_scan(const Topology& t, const RequestGraph& r,
                                       const OracleLimits& limits) {
  validate_request(r);
  std::vector<int> leaves = t.leaves();
  std::sort(leaves.begin(), leaves.end(),
            [&](int a, int b) { return t.node(a).id < t.node(b).id; });
  if (static_cast<int>(leaves.size()) > limits.max_leaves) {
    throw std::invalid_argument("oracle guard: " + std::to_string(leaves.size()) +
                                " leaves exceed the limit of " + std::to_string(limits.max_leaves));
  }
  if (r.k() > limits.max_k) {
    throw std::invalid_argument("oracle guard: k=" + std::to_string(r.k()) +
                                " exceeds the limit of " + std::to_string(limits.max_k));
  }

  const std::vector<int> depth = detail::node_depths(t);
  std::vector<int> free_slots(leaves.size());
  for (size_t i = 0; i < leaves.size(); ++i) free_slots[i] = t.node(leaves[i]).vm_slots;

  std::vector<int> target(r.k(), -1);
  bool found = false;
  Rational best;
  std::vector<int> best_target;

  auto place = [&](auto&& self, int vm) -> void {
    if (vm == r.k()) {
      Rational cong = detail::evaluate_on_indices(t, r, target, depth);
      if (!found || cong < best) {
        found = true;
        best = cong;
        best_target = target;
      }
      return;
    }
    for (size_t i = 0; i < leaves.size(); ++i) {
      if (free_slots[i] == 0) continue;
      --free_slots[i];
      target[vm] = leaves[i];
      self(self, vm + 1);
      ++free_slots[i];
    }
  };
  place(place, 0);

  if (!found) return std::nullopt;
  SolveResult out;
  out.congestion = best;
  out.embedding.vm_to_leaf.resize(r.k());
  for (int i = 0; i < r.k(); ++i) out.embedding.vm_to_leaf[i] = t.node(best_target[i]).id;
  return out;
}

}  // namespace vmemb
