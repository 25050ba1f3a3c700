#include "vmemb/embedding.hpp"

#include <stdexcept>

#include "tree_util.hpp"

namespace vmemb {

namespace detail {

Rational evaluate_on_indices(const Topology& t, const RequestGraph& r,
                             const std::vector<int>& target, const std::vector<int>& depth) {
  // Edge loads, keyed by child node index.
  std::vector<Rational> load(t.size());
  auto add_path = [&](int a, int b, const Rational& f) {
    while (depth[a] > depth[b]) {
      load[a] += f;
      a = t.node(a).parent;
    }
    while (depth[b] > depth[a]) {
      load[b] += f;
      b = t.node(b).parent;
    }
    while (a != b) {
      load[a] += f;
      load[b] += f;
      a = t.node(a).parent;
      b = t.node(b).parent;
    }
  };

  for (const RequestGraph::Uplink& u : r.uplinks) add_path(target[u.vm], t.root(), u.bw);
  for (const RequestGraph::Chatter& c : r.chatter) add_path(target[c.a], target[c.b], c.bw);

  Rational worst = 0;
  for (int u = 0; u < t.size(); ++u) {
    if (u == t.root() || load[u].is_zero()) continue;
    Rational cong = t.node(u).parent_capacity.congestion_of(load[u]);
    if (worst < cong) worst = cong;
  }
  return worst;
}

}  // namespace detail

Rational evaluate(const Topology& t, const RequestGraph& r, const Embedding& e) {
  validate_request(r);
  if (static_cast<int>(e.vm_to_leaf.size()) != r.k()) {
    throw std::invalid_argument("embedding does not map every VM");
  }

  std::vector<int> target(r.k());
  std::vector<int> load_count(t.size(), 0);
  for (int i = 0; i < r.k(); ++i) {
    if (e.vm_to_leaf[i].empty()) {
      throw std::invalid_argument("VM '" + r.vms[i] + "' is unmapped");
    }
    int u = t.require(e.vm_to_leaf[i]);
    if (!t.is_leaf(u)) {
      throw std::invalid_argument("VM '" + r.vms[i] + "' mapped to non-leaf '" + t.node(u).id + "'");
    }
    target[i] = u;
    if (++load_count[u] > t.node(u).vm_slots) {
      throw std::invalid_argument("slot violation on leaf '" + t.node(u).id + "'");
    }
  }

  return detail::evaluate_on_indices(t, r, target, detail::node_depths(t));
}

}  // namespace vmemb
