#pragma once

#include <random>
#include <string>
#include <vector>

#include "vmemb/embedding.hpp"
#include "vmemb/request.hpp"
#include "vmemb/rng.hpp"
#include "vmemb/topology.hpp"

namespace vmemb::test {

inline NetworkNode node(std::string id, int parent, const std::string& capacity, int slots = 0) {
  NetworkNode n;
  n.id = std::move(id);
  n.parent = parent;
  if (parent != -1) n.parent_capacity = Capacity::parse(capacity);
  n.vm_slots = slots;
  return n;
}

/// g -> s -> leaf chain with the given capacities and one slot.
inline Topology chain3(const std::string& cap_mid, const std::string& cap_leaf) {
  return Topology({node("g", -1, ""), node("s", 0, cap_mid), node("leaf", 1, cap_leaf, 1)});
}

/// Random tree: node 0 is the root, every other node picks an earlier
/// parent with capacity in (0, 40] (one decimal digit); leaves carry
/// 1..max_slots slots.
inline Topology random_tree(std::mt19937_64& rng, int n, int max_children = 15,
                            int max_slots = 2) {
  std::vector<NetworkNode> nodes;
  std::vector<int> child_count(n, 0);
  nodes.push_back(node("n0", -1, ""));
  for (int i = 1; i < n; ++i) {
    int parent;
    do {
      parent = static_cast<int>(uniform_u64(rng, i));
    } while (child_count[parent] >= max_children);
    ++child_count[parent];
    nodes.push_back(node("n" + std::to_string(i), parent,
                         Rational(uniform_int(rng, 1, 400), 10).str()));
  }
  Topology draft(std::move(nodes));
  std::vector<NetworkNode> final_nodes = draft.nodes();
  for (int i = 0; i < n; ++i) {
    if (draft.is_leaf(i)) {
      final_nodes[i].vm_slots = static_cast<int>(uniform_int(rng, 1, max_slots));
    }
  }
  return Topology(std::move(final_nodes));
}

/// Random request with k VMs: sometimes a connected chatter graph with an
/// uplink, sometimes chatter-only, sometimes edge-free.
inline RequestGraph random_request(std::mt19937_64& rng, int k) {
  RequestGraph r;
  for (int i = 1; i <= k; ++i) r.vms.push_back("v" + std::to_string(i));
  auto bw = [&rng] { return Rational(uniform_int(rng, 1, 300), 100); };
  const int style = static_cast<int>(uniform_u64(rng, 4));
  if (style == 0) return r;  // no edges at all
  for (int i = 1; i < k; ++i) {
    if (style == 3 && uniform_u64(rng, 3) == 0) continue;  // sparse, maybe disconnected
    r.chatter.push_back({static_cast<int>(uniform_u64(rng, i)), i, bw()});
  }
  if (style != 2) {
    for (int i = 0; i < k; ++i) {
      if (uniform_u64(rng, 2) == 0) r.uplinks.push_back({i, bw()});
    }
  }
  return r;
}

/// Independent congestion oracle: per tree edge, the load is the total
/// request bandwidth with exactly one embedded endpoint inside the
/// subtree below the edge (the gateway counts as outside).
inline Rational cut_based_congestion(const Topology& t, const RequestGraph& r,
                                     const Embedding& e) {
  std::vector<int> target(r.k());
  for (int i = 0; i < r.k(); ++i) target[i] = t.require(e.vm_to_leaf[i]);

  Rational worst = 0;
  for (int u = 0; u < t.size(); ++u) {
    if (u == t.root()) continue;
    // Membership of every node in the subtree rooted at u.
    std::vector<bool> inside(t.size(), false);
    inside[u] = true;
    std::vector<int> stack = {u};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int c : t.children(v)) {
        inside[c] = true;
        stack.push_back(c);
      }
    }
    Rational load = 0;
    for (const RequestGraph::Uplink& up : r.uplinks) {
      if (inside[target[up.vm]]) load += up.bw;
    }
    for (const RequestGraph::Chatter& c : r.chatter) {
      if (inside[target[c.a]] != inside[target[c.b]]) load += c.bw;
    }
    Rational cong = t.node(u).parent_capacity.congestion_of(load);
    if (worst < cong) worst = cong;
  }
  return worst;
}

}  // namespace vmemb::test
