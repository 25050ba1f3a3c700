#include "vmemb/cluster_solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "tree_util.hpp"

namespace vmemb {
namespace {

void check_request(const ClusterRequest& c) {
  if (c.k < 1) throw std::invalid_argument("cluster request needs k >= 1");
  if (!(Rational(0) < c.per_vm_bw)) {
    throw std::invalid_argument("cluster request needs per-VM bandwidth B > 0");
  }
}

}  // namespace

Rational cluster_cut_flow(int i, int k, const Rational& per_vm_bw) {
  if (k <= 1) return 0;
  return Rational(static_cast<long long>(i) * (k - i)) * per_vm_bw / Rational(k - 1);
}

RequestGraph clique_request(const ClusterRequest& c) {
  check_request(c);
  RequestGraph r;
  r.vms.reserve(c.k);
  for (int i = 1; i <= c.k; ++i) r.vms.push_back("v" + std::to_string(i));
  if (c.k > 1) {
    Rational per_edge = c.per_vm_bw / Rational(c.k - 1);
    for (int a = 0; a < c.k; ++a) {
      for (int b = a + 1; b < c.k; ++b) r.chatter.push_back({a, b, per_edge});
    }
  }
  return r;
}

std::optional<ClusterResult> cluster_solve(const BinaryTopology& t, const ClusterRequest& c) {
  check_request(c);
  const Topology& tree = t.tree;
  if (tree.root() == -1) throw std::invalid_argument("topology has no root");
  for (int u = 0; u < tree.size(); ++u) {
    if (tree.children(u).size() > 2) {
      throw std::invalid_argument("topology is not binary; run to_binary first");
    }
  }

  const int k = c.k;
  const int n = tree.size();
  std::vector<std::vector<Congestion>> cong(n);
  std::vector<std::vector<int>> part(n);
  std::vector<long long> subtree_slots(n, 0);

  // Per-count congestion of one child edge: cut_flow(z)/cap.
  auto edge_cong = [&](int child, int cap_z) {
    std::vector<Rational> out(k + 1);
    const Capacity& cap = tree.node(child).parent_capacity;
    if (!cap.is_unbounded()) {
      for (int z = 0; z <= cap_z; ++z) out[z] = cap.congestion_of(cluster_cut_flow(z, k, c.per_vm_bw));
    }
    return out;
  };

  for (int u : detail::post_order(tree)) {
    const std::vector<int>& kids = tree.children(u);
    const bool at_root = u == tree.root();
    std::vector<Congestion>& row = cong[u];
    row.assign(k + 1, Congestion::infeasible());

    if (kids.empty()) {
      int slots = tree.is_leaf(u) ? tree.node(u).vm_slots : 0;
      subtree_slots[u] = slots;
      for (int z = 0; z <= std::min<long long>(k, slots); ++z) row[z] = Rational(0);
    } else if (kids.size() == 1) {
      const int child = kids[0];
      subtree_slots[u] = subtree_slots[child];
      const int cap_z = static_cast<int>(std::min<long long>(k, subtree_slots[u]));
      std::vector<Rational> ec = edge_cong(child, cap_z);
      for (int z = at_root ? k : 0; z <= k; ++z) {
        if (z <= cap_z && !cong[child][z].is_infeasible()) {
          row[z] = vmemb::max(cong[child][z], Congestion(ec[z]));
        }
      }
    } else {
      const int left = kids[0];
      const int right = kids[1];
      const long long slots_left = subtree_slots[left];
      const long long slots_right = subtree_slots[right];
      subtree_slots[u] = slots_left + slots_right;
      const int cap_z = static_cast<int>(std::min<long long>(k, subtree_slots[u]));
      std::vector<Rational> ec_left = edge_cong(left, static_cast<int>(std::min<long long>(k, slots_left)));
      std::vector<Rational> ec_right = edge_cong(right, static_cast<int>(std::min<long long>(k, slots_right)));
      part[u].assign(k + 1, 0);

      for (int z = at_root ? k : 0; z <= k; ++z) {
        if (z > cap_z) continue;
        bool found = false;
        Rational best;
        int best_i = 0;
        for (int i = 0; i <= z; ++i) {
          if (i > slots_left || z - i > slots_right) continue;
          const Congestion& cl = cong[left][i];
          const Congestion& cr = cong[right][z - i];
          if (cl.is_infeasible() || cr.is_infeasible()) continue;
          Rational candidate = vmemb::max(vmemb::max(cl.value(), cr.value()),
                                          vmemb::max(ec_left[i], ec_right[z - i]));
          if (!found || candidate < best) {
            found = true;
            best = candidate;
            best_i = i;
          }
        }
        if (found) {
          row[z] = best;
          part[u][z] = best_i;
        }
      }
    }
  }

  const Congestion result = cong[tree.root()][k];
  if (result.is_infeasible()) return std::nullopt;

  // Backtrack the split table into per-leaf counts.
  std::vector<int> leaf_count(n, 0);
  std::vector<std::pair<int, int>> work = {{tree.root(), k}};
  while (!work.empty()) {
    auto [u, z] = work.back();
    work.pop_back();
    if (z == 0) continue;
    const std::vector<int>& kids = tree.children(u);
    if (kids.empty()) {
      leaf_count[u] = z;
    } else if (kids.size() == 1) {
      work.push_back({kids[0], z});
    } else {
      int i = part[u][z];
      work.push_back({kids[0], i});
      work.push_back({kids[1], z - i});
    }
  }

  ClusterResult out;
  out.congestion = result.value();
  for (int u = 0; u < n; ++u) {
    if (leaf_count[u] > 0) out.counts.push_back({tree.node(u).id, leaf_count[u]});
  }
  return out;
}

Embedding expand_counts(const Topology& t, const std::vector<LeafCount>& counts, int k) {
  Embedding e;
  e.vm_to_leaf.reserve(k);
  long long total = 0;
  for (const LeafCount& lc : counts) {
    if (lc.count < 0) throw std::invalid_argument("negative count for leaf '" + lc.leaf + "'");
    int u = t.require(lc.leaf);
    if (!t.is_leaf(u)) throw std::invalid_argument("'" + lc.leaf + "' is not a leaf");
    if (lc.count > t.node(u).vm_slots) {
      throw std::invalid_argument("counts violate slots on leaf '" + lc.leaf + "'");
    }
    total += lc.count;
    for (int i = 0; i < lc.count; ++i) e.vm_to_leaf.push_back(lc.leaf);
  }
  if (total != k) {
    throw std::invalid_argument("counts sum to " + std::to_string(total) + ", expected k=" +
                                std::to_string(k));
  }
  return e;
}

}  // namespace vmemb
