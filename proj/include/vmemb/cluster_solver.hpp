#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vmemb/embedding.hpp"
#include "vmemb/request.hpp"
#include "vmemb/topology.hpp"

namespace vmemb {

/// Uniform virtual-cluster request: k VMs behind a virtual switch with
/// per-VM bandwidth B. Semantics: the clique on k VMs with bandwidth
/// B/(k-1) on every edge and no uplinks.
struct ClusterRequest {
  int k = 0;
  Rational per_vm_bw;  // B
};

struct LeafCount {
  std::string leaf;
  int count;
};

struct ClusterResult {
  Rational congestion;
  std::vector<LeafCount> counts;  // leaves in topology order, zero counts omitted
};

/// Bandwidth crossing the subtree edge when i of the k VMs sit inside:
/// i*(k-i)*B/(k-1); identically 0 for k == 1.
Rational cluster_cut_flow(int i, int k, const Rational& per_vm_bw);

/// Count-indexed variant of the subset DP: cong[u, z] for z = 0..k in
/// O(n k^2). Equals solve() on clique_request(c) exactly.
std::optional<ClusterResult> cluster_solve(const BinaryTopology& t, const ClusterRequest& c);

/// The explicit request graph the cluster semantics stand for; VM ids are
/// "v1".."vk".
RequestGraph clique_request(const ClusterRequest& c);

/// Labels counted slots with VMs v1..vk in the order the counts are
/// given. Throws when counts exceed slots or do not sum to k.
Embedding expand_counts(const Topology& t, const std::vector<LeafCount>& counts, int k);

}  // namespace vmemb
