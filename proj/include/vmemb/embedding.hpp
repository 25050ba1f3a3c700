#pragma once

#include <string>
#include <vector>

#include "vmemb/request.hpp"
#include "vmemb/topology.hpp"

namespace vmemb {

/// Assignment of VMs to server leaves, by node id so the same embedding
/// can be evaluated on a topology and on its binary normalization (leaf
/// ids are preserved). The gateway VM is implicitly on the root.
struct Embedding {
  std::vector<std::string> vm_to_leaf;  // index-aligned with RequestGraph::vms
};

/// Max over edges of (total request flow routed through the edge) divided
/// by its capacity; UNBOUNDED edges contribute 0. Throws on unmapped VMs,
/// non-leaf targets, or slot violations.
Rational evaluate(const Topology& t, const RequestGraph& r, const Embedding& e);

namespace detail {
/// Unchecked hot path for enumerators: targets are node indices assumed
/// to respect slots; depth must come from node_depths(t).
Rational evaluate_on_indices(const Topology& t, const RequestGraph& r,
                             const std::vector<int>& target, const std::vector<int>& depth);
}  // namespace detail

}  // namespace vmemb
