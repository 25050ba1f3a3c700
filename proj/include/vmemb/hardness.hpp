#pragma once

#include <array>
#include <optional>
#include <vector>

#include "vmemb/embedding.hpp"
#include "vmemb/request.hpp"
#include "vmemb/topology.hpp"

namespace vmemb {

/// 3-partition input: 3m positive integers summing to m*target. With the
/// size bounds target/4 < s_i < target/2 every equal-sum partition is
/// forced to consist of triples, which is what the reductions rely on.
struct ThreePartitionInstance {
  int m = 0;
  long long target = 0;                                       // B
  std::vector<long long> items;                               // s_1..s_3m
  std::optional<std::vector<std::array<int, 3>>> known_partition;  // m index triples
};

/// Shape checks (|items| == 3m, positivity, total == m*target, and the
/// known partition if present); throws std::invalid_argument.
void validate_three_partition(const ThreePartitionInstance& tp);

/// Whether target/4 < s_i < target/2 holds for every item.
bool satisfies_size_bounds(const ThreePartitionInstance& tp);

/// Exhaustive search for a partition into m triples each summing to
/// target. Deterministic: returns the first partition in item order.
bool find_three_partition(const ThreePartitionInstance& tp,
                          std::vector<std::array<int, 3>>* out = nullptr);

/// Exhaustive search for a partition into m parts of ANY size each
/// summing to target. This absence (not just the absence of a triple
/// partition) is what forces the congestion gap on unconstrained
/// no-instances; under the size bounds the two notions coincide.
bool has_balanced_partition(const std::vector<long long>& items, int m, long long target);

/// Adversarial instance: a topology/request pair whose optimal congestion
/// is exactly 1 when the 3-partition instance is solvable and at least
/// gap_bound when it is not.
struct HardInstance {
  Topology topology;
  RequestGraph request;
  std::optional<Embedding> certificate;  // evaluates to exactly 1 when present
  Rational gap_bound;                    // W/6 resp. M/6
};

struct WeightedPathOptions {
  long long heavy_weight = 100;      // W > 6
  bool allow_unconstrained = false;  // accept items outside the size bounds
};

/// Weighted-path instance over the given 3-partition input: a height-2
/// tree (m inner nodes with capacity-6 uplinks, target leaves each) and a
/// path request of mB VMs split into heavy intervals of weight W joined
/// by weight-1 edges, with one unit uplink on the first VM. Leaf edges
/// get the exact per-VM incident demand as capacity, so every allocation
/// saturates some leaf edge at ratio 1 and the yes/no gap is 1 vs W/6.
HardInstance gen_weighted_path(const ThreePartitionInstance& tp,
                               const WeightedPathOptions& options = {});

struct UnweightedTreeOptions {
  Rational epsilon{1, 2};            // in (0,1); exponent ceil((1-eps)/eps)
  long long max_nodes = 200000;      // cap on topology size (M grows fast)
  bool allow_unconstrained = false;
};

/// Unweighted star-chain instance: M = (5mB)^ceil((1-eps)/eps); stars of
/// s_i*M unit-weight edges whose centers form a chain, embedded into a
/// height-2 tree with capacity-6 uplinks and capacity B*M+2 leaf links.
/// Gap: 1 vs M/6. Requires m >= 2 (the certificate cannot reach exact
/// saturation on a single group).
HardInstance gen_unweighted_tree(const ThreePartitionInstance& tp,
                                 const UnweightedTreeOptions& options = {});

}  // namespace vmemb
