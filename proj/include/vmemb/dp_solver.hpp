#pragma once

#include <optional>
#include <vector>

#include "vmemb/embedding.hpp"
#include "vmemb/request.hpp"
#include "vmemb/topology.hpp"

namespace vmemb {

struct SolveResult {
  Rational congestion;
  Embedding embedding;  // empty when want_embedding is off
};

struct SolveOptions {
  bool want_embedding = true;
};

/// Per-node DP tables, exposed for inspection. cong rows are indexed by
/// VM subset; part rows hold the chosen left-child subset and exist only
/// for nodes with two children.
struct SolveTables {
  std::vector<std::vector<Congestion>> cong;
  std::vector<std::vector<VmSubset>> part;
  std::vector<int> subtree_slots;
};

/// Exact minimum-congestion embedding of the request into the binary
/// tree: bottom-up subset DP over cong[u, S] with split backtracking.
/// Returns nullopt when the VMs do not fit the available slots. Passing
/// `tables` retains every congestion row (memory O(2^k) per node);
/// otherwise rows are released as soon as the parent consumed them.
///
/// Complexity O(3^k * n); requests larger than kSubsetLimit are rejected.
std::optional<SolveResult> solve(const BinaryTopology& t, const RequestGraph& r,
                                 const SolveOptions& options = {}, SolveTables* tables = nullptr);

}  // namespace vmemb
