#pragma once

#include <optional>

#include "vmemb/dp_solver.hpp"
#include "vmemb/embedding.hpp"

namespace vmemb {

/// Guard against combinatorial blowup: the scan visits up to
/// leaves^k allocations.
struct OracleLimits {
  int max_leaves = 12;
  int max_k = 5;
};

/// Brute-force ground truth: enumerates every slot-respecting VM-to-leaf
/// allocation (leaves in id order, VMs by index) and evaluates each one
/// on the original, non-binarized tree. Returns nullopt when no
/// allocation fits; throws when the instance exceeds the limits.
std::optional<SolveResult> linear_scan(const Topology& t, const RequestGraph& r,
                                       const OracleLimits& limits = {});

}  // namespace vmemb
