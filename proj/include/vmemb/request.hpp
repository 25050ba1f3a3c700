#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vmemb/rational.hpp"

namespace vmemb {

/// Hard cap on request size for the subset DP: tables are O(2^k) per tree
/// node, so 24 keeps worst-case memory in the low gigabytes.
inline constexpr int kSubsetLimit = 24;

/// Subset of VM indices as a bitmask; only the low k bits may be set.
using VmSubset = std::uint32_t;

/// Bandwidth-annotated request: k VMs plus the implicit gateway, uplink
/// edges (vm, gateway) and chatter edges (vm, vm).
struct RequestGraph {
  struct Uplink {
    int vm;
    Rational bw;
  };
  struct Chatter {
    int a;  // a < b, indices into vms
    int b;
    Rational bw;
  };

  std::vector<std::string> vms;
  std::vector<Uplink> uplinks;
  std::vector<Chatter> chatter;

  int k() const { return static_cast<int>(vms.size()); }
};

/// Throws std::invalid_argument on any invariant violation: empty VM set,
/// duplicate VM ids, self-loop or duplicate chatter, duplicate uplink,
/// nonpositive bandwidth, out-of-range indices.
void validate_request(const RequestGraph& r);

/// Flow[S] for every VM subset S: total bandwidth crossing the cut
/// between S and the rest of the request graph including the gateway.
class FlowTable {
 public:
  explicit FlowTable(int k) : k_(k), flow_(std::size_t{1} << k) {}

  int k() const { return k_; }
  const Rational& operator[](VmSubset s) const { return flow_[s]; }
  Rational& operator[](VmSubset s) { return flow_[s]; }
  VmSubset full_set() const { return static_cast<VmSubset>((std::uint64_t{1} << k_) - 1); }

 private:
  int k_;
  std::vector<Rational> flow_;
};

/// Builds the table by the defining sum: uplink bandwidth inside S plus
/// chatter bandwidth with exactly one endpoint in S. O(k^2 * 2^k).
/// Throws if r.k() exceeds kSubsetLimit.
FlowTable build_flow_table(const RequestGraph& r);

}  // namespace vmemb
