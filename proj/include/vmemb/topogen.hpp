#pragma once

#include <cstdint>

#include "vmemb/topology.hpp"

namespace vmemb {

/// Three-tier datacenter shape: servers under top-of-rack switches,
/// racks under aggregation switches, aggregation switches under one core
/// switch below the gateway.
struct ThreeTierShape {
  int servers_per_rack = 20;
  int racks_per_as = 10;
  int as_count = 5;
};

/// Deterministic three-tier tree. Tier capacities: 10 Gbps server links,
/// 40 Gbps rack uplinks, 100 Gbps aggregation uplinks; the gateway-core
/// edge is UNBOUNDED. Every server has one VM slot.
Topology gen_three_tier(const ThreeTierShape& shape);

/// Three-tier tree with exactly `servers` servers; the last rack and
/// aggregation switch may be partially filled.
Topology gen_three_tier_with_servers(int servers, int servers_per_rack = 20, int racks_per_as = 10);

/// Rescales every finite edge capacity to a residual drawn uniformly
/// from (0, c]: draws are u/10^6 with u uniform on {0..10^6}, redrawn
/// while u <= 1000 so validation never sees a (near-)zero capacity.
/// PRNG: mt19937_64 seeded with `seed`, rejection-sampled bounded draws;
/// output is bit-reproducible. Edges are processed in node index order.
Topology apply_residuals(const Topology& t, std::uint64_t seed);

}  // namespace vmemb
