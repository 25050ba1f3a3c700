#include "vmemb/topogen.hpp"

#include <stdexcept>
#include <string>

#include "vmemb/rng.hpp"

namespace vmemb {
namespace {

constexpr long long kServerGbps = 10;
constexpr long long kRackUplinkGbps = 40;
constexpr long long kAsUplinkGbps = 100;

Topology build_three_tier(int as_count, long long servers_total, int servers_per_rack,
                          int racks_per_as) {
  std::vector<NetworkNode> nodes;
  nodes.push_back({.id = "g", .parent = -1});
  nodes.push_back({.id = "cs", .parent = 0, .parent_capacity = Capacity::unbounded()});

  long long remaining = servers_total;
  for (int a = 0; a < as_count && remaining > 0; ++a) {
    nodes.push_back({.id = "as" + std::to_string(a),
                     .parent = 1,
                     .parent_capacity = Capacity::finite(Rational(kAsUplinkGbps))});
    const int as_index = static_cast<int>(nodes.size()) - 1;
    for (int r = 0; r < racks_per_as && remaining > 0; ++r) {
      nodes.push_back({.id = "tor" + std::to_string(a) + "_" + std::to_string(r),
                       .parent = as_index,
                       .parent_capacity = Capacity::finite(Rational(kRackUplinkGbps))});
      const int tor_index = static_cast<int>(nodes.size()) - 1;
      for (int s = 0; s < servers_per_rack && remaining > 0; ++s, --remaining) {
        nodes.push_back({.id = "srv" + std::to_string(a) + "_" + std::to_string(r) + "_" +
                               std::to_string(s),
                         .parent = tor_index,
                         .parent_capacity = Capacity::finite(Rational(kServerGbps)),
                         .vm_slots = 1});
      }
    }
  }
  return Topology(std::move(nodes));
}

}  // namespace

Topology gen_three_tier(const ThreeTierShape& shape) {
  if (shape.servers_per_rack < 1 || shape.racks_per_as < 1 || shape.as_count < 1) {
    throw std::invalid_argument("three-tier shape counts must be >= 1");
  }
  long long servers = static_cast<long long>(shape.servers_per_rack) * shape.racks_per_as *
                      shape.as_count;
  return build_three_tier(shape.as_count, servers, shape.servers_per_rack, shape.racks_per_as);
}

Topology gen_three_tier_with_servers(int servers, int servers_per_rack, int racks_per_as) {
  if (servers < 1 || servers_per_rack < 1 || racks_per_as < 1) {
    throw std::invalid_argument("three-tier shape counts must be >= 1");
  }
  const long long per_as = static_cast<long long>(servers_per_rack) * racks_per_as;
  const int as_count = static_cast<int>((servers + per_as - 1) / per_as);
  return build_three_tier(as_count, servers, servers_per_rack, racks_per_as);
}

Topology apply_residuals(const Topology& t, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<NetworkNode> nodes = t.nodes();
  for (NetworkNode& node : nodes) {
    if (node.parent == -1 || node.parent_capacity.is_unbounded()) continue;
    std::uint64_t u = uniform_u64(rng, 1000001);
    while (u <= 1000) u = uniform_u64(rng, 1000001);
    node.parent_capacity = Capacity::finite(
        node.parent_capacity.value() * Rational(static_cast<long long>(u), 1000000));
  }
  return Topology(std::move(nodes));
}

}  // namespace vmemb
