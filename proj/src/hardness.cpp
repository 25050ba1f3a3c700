#include "vmemb/hardness.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace vmemb {
namespace {

using i128 = __int128;

std::string item_list(const std::vector<long long>& items) {
  std::string s;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(items[i]);
  }
  return s;
}

// Interval order for building the path/chain: when a partition is known,
// interleave the groups round-robin so that the members of any group are
// pairwise non-adjacent; that makes the certificate saturate a capacity-6
// root edge exactly. Otherwise keep the given order.
std::vector<int> interval_order(const ThreePartitionInstance& tp) {
  std::vector<int> order;
  order.reserve(tp.items.size());
  if (tp.known_partition.has_value()) {
    for (int r = 0; r < 3; ++r) {
      for (int g = 0; g < tp.m; ++g) order.push_back((*tp.known_partition)[g][r]);
    }
  } else {
    order.resize(tp.items.size());
    std::iota(order.begin(), order.end(), 0);
  }
  return order;
}

void require_bounds(const ThreePartitionInstance& tp, bool allow_unconstrained) {
  if (!allow_unconstrained && !satisfies_size_bounds(tp)) {
    throw std::invalid_argument("items {" + item_list(tp.items) +
                                "} violate the size bounds B/4 < s_i < B/2 for B=" +
                                std::to_string(tp.target));
  }
}

}  // namespace

void validate_three_partition(const ThreePartitionInstance& tp) {
  if (tp.m < 1) throw std::invalid_argument("3-partition instance needs m >= 1");
  if (static_cast<int>(tp.items.size()) != 3 * tp.m) {
    throw std::invalid_argument("expected " + std::to_string(3 * tp.m) + " items, got " +
                                std::to_string(tp.items.size()));
  }
  i128 total = 0;
  for (long long s : tp.items) {
    if (s <= 0) throw std::invalid_argument("items must be positive integers");
    total += s;
  }
  if (total != static_cast<i128>(tp.m) * tp.target) {
    throw std::invalid_argument("items {" + item_list(tp.items) + "} do not sum to m*B = " +
                                std::to_string(tp.m * tp.target));
  }
  if (tp.known_partition.has_value()) {
    const auto& groups = *tp.known_partition;
    if (static_cast<int>(groups.size()) != tp.m) {
      throw std::invalid_argument("known partition must have m triples");
    }
    std::vector<bool> used(tp.items.size(), false);
    for (const std::array<int, 3>& g : groups) {
      long long sum = 0;
      for (int idx : g) {
        if (idx < 0 || idx >= static_cast<int>(tp.items.size()) || used[idx]) {
          throw std::invalid_argument("known partition reuses or misses an item index");
        }
        used[idx] = true;
        sum += tp.items[idx];
      }
      if (sum != tp.target) {
        throw std::invalid_argument("known partition triple does not sum to B");
      }
    }
  }
}

bool satisfies_size_bounds(const ThreePartitionInstance& tp) {
  for (long long s : tp.items) {
    if (!(4 * s > tp.target && 2 * s < tp.target)) return false;
  }
  return true;
}

bool find_three_partition(const ThreePartitionInstance& tp, std::vector<std::array<int, 3>>* out) {
  validate_three_partition(tp);
  const int n = static_cast<int>(tp.items.size());
  std::vector<long long> sum(tp.m, 0);
  std::vector<int> count(tp.m, 0);
  std::vector<int> group_of(n, -1);

  auto search = [&](auto&& self, int item) -> bool {
    if (item == n) return true;  // counts force every group to exactly 3
    for (int g = 0; g < tp.m; ++g) {
      if (count[g] == 3 || sum[g] + tp.items[item] > tp.target) {
        if (count[g] == 0) break;  // later empty groups are symmetric
        continue;
      }
      sum[g] += tp.items[item];
      ++count[g];
      group_of[item] = g;
      if (self(self, item + 1)) return true;
      sum[g] -= tp.items[item];
      --count[g];
      group_of[item] = -1;
      if (count[g] == 0) break;
    }
    return false;
  };

  if (!search(search, 0)) return false;
  if (out != nullptr) {
    std::vector<std::array<int, 3>> groups(tp.m, {-1, -1, -1});
    std::vector<int> fill(tp.m, 0);
    for (int i = 0; i < n; ++i) groups[group_of[i]][fill[group_of[i]]++] = i;
    *out = std::move(groups);
  }
  return true;
}

bool has_balanced_partition(const std::vector<long long>& items, int m, long long target) {
  const int n = static_cast<int>(items.size());
  i128 total = 0;
  for (long long s : items) total += s;
  if (total != static_cast<i128>(m) * target) return false;

  std::vector<long long> sum(m, 0);
  auto search = [&](auto&& self, int item) -> bool {
    if (item == n) {
      for (long long s : sum) {
        if (s != target) return false;
      }
      return true;
    }
    for (int g = 0; g < m; ++g) {
      if (sum[g] + items[item] > target) {
        if (sum[g] == 0) break;
        continue;
      }
      bool was_empty = sum[g] == 0;
      sum[g] += items[item];
      if (self(self, item + 1)) return true;
      sum[g] -= items[item];
      if (was_empty) break;  // later empty groups are symmetric
    }
    return false;
  };
  return search(search, 0);
}

HardInstance gen_weighted_path(const ThreePartitionInstance& tp, const WeightedPathOptions& options) {
  validate_three_partition(tp);
  require_bounds(tp, options.allow_unconstrained);
  const long long W = options.heavy_weight;
  if (W <= 6) throw std::invalid_argument("heavy weight W must exceed 6");

  const std::vector<int> order = interval_order(tp);
  const long long B = tp.target;
  const long long vm_count = static_cast<long long>(tp.m) * B;

  // Path request: VMs in interval order; consecutive VMs inside an
  // interval chatter with weight W, across interval borders with 1.
  RequestGraph request;
  request.vms.reserve(vm_count);
  for (long long i = 1; i <= vm_count; ++i) request.vms.push_back("v" + std::to_string(i));

  std::vector<int> interval_of(vm_count);
  {
    long long pos = 0;
    for (size_t p = 0; p < order.size(); ++p) {
      for (long long j = 0; j < tp.items[order[p]]; ++j) interval_of[pos++] = static_cast<int>(p);
    }
  }
  for (long long i = 0; i + 1 < vm_count; ++i) {
    Rational w = interval_of[i] == interval_of[i + 1] ? Rational(W) : Rational(1);
    request.chatter.push_back({static_cast<int>(i), static_cast<int>(i + 1), w});
  }
  request.uplinks.push_back({0, Rational(1)});

  // Leaf capacity: the largest total demand incident to a single VM. With
  // one slot per leaf the load on a leaf edge equals its VM's incident
  // demand no matter where the VMs go, so the leaf tier contributes
  // congestion exactly 1 and the yes/no gap lives on the capacity-6 tier.
  Rational max_incident = 0;
  {
    std::vector<Rational> incident(vm_count);
    for (const RequestGraph::Chatter& c : request.chatter) {
      incident[c.a] += c.bw;
      incident[c.b] += c.bw;
    }
    for (const RequestGraph::Uplink& u : request.uplinks) incident[u.vm] += u.bw;
    for (const Rational& inc : incident) {
      if (max_incident < inc) max_incident = inc;
    }
  }

  std::vector<NetworkNode> nodes;
  nodes.push_back({.id = "g", .parent = -1});
  for (int i = 1; i <= tp.m; ++i) {
    nodes.push_back({.id = "S" + std::to_string(i),
                     .parent = 0,
                     .parent_capacity = Capacity::finite(Rational(6))});
    int inner = static_cast<int>(nodes.size()) - 1;
    for (long long j = 1; j <= B; ++j) {
      nodes.push_back({.id = "S" + std::to_string(i) + "_leaf" + std::to_string(j),
                       .parent = inner,
                       .parent_capacity = Capacity::finite(max_incident),
                       .vm_slots = 1});
    }
  }

  HardInstance out;
  out.topology = Topology(std::move(nodes));
  out.request = std::move(request);
  out.gap_bound = Rational(W, 6);

  if (tp.known_partition.has_value()) {
    // Group g owns path positions {g, m+g, 2m+g}; its VMs fill the leaves
    // of S_{g+1} in path order.
    Embedding cert;
    cert.vm_to_leaf.resize(vm_count);
    std::vector<long long> start(order.size() + 1, 0);
    for (size_t p = 0; p < order.size(); ++p) start[p + 1] = start[p] + tp.items[order[p]];
    for (int g = 0; g < tp.m; ++g) {
      long long leaf = 1;
      for (int r = 0; r < 3; ++r) {
        int p = r * tp.m + g;
        for (long long v = start[p]; v < start[p + 1]; ++v) {
          cert.vm_to_leaf[v] = "S" + std::to_string(g + 1) + "_leaf" + std::to_string(leaf++);
        }
      }
    }
    out.certificate = std::move(cert);
  }
  return out;
}

HardInstance gen_unweighted_tree(const ThreePartitionInstance& tp,
                                 const UnweightedTreeOptions& options) {
  validate_three_partition(tp);
  require_bounds(tp, options.allow_unconstrained);
  if (tp.m < 2) {
    throw std::invalid_argument("unweighted tree construction needs m >= 2");
  }
  if (!(Rational(0) < options.epsilon && options.epsilon < Rational(1))) {
    throw std::invalid_argument("epsilon must lie strictly between 0 and 1");
  }

  // M = (5mB)^ceil((1-eps)/eps), the star blow-up factor.
  const Rational ratio = (Rational(1) - options.epsilon) / options.epsilon;
  const long long exponent = (ratio.num() + ratio.den() - 1) / ratio.den();
  const i128 base = static_cast<i128>(5) * tp.m * tp.target;
  i128 grown = 1;
  for (long long e = 0; e < exponent; ++e) {
    grown *= base;
    if (grown > options.max_nodes) break;
  }
  const i128 node_count = 1 + tp.m + static_cast<i128>(tp.m) * (3 + tp.target * grown);
  if (node_count > options.max_nodes) {
    throw std::invalid_argument("instance size cap exceeded: the topology would need more than " +
                                std::to_string(options.max_nodes) + " nodes");
  }
  const long long M = static_cast<long long>(grown);
  const long long B = tp.target;

  const std::vector<int> order = interval_order(tp);
  const int centers = 3 * tp.m;
  const long long children_total = static_cast<long long>(tp.m) * B * M;

  RequestGraph request;
  request.vms.reserve(centers + children_total);
  for (int i = 1; i <= centers; ++i) request.vms.push_back("c" + std::to_string(i));
  for (long long i = 1; i <= children_total; ++i) request.vms.push_back("x" + std::to_string(i));

  // Star sizes follow the (possibly interleaved) interval order; the
  // chain connects consecutive centers and the two chain ends uplink.
  std::vector<long long> star_first(centers + 1, 0);  // first child index per star, relative
  for (int p = 0; p < centers; ++p) star_first[p + 1] = star_first[p] + tp.items[order[p]] * M;
  for (int p = 0; p + 1 < centers; ++p) {
    request.chatter.push_back({p, p + 1, Rational(1)});
  }
  for (int p = 0; p < centers; ++p) {
    for (long long j = star_first[p]; j < star_first[p + 1]; ++j) {
      request.chatter.push_back({p, static_cast<int>(centers + j), Rational(1)});
    }
  }
  request.uplinks.push_back({0, Rational(1)});
  request.uplinks.push_back({centers - 1, Rational(1)});

  const long long leaves_per_inner = 3 + B * M;
  std::vector<NetworkNode> nodes;
  nodes.push_back({.id = "g", .parent = -1});
  for (int i = 1; i <= tp.m; ++i) {
    nodes.push_back({.id = "S" + std::to_string(i),
                     .parent = 0,
                     .parent_capacity = Capacity::finite(Rational(6))});
    int inner = static_cast<int>(nodes.size()) - 1;
    for (long long j = 1; j <= leaves_per_inner; ++j) {
      nodes.push_back({.id = "S" + std::to_string(i) + "_leaf" + std::to_string(j),
                       .parent = inner,
                       .parent_capacity = Capacity::finite(Rational(B * M + 2)),
                       .vm_slots = 1});
    }
  }

  HardInstance out;
  out.topology = Topology(std::move(nodes));
  out.request = std::move(request);
  out.gap_bound = Rational(M, 6);

  if (tp.known_partition.has_value()) {
    Embedding cert;
    cert.vm_to_leaf.resize(centers + children_total);
    for (int g = 0; g < tp.m; ++g) {
      const std::string stem = "S" + std::to_string(g + 1) + "_leaf";
      long long leaf = 1;
      for (int r = 0; r < 3; ++r) {
        int p = r * tp.m + g;
        cert.vm_to_leaf[p] = stem + std::to_string(leaf++);
        for (long long j = star_first[p]; j < star_first[p + 1]; ++j) {
          cert.vm_to_leaf[centers + j] = stem + std::to_string(leaf++);
        }
      }
    }
    out.certificate = std::move(cert);
  }
  return out;
}

}  // namespace vmemb
