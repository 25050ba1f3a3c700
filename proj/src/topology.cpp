#include "vmemb/topology.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace vmemb {

Capacity Capacity::parse(std::string_view text) {
  size_t begin = text.find_first_not_of(" \t");
  size_t end = text.find_last_not_of(" \t");
  std::string_view s = begin == std::string_view::npos ? "" : text.substr(begin, end - begin + 1);
  if (s == "unbounded") return unbounded();
  return finite(Rational::parse(s));
}

Topology::Topology(std::vector<NetworkNode> nodes) : nodes_(std::move(nodes)) {
  children_.resize(nodes_.size());
  by_id_.reserve(nodes_.size());
  for (int i = 0; i < size(); ++i) {
    if (!by_id_.emplace(nodes_[i].id, i).second) {
      throw std::invalid_argument("duplicate node id '" + nodes_[i].id + "'");
    }
  }
  for (int i = 0; i < size(); ++i) {
    int p = nodes_[i].parent;
    if (p == -1) {
      if (root_ == -1) root_ = i;  // extra roots reported by validate()
    } else if (p < 0 || p >= size() || p == i) {
      throw std::invalid_argument("node '" + nodes_[i].id + "' has an invalid parent index");
    } else {
      children_[p].push_back(i);
    }
  }
}

std::vector<int> Topology::leaves() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (is_leaf(i)) out.push_back(i);
  }
  return out;
}

int Topology::total_leaf_slots() const {
  int total = 0;
  for (int u : leaves()) total += nodes_[u].vm_slots;
  return total;
}

int Topology::index_of(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  return it == by_id_.end() ? -1 : it->second;
}

int Topology::require(std::string_view id) const {
  int u = index_of(id);
  if (u == -1) throw std::invalid_argument("unknown node id '" + std::string(id) + "'");
  return u;
}

std::vector<std::string> validate_topology(const Topology& t) {
  std::vector<std::string> violations;
  int n = t.size();
  if (n == 0) {
    violations.push_back("topology has no nodes");
    return violations;
  }

  int roots = 0;
  for (const NetworkNode& node : t.nodes()) {
    if (node.parent == -1) ++roots;
  }
  if (roots == 0) violations.push_back("no root: every node has a parent");
  if (roots > 1) violations.push_back("multiple roots: " + std::to_string(roots) + " parentless nodes");

  // Reachability from the root; anything unreached sits on a cycle or
  // under a second root.
  std::vector<bool> reached(n, false);
  if (t.root() != -1) {
    std::vector<int> stack = {t.root()};
    reached[t.root()] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int c : t.children(u)) {
        if (!reached[c]) {
          reached[c] = true;
          stack.push_back(c);
        }
      }
    }
  }
  bool cycle = false;
  bool disconnected = false;
  for (int u = 0; u < n && !(cycle && disconnected); ++u) {
    if (reached[u]) continue;
    // Walk up; if we do not terminate within n steps we are on a cycle.
    int v = u;
    int steps = 0;
    while (v != -1 && steps <= n) {
      v = t.node(v).parent;
      ++steps;
    }
    if (steps > n) {
      cycle = true;
    } else {
      disconnected = true;
    }
  }
  if (cycle) violations.push_back("cycle detected in parent links");
  if (disconnected) violations.push_back("disconnected node(s) not under the root");

  for (int u = 0; u < n; ++u) {
    const NetworkNode& node = t.node(u);
    if (node.parent != -1 && !node.parent_capacity.is_unbounded() &&
        !(Rational(0) < node.parent_capacity.value())) {
      violations.push_back("nonpositive capacity on edge to '" + node.id + "'");
    }
    if (node.vm_slots < 0) {
      violations.push_back("negative vm_slots on '" + node.id + "'");
    }
    if (node.vm_slots > 0 && !t.is_leaf(u)) {
      violations.push_back("vm_slots on internal node '" + node.id + "'");
    }
  }

  bool server_leaf = false;
  for (int u : t.leaves()) {
    if (t.node(u).vm_slots > 0) server_leaf = true;
  }
  if (!server_leaf) violations.push_back("no server leaves");

  return violations;
}

namespace {

// Leaf count of the left subtree of a complete binary tree (last level
// packed left) with d >= 3 leaves.
int complete_left_count(int d) {
  int h = 0;
  while ((1 << h) < d) ++h;
  return std::min(1 << (h - 1), d - (1 << (h - 2)));
}

struct BinaryBuilder {
  std::vector<NetworkNode> nodes;
  std::vector<std::string> expanded_from;
  const Topology* original = nullptr;

  int add_synthetic(int parent, const std::string& origin_id, int& counter) {
    NetworkNode node;
    node.id = origin_id + "#b" + std::to_string(counter++);
    while (original->index_of(node.id) != -1) node.id += "'";
    node.parent = parent;
    node.parent_capacity = Capacity::unbounded();
    node.vm_slots = 0;
    node.synthetic = true;
    nodes.push_back(std::move(node));
    expanded_from.push_back(origin_id);
    return static_cast<int>(nodes.size()) - 1;
  }

  // Attaches the original children in group[lo, hi) below new_parent,
  // inserting synthetic nodes wherever a side holds more than one child.
  void attach(int new_parent, const std::vector<int>& group, int lo, int hi,
              const std::vector<int>& new_index_of, const std::string& origin_id, int& counter) {
    int count = hi - lo;
    if (count == 1) {
      nodes[new_index_of[group[lo]]].parent = new_parent;
      return;
    }
    if (count == 2) {
      nodes[new_index_of[group[lo]]].parent = new_parent;
      nodes[new_index_of[group[lo + 1]]].parent = new_parent;
      return;
    }
    int left = complete_left_count(count);
    for (int side = 0; side < 2; ++side) {
      int a = side == 0 ? lo : lo + left;
      int b = side == 0 ? lo + left : hi;
      if (b - a == 1) {
        nodes[new_index_of[group[a]]].parent = new_parent;
      } else {
        int s = add_synthetic(new_parent, origin_id, counter);
        attach(s, group, a, b, new_index_of, origin_id, counter);
      }
    }
  }
};

}  // namespace

BinaryTopology to_binary(const Topology& t) {
  BinaryBuilder builder;
  builder.original = &t;
  builder.nodes.reserve(2 * t.size());
  builder.expanded_from.reserve(2 * t.size());

  // Original nodes first, keeping their ids, slots and edge capacities;
  // parents are rewired below.
  std::vector<int> new_index_of(t.size());
  for (int u = 0; u < t.size(); ++u) {
    builder.nodes.push_back(t.node(u));
    builder.expanded_from.emplace_back();
    new_index_of[u] = u;
  }

  for (int u = 0; u < t.size(); ++u) {
    const std::vector<int>& kids = t.children(u);
    if (kids.size() <= 2) continue;
    int counter = 0;
    builder.attach(new_index_of[u], kids, 0, static_cast<int>(kids.size()), new_index_of,
                   t.node(u).id, counter);
  }

  BinaryTopology result;
  result.tree = Topology(std::move(builder.nodes));
  result.expanded_from = std::move(builder.expanded_from);
  return result;
}

std::vector<std::string> path_edges(const Topology& t, std::string_view u, std::string_view v) {
  int a = t.require(u);
  int b = t.require(v);

  auto depth_of = [&](int x) {
    int d = 0;
    for (int y = x; t.node(y).parent != -1; y = t.node(y).parent) ++d;
    return d;
  };
  int da = depth_of(a);
  int db = depth_of(b);

  std::vector<std::string> up;    // edges from u toward the meeting point
  std::vector<std::string> down;  // edges from v toward the meeting point
  while (da > db) {
    up.push_back(t.node(a).id);
    a = t.node(a).parent;
    --da;
  }
  while (db > da) {
    down.push_back(t.node(b).id);
    b = t.node(b).parent;
    --db;
  }
  while (a != b) {
    up.push_back(t.node(a).id);
    down.push_back(t.node(b).id);
    a = t.node(a).parent;
    b = t.node(b).parent;
  }
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

}  // namespace vmemb
