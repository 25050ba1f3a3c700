#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "vmemb/rational.hpp"

namespace vmemb {

/// Edge bandwidth: a positive finite rational (Gbps) or UNBOUNDED.
/// Flow over an UNBOUNDED edge contributes congestion exactly 0.
class Capacity {
 public:
  Capacity() = default;
  static Capacity unbounded() {
    Capacity c;
    c.unbounded_ = true;
    return c;
  }
  static Capacity finite(Rational value) {
    Capacity c;
    c.value_ = value;
    return c;
  }
  /// Accepts a decimal/fraction literal or the string "unbounded".
  static Capacity parse(std::string_view text);

  bool is_unbounded() const { return unbounded_; }
  const Rational& value() const {
    if (unbounded_) throw std::logic_error("capacity is unbounded");
    return value_;
  }

  Rational congestion_of(const Rational& flow) const {
    return unbounded_ ? Rational(0) : flow / value_;
  }

  std::string str() const { return unbounded_ ? "unbounded" : value_.str(); }

  friend bool operator==(const Capacity& a, const Capacity& b) {
    if (a.unbounded_ || b.unbounded_) return a.unbounded_ == b.unbounded_;
    return a.value_ == b.value_;
  }

 private:
  Rational value_;
  bool unbounded_ = false;
};

struct NetworkNode {
  std::string id;
  int parent = -1;           // node index; -1 for the root
  Capacity parent_capacity;  // capacity of the edge to the parent; unused for the root
  int vm_slots = 0;          // > 0 only on leaves
  bool synthetic = false;    // introduced by binary normalization
};

/// Rooted capacitated tree of network nodes. The root is the gateway;
/// leaves with vm_slots > 0 are servers. Immutable after construction.
class Topology {
 public:
  Topology() = default;
  /// Indexes the nodes as given; throws on duplicate ids or out-of-range
  /// parent indices. Tree-shape violations (cycles, multiple roots, ...)
  /// are left to validate().
  explicit Topology(std::vector<NetworkNode> nodes);

  const std::vector<NetworkNode>& nodes() const { return nodes_; }
  const NetworkNode& node(int u) const { return nodes_.at(u); }
  int size() const { return static_cast<int>(nodes_.size()); }

  /// Index of the unique parentless node, or -1 if there is none.
  int root() const { return root_; }
  const std::vector<int>& children(int u) const { return children_.at(u); }
  bool is_leaf(int u) const { return children_[u].empty() && u != root_; }
  std::vector<int> leaves() const;
  int total_leaf_slots() const;

  int index_of(std::string_view id) const;  // -1 if unknown
  int require(std::string_view id) const;   // throws if unknown

 private:
  std::vector<NetworkNode> nodes_;
  std::vector<std::vector<int>> children_;
  std::unordered_map<std::string, int> by_id_;
  int root_ = -1;
};

/// Returns every invariant violation (empty means valid): unique root,
/// acyclic and connected parent structure, positive finite or unbounded
/// capacities, vm_slots only on leaves, at least one server leaf.
std::vector<std::string> validate_topology(const Topology& t);

/// Binary normalization of a Topology. Leaves, leaf slots, and original
/// edges (identified by child node id) are preserved; inserted nodes are
/// flagged synthetic and their parent edges are UNBOUNDED.
struct BinaryTopology {
  Topology tree;
  /// For each node index: the id of the original node this synthetic node
  /// expands, or "" for original nodes.
  std::vector<std::string> expanded_from;
};

/// Replaces every node with more than two children by a left-leaning
/// complete binary tree over its children (deterministic order). The
/// result has at most twice the nodes and every node has <= 2 children.
BinaryTopology to_binary(const Topology& t);

/// Ordered edge ids (an edge is named by its child node) on the unique
/// u-v path: first the edges walking up from u, then down to v.
/// path_edges(t, u, u) is empty. Throws on unknown ids.
std::vector<std::string> path_edges(const Topology& t, std::string_view u, std::string_view v);

}  // namespace vmemb
