#pragma once

#include <algorithm>
#include <vector>

#include "vmemb/topology.hpp"

namespace vmemb::detail {

// Children-before-parents traversal order.
inline std::vector<int> post_order(const Topology& tree) {
  std::vector<int> order;
  order.reserve(tree.size());
  std::vector<int> stack = {tree.root()};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (int c : tree.children(u)) stack.push_back(c);
  }
  std::reverse(order.begin(), order.end());
  return order;
}

inline std::vector<int> node_depths(const Topology& tree) {
  std::vector<int> depth(tree.size(), 0);
  std::vector<int> stack = {tree.root()};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int c : tree.children(u)) {
      depth[c] = depth[u] + 1;
      stack.push_back(c);
    }
  }
  return depth;
}

}  // namespace vmemb::detail
