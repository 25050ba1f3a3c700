#include "vmemb/topology.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "test_util.hpp"
#include "vmemb/rng.hpp"

namespace vmemb {
namespace {

using test::node;

bool has_violation(const std::vector<std::string>& violations, const std::string& needle) {
  return std::any_of(violations.begin(), violations.end(), [&](const std::string& v) {
    return v.find(needle) != std::string::npos;
  });
}

TEST(ValidateTopology, GatewayOnlyTreeHasNoServerLeaves) {
  Topology t({node("g", -1, "")});
  EXPECT_TRUE(has_violation(validate_topology(t), "no server leaves"));
}

TEST(ValidateTopology, MinimalChainIsValid) {
  EXPECT_TRUE(validate_topology(test::chain3("10", "10")).empty());
}

TEST(ValidateTopology, DetectsTwoCycle) {
  Topology t({node("g", -1, ""), node("a", 2, "1"), node("b", 1, "1")});
  EXPECT_TRUE(has_violation(validate_topology(t), "cycle detected"));
}

TEST(ValidateTopology, DetectsBadCapacityAndSlots) {
  Topology zero_cap({node("g", -1, ""), node("s", 0, "0"), node("leaf", 1, "10", 1)});
  EXPECT_TRUE(has_violation(validate_topology(zero_cap), "nonpositive capacity"));

  Topology internal_slots(
      {node("g", -1, ""), node("s", 0, "10", 3), node("leaf", 1, "10", 1)});
  EXPECT_TRUE(has_violation(validate_topology(internal_slots), "vm_slots on internal node"));
}

TEST(ValidateTopology, DetectsMultipleRoots) {
  Topology t({node("g", -1, ""), node("h", -1, ""), node("leaf", 0, "10", 1)});
  EXPECT_TRUE(has_violation(validate_topology(t), "multiple roots"));
}

TEST(ToBinary, StarKeepsLeafEdgesAndInsertsUnboundedOnes) {
  Topology star({node("g", -1, ""), node("l1", 0, "1", 1), node("l2", 0, "2", 1),
                 node("l3", 0, "3", 1), node("l4", 0, "4", 1)});
  BinaryTopology bt = to_binary(star);
  const Topology& tree = bt.tree;

  EXPECT_LE(tree.size(), 10);
  EXPECT_EQ(tree.size(), 7);  // 5 original + (4 - 2) synthetic
  for (int u = 0; u < tree.size(); ++u) {
    EXPECT_LE(tree.children(u).size(), 2u);
    const NetworkNode& n = tree.node(u);
    if (n.synthetic) {
      EXPECT_TRUE(n.parent_capacity.is_unbounded());
      EXPECT_EQ(bt.expanded_from[u], "g");
      EXPECT_EQ(n.vm_slots, 0);
    }
  }
  for (int i = 1; i <= 4; ++i) {
    int u = tree.require("l" + std::to_string(i));
    EXPECT_EQ(tree.node(u).parent_capacity, Capacity::finite(Rational(i)));
    EXPECT_TRUE(tree.is_leaf(u));
    EXPECT_EQ(tree.node(u).vm_slots, 1);
  }
  EXPECT_TRUE(validate_topology(tree).empty());
}

TEST(ToBinary, DegreeTwoTreeIsUntouched) {
  Topology t({node("g", -1, ""), node("a", 0, "5", 1), node("b", 0, "7", 1)});
  BinaryTopology bt = to_binary(t);
  EXPECT_EQ(bt.tree.size(), 3);
  for (const NetworkNode& n : bt.tree.nodes()) EXPECT_FALSE(n.synthetic);
}

TEST(ToBinary, IdempotentOnAlreadyBinaryTrees) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Topology t = test::random_tree(rng, 40);
    BinaryTopology once = to_binary(t);
    BinaryTopology twice = to_binary(once.tree);
    ASSERT_EQ(once.tree.size(), twice.tree.size());
    for (int u = 0; u < once.tree.size(); ++u) {
      EXPECT_EQ(once.tree.node(u).id, twice.tree.node(u).id);
      EXPECT_EQ(once.tree.node(u).parent, twice.tree.node(u).parent);
      EXPECT_EQ(once.tree.node(u).parent_capacity, twice.tree.node(u).parent_capacity);
    }
  }
}

TEST(ToBinary, RandomTreesRespectSizeBoundAndPreserveStructure) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(uniform_u64(rng, 199));
    Topology t = test::random_tree(rng, n);
    BinaryTopology bt = to_binary(t);
    const Topology& tree = bt.tree;

    ASSERT_LE(tree.size(), 2 * n);
    for (int u = 0; u < tree.size(); ++u) ASSERT_LE(tree.children(u).size(), 2u);

    // Leaf set (ids and slots) is untouched.
    std::map<std::string, int> original_leaves;
    for (int u : t.leaves()) original_leaves[t.node(u).id] = t.node(u).vm_slots;
    std::map<std::string, int> binary_leaves;
    for (int u : tree.leaves()) binary_leaves[tree.node(u).id] = tree.node(u).vm_slots;
    ASSERT_EQ(original_leaves, binary_leaves);

    // Original edges keep their capacity; synthetic edges are unbounded.
    for (int u = 0; u < tree.size(); ++u) {
      const NetworkNode& nn = tree.node(u);
      if (nn.synthetic) {
        ASSERT_TRUE(nn.parent_capacity.is_unbounded());
      } else if (nn.parent != -1) {
        int orig = t.require(nn.id);
        ASSERT_EQ(nn.parent_capacity, t.node(orig).parent_capacity);
      }
    }
  }
}

TEST(ToBinary, PathsKeepOriginalEdgesExactly) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 3 + static_cast<int>(uniform_u64(rng, 60));
    Topology t = test::random_tree(rng, n);
    BinaryTopology bt = to_binary(t);
    for (int rep = 0; rep < 10; ++rep) {
      std::string u = t.node(static_cast<int>(uniform_u64(rng, n))).id;
      std::string v = t.node(static_cast<int>(uniform_u64(rng, n))).id;
      std::vector<std::string> original = path_edges(t, u, v);
      std::vector<std::string> binary = path_edges(bt.tree, u, v);
      // Dropping synthetic edges from the binary path recovers the
      // original path edge-for-edge; all capacities in test::random_tree
      // are finite, so those are exactly the finite-capacity edges.
      std::vector<std::string> filtered;
      for (const std::string& e : binary) {
        if (!bt.tree.node(bt.tree.require(e)).synthetic) filtered.push_back(e);
      }
      ASSERT_EQ(filtered, original);
    }
  }
}

TEST(PathEdges, MatchesHandComputedExamples) {
  Topology t({node("g", -1, ""), node("a", 0, "1"), node("leaf1", 1, "1", 1),
              node("leaf2", 1, "1", 1)});
  EXPECT_TRUE(path_edges(t, "a", "a").empty());
  EXPECT_EQ(path_edges(t, "leaf1", "leaf2"), (std::vector<std::string>{"leaf1", "leaf2"}));
  EXPECT_EQ(path_edges(t, "leaf1", "g"), (std::vector<std::string>{"leaf1", "a"}));
  EXPECT_EQ(path_edges(t, "g", "leaf2"), (std::vector<std::string>{"a", "leaf2"}));
  EXPECT_THROW(path_edges(t, "leaf1", "nope"), std::invalid_argument);
}

TEST(Topology, RejectsDuplicateIdsAndBadParents) {
  EXPECT_THROW(Topology({node("g", -1, ""), node("g", 0, "1")}), std::invalid_argument);
  EXPECT_THROW(Topology({node("g", -1, ""), node("a", 5, "1")}), std::invalid_argument);
  EXPECT_THROW(Topology({node("g", -1, ""), node("a", 1, "1")}), std::invalid_argument);
}

}  // namespace
}  // namespace vmemb
