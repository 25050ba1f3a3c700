#include "vmemb/oracle.hpp"

#include <random>

#include "gtest/gtest.h"
#include "test_util.hpp"
#include "vmemb/rng.hpp"

namespace vmemb {
namespace {

using test::node;

TEST(LinearScan, SingleAllocationChain) {
  Topology t = test::chain3("10", "10");
  RequestGraph r{{"v1"}, {{0, Rational(5)}}, {}};
  auto result = linear_scan(t, r);
  ASSERT_TRUE(result.has_value());
  EXPECT_EQ(result->congestion, Rational(1, 2));
  EXPECT_EQ(result->embedding.vm_to_leaf, (std::vector<std::string>{"leaf"}));
}

TEST(LinearScan, SymmetricInstancePicksEitherLeafAtTheSameValue) {
  Topology t({node("g", -1, ""), node("a", 0, "4", 1), node("b", 0, "4", 1)});
  RequestGraph r{{"v1"}, {{0, Rational(2)}}, {}};
  auto result = linear_scan(t, r);
  ASSERT_TRUE(result.has_value());
  EXPECT_EQ(result->congestion, Rational(1, 2));
  Embedding other{{result->embedding.vm_to_leaf[0] == "a" ? std::string("b") : std::string("a")}};
  EXPECT_EQ(evaluate(t, r, other), result->congestion);
}

TEST(LinearScan, EnforcesGuardLimits) {
  std::vector<NetworkNode> nodes = {node("g", -1, "")};
  for (int i = 0; i < 13; ++i) nodes.push_back(node("l" + std::to_string(i), 0, "1", 1));
  Topology wide(std::move(nodes));
  RequestGraph r{{"v1"}, {{0, Rational(1)}}, {}};
  EXPECT_THROW(linear_scan(wide, r), std::invalid_argument);

  Topology t({node("g", -1, ""), node("a", 0, "4", 6)});
  RequestGraph big{{"v1", "v2", "v3", "v4", "v5", "v6"}, {{0, Rational(1)}}, {}};
  EXPECT_THROW(linear_scan(t, big), std::invalid_argument);
}

TEST(LinearScan, InfeasibleWhenSlotsRunOut) {
  Topology t({node("g", -1, ""), node("a", 0, "4", 1)});
  RequestGraph r{{"v1", "v2"}, {{0, Rational(1)}}, {}};
  EXPECT_FALSE(linear_scan(t, r).has_value());
}

TEST(LinearScan, IsTheMinimumOverAnIndependentReEnumeration) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    Topology t = test::random_tree(rng, 3 + static_cast<int>(uniform_u64(rng, 10)));
    if (static_cast<int>(t.leaves().size()) > 12) continue;
    int k = 1 + static_cast<int>(uniform_u64(rng, 3));
    if (k > t.total_leaf_slots()) continue;
    RequestGraph r = test::random_request(rng, k);
    auto result = linear_scan(t, r);
    ASSERT_TRUE(result.has_value());

    // Exhaustively re-enumerate with the cut-based evaluator.
    std::vector<int> leaves = t.leaves();
    std::vector<int> free_slots(t.size());
    for (int u : leaves) free_slots[u] = t.node(u).vm_slots;
    Embedding probe;
    probe.vm_to_leaf.resize(k);
    bool any = false;
    Rational best;
    auto enumerate = [&](auto&& self, int vm) -> void {
      if (vm == k) {
        Rational value = test::cut_based_congestion(t, r, probe);
        ASSERT_LE(result->congestion, value);
        if (!any || value < best) {
          any = true;
          best = value;
        }
        return;
      }
      for (int u : leaves) {
        if (free_slots[u] == 0) continue;
        --free_slots[u];
        probe.vm_to_leaf[vm] = t.node(u).id;
        self(self, vm + 1);
        ++free_slots[u];
      }
    };
    enumerate(enumerate, 0);
    ASSERT_TRUE(any);
    ASSERT_EQ(result->congestion, best);
  }
}

}  // namespace
}  // namespace vmemb
