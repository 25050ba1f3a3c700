#include "vmemb/cluster_solver.hpp"

#include <random>

#include "gtest/gtest.h"
#include "test_util.hpp"
#include "vmemb/dp_solver.hpp"
#include "vmemb/rng.hpp"
#include "vmemb/topogen.hpp"

namespace vmemb {
namespace {

using test::node;

TEST(ClusterCutFlow, MatchesFormulaAndSymmetry) {
  // k=2, B=10: the (1,1) split moves 1*1*10/1 = 10 across each edge.
  EXPECT_EQ(cluster_cut_flow(1, 2, Rational(10)), Rational(10));
  EXPECT_EQ(cluster_cut_flow(0, 2, Rational(10)), Rational(0));
  EXPECT_EQ(cluster_cut_flow(1, 1, Rational(10)), Rational(0));  // k=1 has no cuts
  for (int k = 2; k <= 9; ++k) {
    for (int i = 0; i <= k; ++i) {
      EXPECT_EQ(cluster_cut_flow(i, k, Rational(7, 3)), cluster_cut_flow(k - i, k, Rational(7, 3)));
    }
  }
}

TEST(ClusterSolve, TwoVmExamples) {
  Topology split({node("g", -1, ""), node("a", 0, "5"), node("b", 0, "5"),
                  node("la", 1, "50", 1), node("lb", 2, "50", 1)});
  auto forced = cluster_solve(to_binary(split), {2, Rational(10)});
  ASSERT_TRUE(forced.has_value());
  EXPECT_EQ(forced->congestion, Rational(2));  // 10 over capacity 5

  Topology together({node("g", -1, ""), node("leaf", 0, "5", 2)});
  auto colocated = cluster_solve(to_binary(together), {2, Rational(10)});
  ASSERT_TRUE(colocated.has_value());
  EXPECT_EQ(colocated->congestion, Rational(0));
  ASSERT_EQ(colocated->counts.size(), 1u);
  EXPECT_EQ(colocated->counts[0].leaf, "leaf");
  EXPECT_EQ(colocated->counts[0].count, 2);
}

TEST(ClusterSolve, SingleVmIsFree) {
  Topology t({node("g", -1, ""), node("a", 0, "1", 1), node("b", 0, "1", 1)});
  auto result = cluster_solve(to_binary(t), {1, Rational(3)});
  ASSERT_TRUE(result.has_value());
  EXPECT_EQ(result->congestion, Rational(0));
  ASSERT_EQ(result->counts.size(), 1u);
  EXPECT_EQ(result->counts[0].count, 1);
}

TEST(ClusterSolve, InfeasibleWithoutEnoughSlots) {
  Topology t({node("g", -1, ""), node("leaf", 0, "5", 2)});
  EXPECT_FALSE(cluster_solve(to_binary(t), {3, Rational(1)}).has_value());
  EXPECT_THROW(cluster_solve(to_binary(t), {0, Rational(1)}), std::invalid_argument);
  EXPECT_THROW(cluster_solve(to_binary(t), {2, Rational(0)}), std::invalid_argument);
}

TEST(ClusterSolve, AgreesWithGenericDpOnExplicitClique) {
  std::mt19937_64 rng(911);
  int done = 0;
  while (done < 60) {
    Topology t = test::random_tree(rng, 3 + static_cast<int>(uniform_u64(rng, 40)), 15, 3);
    if (static_cast<int>(t.leaves().size()) > 30) continue;
    int k = 2 + static_cast<int>(uniform_u64(rng, 7));
    if (k > t.total_leaf_slots()) continue;
    ++done;
    ClusterRequest cluster{k, Rational(uniform_int(rng, 1, 200), 10)};
    BinaryTopology bt = to_binary(t);

    auto fast = cluster_solve(bt, cluster);
    auto generic = solve(bt, clique_request(cluster));
    ASSERT_TRUE(fast.has_value());
    ASSERT_TRUE(generic.has_value());
    ASSERT_EQ(fast->congestion, generic->congestion);

    // Expanding the counts yields an embedding that realizes the value
    // under the explicit clique.
    Embedding expanded = expand_counts(t, fast->counts, k);
    ASSERT_EQ(evaluate(t, clique_request(cluster), expanded), fast->congestion);
  }
}

TEST(ClusterSolve, LabelPermutationLeavesCongestionUnchanged) {
  std::mt19937_64 rng(13);
  Topology t = test::random_tree(rng, 20, 15, 2);
  int k = std::min(5, t.total_leaf_slots());
  if (k < 2) GTEST_SKIP();
  ClusterRequest cluster{k, Rational(3, 2)};
  auto result = cluster_solve(to_binary(t), cluster);
  ASSERT_TRUE(result.has_value());

  Embedding expanded = expand_counts(t, result->counts, k);
  RequestGraph clique = clique_request(cluster);
  Rational base = evaluate(t, clique, expanded);
  for (int rot = 1; rot < k; ++rot) {
    Embedding permuted;
    for (int i = 0; i < k; ++i) permuted.vm_to_leaf.push_back(expanded.vm_to_leaf[(i + rot) % k]);
    EXPECT_EQ(evaluate(t, clique, permuted), base);
  }
}

TEST(ExpandCounts, ChecksSlotAndSumErrors) {
  Topology t({node("g", -1, ""), node("a", 0, "1", 2), node("b", 0, "1", 1)});
  Embedding e = expand_counts(t, {{"a", 2}}, 2);
  EXPECT_EQ(e.vm_to_leaf, (std::vector<std::string>{"a", "a"}));
  EXPECT_THROW(expand_counts(t, {{"a", 1}}, 2), std::invalid_argument);  // sums to 1
  EXPECT_THROW(expand_counts(t, {{"b", 2}}, 2), std::invalid_argument);  // slot violation
  EXPECT_THROW(expand_counts(t, {{"g", 1}}, 1), std::invalid_argument);  // not a leaf
}

}  // namespace
}  // namespace vmemb
