#include "vmemb/dp_solver.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

#include "tree_util.hpp"

namespace vmemb {

std::optional<SolveResult> solve(const BinaryTopology& t, const RequestGraph& r,
                                 const SolveOptions& options, SolveTables* tables) {
  const Topology& tree = t.tree;
  if (tree.root() == -1) throw std::invalid_argument("topology has no root");
  for (int u = 0; u < tree.size(); ++u) {
    if (tree.children(u).size() > 2) {
      throw std::invalid_argument("topology is not binary; run to_binary first");
    }
  }

  const FlowTable flow = build_flow_table(r);  // also validates r and the k limit
  const int k = r.k();
  const VmSubset full = flow.full_set();
  const std::size_t table_size = std::size_t{1} << k;
  const int n = tree.size();

  std::vector<std::vector<Congestion>> cong(n);
  std::vector<std::vector<VmSubset>> part(n);
  std::vector<int> subtree_slots(n, 0);

  const std::vector<int> order = detail::post_order(tree);
  const bool retain = tables != nullptr;

  // Scratch: per-subset congestion of the edges to the two children.
  std::vector<Rational> econg_left(table_size);
  std::vector<Rational> econg_right(table_size);

  auto fill_edge_cong = [&](std::vector<Rational>& out, int child, int slot_cap) {
    const Capacity& cap = tree.node(child).parent_capacity;
    if (cap.is_unbounded()) {
      // congestion_of is identically zero
      std::fill(out.begin(), out.end(), Rational(0));
      return;
    }
    for (VmSubset s = 0;; ++s) {
      if (std::popcount(s) <= slot_cap) out[s] = cap.congestion_of(flow[s]);
      if (s == full) break;
    }
  };

  for (int u : order) {
    const std::vector<int>& kids = tree.children(u);
    const bool at_root = u == tree.root();
    std::vector<Congestion>& row = cong[u];

    if (kids.empty()) {
      // Base case: a leaf hosts up to vm_slots VMs at zero congestion.
      // A childless root is the degenerate gateway-only tree.
      int slots = tree.is_leaf(u) ? tree.node(u).vm_slots : 0;
      subtree_slots[u] = slots;
      row.assign(table_size, Congestion::infeasible());
      for (VmSubset s = 0;; ++s) {
        if (std::popcount(s) <= slots) row[s] = Rational(0);
        if (s == full) break;
      }
    } else if (kids.size() == 1) {
      const int c = kids[0];
      subtree_slots[u] = subtree_slots[c];
      const int cap = std::min(k, subtree_slots[c]);
      fill_edge_cong(econg_left, c, cap);
      row.assign(table_size, Congestion::infeasible());
      const std::vector<Congestion>& child_row = cong[c];
      for (VmSubset s = at_root ? full : 0;; ++s) {
        if (std::popcount(s) <= cap && !child_row[s].is_infeasible()) {
          row[s] = vmemb::max(child_row[s], Congestion(econg_left[s]));
        }
        if (s == full) break;
      }
    } else {
      const int left = kids[0];
      const int right = kids[1];
      const int slots_left = subtree_slots[left];
      const int slots_right = subtree_slots[right];
      subtree_slots[u] = std::min<long long>(slots_left + slots_right, 1 << 20);
      const int cap = std::min(k, subtree_slots[u]);
      fill_edge_cong(econg_left, left, std::min(k, slots_left));
      fill_edge_cong(econg_right, right, std::min(k, slots_right));

      row.assign(table_size, Congestion::infeasible());
      std::vector<VmSubset>& splits = part[u];
      splits.assign(table_size, 0);
      const std::vector<Congestion>& row_left = cong[left];
      const std::vector<Congestion>& row_right = cong[right];

      for (VmSubset s = at_root ? full : 0;; ++s) {
        if (std::popcount(s) <= cap) {
          bool found = false;
          Rational best;
          VmSubset best_split = 0;
          // Submask walk S, S-1&S, ..., 0; a candidate improves only if
          // every component is strictly below the current best, so each
          // term doubles as an early exit.
          VmSubset sub = s;
          while (true) {
            const VmSubset rest = s ^ sub;
            if (std::popcount(sub) <= slots_left && std::popcount(rest) <= slots_right) {
              const Congestion& cl = row_left[sub];
              const Congestion& cr = row_right[rest];
              if (!cl.is_infeasible() && !cr.is_infeasible() &&
                  (!found || (cl.value() < best && cr.value() < best &&
                              econg_left[sub] < best && econg_right[rest] < best))) {
                Rational candidate = vmemb::max(vmemb::max(cl.value(), cr.value()),
                                                vmemb::max(econg_left[sub], econg_right[rest]));
                if (!found || candidate < best) {
                  found = true;
                  best = candidate;
                  best_split = sub;
                }
              }
            }
            if (sub == 0) break;
            sub = (sub - 1) & s;
          }
          if (found) {
            row[s] = best;
            splits[s] = best_split;
          }
        }
        if (s == full) break;
      }
    }

    if (!retain) {
      for (int c : kids) {
        std::vector<Congestion>().swap(cong[c]);
      }
    }
  }

  const Congestion result = cong[tree.root()][full];
  std::optional<SolveResult> out;
  if (!result.is_infeasible()) {
    SolveResult res;
    res.congestion = result.value();
    if (options.want_embedding) {
      res.embedding.vm_to_leaf.resize(k);
      std::vector<std::pair<int, VmSubset>> work = {{tree.root(), full}};
      while (!work.empty()) {
        auto [u, s] = work.back();
        work.pop_back();
        if (s == 0) continue;
        const std::vector<int>& kids = tree.children(u);
        if (kids.empty()) {
          for (int i = 0; i < k; ++i) {
            if (s >> i & 1) res.embedding.vm_to_leaf[i] = tree.node(u).id;
          }
        } else if (kids.size() == 1) {
          work.push_back({kids[0], s});
        } else {
          VmSubset sub = part[u][s];
          work.push_back({kids[0], sub});
          work.push_back({kids[1], s ^ sub});
        }
      }
    }
    out = std::move(res);
  }

  if (tables != nullptr) {
    tables->cong = std::move(cong);
    tables->part = std::move(part);
    tables->subtree_slots = std::move(subtree_slots);
  }
  return out;
}

}  // namespace vmemb
