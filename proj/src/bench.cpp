#include "vmemb/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "vmemb/cluster_solver.hpp"
#include "vmemb/dp_solver.hpp"
#include "vmemb/rng.hpp"
#include "vmemb/topogen.hpp"

namespace vmemb {
namespace {

Rational random_bandwidth(std::mt19937_64& rng) {
  return Rational(uniform_int(rng, 5, 200), 100);
}

std::uint64_t trial_seed(std::uint64_t seed, int point, int trial) {
  std::uint64_t x = seed;
  x ^= 0x9e3779b97f4a7c15ull * (static_cast<std::uint64_t>(point) * 1000 + trial + 1);
  return x;
}

double time_solve(const BinaryTopology& bt, const RequestGraph* request,
                  const ClusterRequest* cluster) {
  using clock = std::chrono::steady_clock;
  // Repeat short solves so a single measurement spans at least ~5 ms.
  int reps = 1;
  for (;;) {
    auto begin = clock::now();
    for (int i = 0; i < reps; ++i) {
      if (request != nullptr) {
        SolveOptions options;
        options.want_embedding = false;
        (void)solve(bt, *request, options);
      } else {
        (void)cluster_solve(bt, *cluster);
      }
    }
    double elapsed = std::chrono::duration<double>(clock::now() - begin).count();
    if (elapsed >= 0.005 || reps >= 1 << 20) return elapsed / reps;
    reps *= elapsed <= 0 ? 16 : std::max(2, static_cast<int>(0.006 / (elapsed / reps)));
  }
}

}  // namespace

RequestGraph random_connected_request(int k, std::mt19937_64& rng) {
  RequestGraph r;
  for (int i = 1; i <= k; ++i) r.vms.push_back("v" + std::to_string(i));
  for (int i = 1; i < k; ++i) {
    int parent = static_cast<int>(uniform_u64(rng, i));
    r.chatter.push_back({parent, i, random_bandwidth(rng)});
  }
  // A quarter of the remaining pairs, on average.
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      bool tree_edge = false;
      for (const RequestGraph::Chatter& c : r.chatter) {
        if (c.a == a && c.b == b) tree_edge = true;
      }
      if (!tree_edge && uniform_u64(rng, 4) == 0) {
        r.chatter.push_back({a, b, random_bandwidth(rng)});
      }
    }
  }
  std::sort(r.chatter.begin(), r.chatter.end(), [](const auto& x, const auto& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });
  r.uplinks.push_back({0, random_bandwidth(rng)});
  return r;
}

RequestGraph random_path_request(int k, std::mt19937_64& rng) {
  RequestGraph r;
  for (int i = 1; i <= k; ++i) r.vms.push_back("v" + std::to_string(i));
  for (int i = 0; i + 1 < k; ++i) r.chatter.push_back({i, i + 1, random_bandwidth(rng)});
  return r;
}

std::vector<BenchRow> bench_scaling(const BenchConfig& config) {
  if (config.points.empty()) throw std::invalid_argument("bench needs at least one sweep point");
  if (config.trials < 1) throw std::invalid_argument("bench needs at least one trial");

  std::vector<BenchRow> rows;
  for (int point : config.points) {
    const int servers = config.sweep == BenchSweep::kServers ? point : config.fixed;
    const int k = config.sweep == BenchSweep::kRequestSize ? point : config.fixed;
    if (servers < 1) throw std::invalid_argument("server count must be >= 1");
    if (config.mode == BenchMode::kGeneric && k > kSubsetLimit) {
      throw std::invalid_argument("generic mode is limited to k <= " +
                                  std::to_string(kSubsetLimit));
    }

    std::vector<double> samples;
    for (int trial = -1; trial < config.trials; ++trial) {  // trial -1 is warm-up
      std::mt19937_64 rng(trial_seed(config.seed, point, std::max(trial, 0)));
      Topology topo = apply_residuals(gen_three_tier_with_servers(servers),
                                      trial_seed(config.seed, point, std::max(trial, 0)) ^ 0x5bull);
      BinaryTopology bt = to_binary(topo);

      double seconds = 0;
      if (config.mode == BenchMode::kGeneric) {
        RequestGraph request = config.sweep == BenchSweep::kRequestSize
                                   ? random_path_request(k, rng)
                                   : random_connected_request(k, rng);
        seconds = time_solve(bt, &request, nullptr);
      } else {
        ClusterRequest cluster{k, config.cluster_bw};
        seconds = time_solve(bt, nullptr, &cluster);
      }
      if (trial >= 0) samples.push_back(seconds);
    }

    std::sort(samples.begin(), samples.end());
    BenchRow row;
    row.param = point;
    row.min_s = samples.front();
    row.max_s = samples.back();
    row.median_s = samples[samples.size() / 2];
    if (samples.size() % 2 == 0) {
      row.median_s = (samples[samples.size() / 2 - 1] + samples[samples.size() / 2]) / 2;
    }
    rows.push_back(row);
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = "param,median_s,min_s,max_s\n";
  char line[128];
  for (const BenchRow& row : rows) {
    std::snprintf(line, sizeof(line), "%d,%.6f,%.6f,%.6f\n", row.param, row.median_s, row.min_s,
                  row.max_s);
    out += line;
  }
  return out;
}

}  // namespace vmemb
