#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vmemb/request.hpp"

namespace vmemb {

enum class BenchMode { kGeneric, kCluster };
enum class BenchSweep { kServers, kRequestSize };

struct BenchConfig {
  BenchMode mode = BenchMode::kGeneric;
  BenchSweep sweep = BenchSweep::kServers;
  int fixed = 5;             // the non-swept parameter (k resp. server count)
  std::vector<int> points;   // swept parameter values
  int trials = 5;
  std::uint64_t seed = 1;
  Rational cluster_bw{1, 10};  // B for cluster mode, Gbps
};

struct BenchRow {
  int param;
  double median_s;
  double min_s;
  double max_s;
};

/// Times solve/cluster_solve on freshly generated residual three-tier
/// topologies, one warm-up plus `trials` measurements per point. Only the
/// solve call is timed; topology generation, normalization and request
/// construction are excluded. Short runs are repeated in a loop and
/// averaged so timer resolution does not dominate.
std::vector<BenchRow> bench_scaling(const BenchConfig& config);

/// CSV with header "param,median_s,min_s,max_s".
std::string bench_csv(const std::vector<BenchRow>& rows);

/// Random connected request: spanning-tree chatter plus extra edges, one
/// guaranteed uplink, bandwidths uniform 2-decimal values in [0.05, 2].
RequestGraph random_connected_request(int k, std::mt19937_64& rng);

/// Path request of k VMs with random bandwidths, no uplinks.
RequestGraph random_path_request(int k, std::mt19937_64& rng);

}  // namespace vmemb
