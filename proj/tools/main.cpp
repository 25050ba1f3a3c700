#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vmemb/bench.hpp"
#include "vmemb/cluster_solver.hpp"
#include "vmemb/dp_solver.hpp"
#include "vmemb/hardness.hpp"
#include "vmemb/io.hpp"
#include "vmemb/oracle.hpp"
#include "vmemb/topogen.hpp"

namespace {

using vmemb::Rational;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

vmemb::Topology load_topology_checked(const std::string& path) {
  vmemb::Topology t = vmemb::topology_from_json(vmemb::read_file(path));
  std::vector<std::string> violations = vmemb::validate_topology(t);
  if (!violations.empty()) {
    std::string message = "invalid topology '" + path + "':";
    for (const std::string& v : violations) message += "\n  - " + v;
    throw std::invalid_argument(message);
  }
  return t;
}

void emit(const std::string& text, const std::string& out_path) {
  std::cout << text;
  if (!out_path.empty()) vmemb::write_file(out_path, text);
}

std::string infeasible_json() { return "{\n  \"infeasible\": true\n}\n"; }

// "4:10", "200:2000:200", or "4,6,8".
std::vector<int> parse_points(const std::string& spec) {
  std::vector<int> points;
  if (spec.find(':') != std::string::npos) {
    int lo = 0;
    int hi = 0;
    int step = 1;
    if (std::sscanf(spec.c_str(), "%d:%d:%d", &lo, &hi, &step) < 2 || step < 1 || hi < lo) {
      throw std::invalid_argument("bad points range '" + spec + "' (use lo:hi or lo:hi:step)");
    }
    for (int p = lo; p <= hi; p += step) points.push_back(p);
    return points;
  }
  size_t pos = 0;
  while (pos < spec.size()) {
    size_t comma = spec.find(',', pos);
    if (comma == std::string::npos) comma = spec.size();
    points.push_back(std::stoi(spec.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  if (points.empty()) throw std::invalid_argument("no points given");
  return points;
}

std::vector<long long> parse_items(const std::string& spec) {
  std::vector<long long> items;
  size_t pos = 0;
  while (pos < spec.size()) {
    size_t comma = spec.find(',', pos);
    if (comma == std::string::npos) comma = spec.size();
    items.push_back(std::stoll(spec.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return items;
}

int run_solve(const std::string& topology_path, const std::string& request_path,
              const std::string& out_path, bool no_embedding) {
  vmemb::Topology t = load_topology_checked(topology_path);
  vmemb::RequestGraph r = vmemb::request_from_json(vmemb::read_file(request_path));
  vmemb::BinaryTopology bt = vmemb::to_binary(t);
  vmemb::SolveOptions options;
  options.want_embedding = !no_embedding;
  std::optional<vmemb::SolveResult> result = vmemb::solve(bt, r, options);
  if (!result.has_value()) {
    emit(infeasible_json(), out_path);
    return kExitInfeasible;
  }
  if (no_embedding) {
    emit("{\n  \"congestion\": \"" + result->congestion.str() + "\"\n}\n", out_path);
  } else {
    emit(vmemb::embedding_to_json(r, result->embedding, &result->congestion), out_path);
  }
  return kExitOk;
}

int run_oracle(const std::string& topology_path, const std::string& request_path,
               const std::string& out_path) {
  vmemb::Topology t = load_topology_checked(topology_path);
  vmemb::RequestGraph r = vmemb::request_from_json(vmemb::read_file(request_path));
  std::optional<vmemb::SolveResult> result = vmemb::linear_scan(t, r);
  if (!result.has_value()) {
    emit(infeasible_json(), out_path);
    return kExitInfeasible;
  }
  emit(vmemb::embedding_to_json(r, result->embedding, &result->congestion), out_path);
  return kExitOk;
}

int run_cluster(const std::string& topology_path, int k, const std::string& bw,
                const std::string& out_path) {
  vmemb::Topology t = load_topology_checked(topology_path);
  vmemb::ClusterRequest request{k, Rational::parse(bw)};
  std::optional<vmemb::ClusterResult> result = vmemb::cluster_solve(vmemb::to_binary(t), request);
  if (!result.has_value()) {
    emit(infeasible_json(), out_path);
    return kExitInfeasible;
  }
  nlohmann::ordered_json j;
  j["congestion"] = result->congestion.str();
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const vmemb::LeafCount& lc : result->counts) counts[lc.leaf] = lc.count;
  j["counts"] = std::move(counts);
  emit(j.dump(2) + "\n", out_path);
  return kExitOk;
}

int run_gen_topology(int servers_per_rack, int racks_per_as, int as_count, std::uint64_t seed,
                     bool residuals, const std::string& out_path) {
  vmemb::Topology t =
      vmemb::gen_three_tier({servers_per_rack, racks_per_as, as_count});
  if (residuals) t = vmemb::apply_residuals(t, seed);
  emit(vmemb::topology_to_json(t), out_path);
  return kExitOk;
}

int run_gen_hard(const std::string& model, int m, long long target, const std::string& items_spec,
                 long long heavy_weight, const std::string& epsilon, long long max_nodes,
                 bool allow_unconstrained, const std::string& prefix) {
  vmemb::ThreePartitionInstance tp;
  tp.m = m;
  tp.target = target;
  tp.items = parse_items(items_spec);

  std::vector<std::array<int, 3>> partition;
  if (vmemb::find_three_partition(tp, &partition)) tp.known_partition = partition;

  vmemb::HardInstance instance;
  if (model == "path") {
    instance = vmemb::gen_weighted_path(tp, {heavy_weight, allow_unconstrained});
  } else if (model == "tree") {
    instance = vmemb::gen_unweighted_tree(
        tp, {Rational::parse(epsilon), max_nodes, allow_unconstrained});
  } else {
    throw std::invalid_argument("--model must be 'path' or 'tree'");
  }

  vmemb::write_file(prefix + "topology.json", vmemb::topology_to_json(instance.topology));
  vmemb::write_file(prefix + "request.json", vmemb::request_to_json(instance.request));
  std::cout << "model: " << model << "\n"
            << "nodes: " << instance.topology.size() << "\n"
            << "vms: " << instance.request.k() << "\n"
            << "gap_bound: " << instance.gap_bound.str() << "\n"
            << "three_partition: " << (tp.known_partition.has_value() ? "yes" : "no") << "\n";
  if (instance.certificate.has_value()) {
    Rational one = 1;
    vmemb::write_file(prefix + "certificate.json",
                      vmemb::embedding_to_json(instance.request, *instance.certificate, &one));
    std::cout << "certificate: " << prefix << "certificate.json\n";
  }
  return kExitOk;
}

int run_bench(const std::string& mode, const std::string& sweep, int fixed_n, int fixed_k,
              const std::string& points, int trials, std::uint64_t seed,
              const std::string& out_path) {
  vmemb::BenchConfig config;
  if (mode == "generic") {
    config.mode = vmemb::BenchMode::kGeneric;
  } else if (mode == "cluster") {
    config.mode = vmemb::BenchMode::kCluster;
  } else {
    throw std::invalid_argument("--mode must be 'generic' or 'cluster'");
  }
  if (sweep == "n") {
    config.sweep = vmemb::BenchSweep::kServers;
    if (fixed_k < 1) throw std::invalid_argument("sweeping n needs --fixed-k");
    config.fixed = fixed_k;
  } else if (sweep == "k") {
    config.sweep = vmemb::BenchSweep::kRequestSize;
    if (fixed_n < 1) throw std::invalid_argument("sweeping k needs --fixed-n");
    config.fixed = fixed_n;
  } else {
    throw std::invalid_argument("--sweep must be 'n' or 'k'");
  }
  config.points = parse_points(points);
  config.trials = trials;
  config.seed = seed;
  emit(vmemb::bench_csv(vmemb::bench_scaling(config)), out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-congestion VM embedding in tree datacenter networks"};
  app.require_subcommand(1);

  std::string topology_path;
  std::string request_path;
  std::string out_path;
  bool no_embedding = false;

  CLI::App* solve_cmd = app.add_subcommand("solve", "Exact minimum-congestion embedding (subset DP)");
  solve_cmd->add_option("--topology", topology_path, "Topology JSON file")->required();
  solve_cmd->add_option("--request", request_path, "Request JSON file")->required();
  solve_cmd->add_option("--out", out_path, "Also write the result JSON here");
  solve_cmd->add_flag("--no-embedding", no_embedding, "Report only the congestion value");

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Brute-force scan over all allocations");
  oracle_cmd->add_option("--topology", topology_path, "Topology JSON file")->required();
  oracle_cmd->add_option("--request", request_path, "Request JSON file")->required();
  oracle_cmd->add_option("--out", out_path, "Also write the result JSON here");

  int cluster_k = 0;
  std::string cluster_bw;
  CLI::App* cluster_cmd = app.add_subcommand("cluster-solve", "Uniform-cluster embedding, O(n k^2)");
  cluster_cmd->add_option("--topology", topology_path, "Topology JSON file")->required();
  cluster_cmd->add_option("-k,--vms", cluster_k, "Number of VMs")->required();
  cluster_cmd->add_option("-B,--bandwidth", cluster_bw, "Per-VM bandwidth in Gbps")->required();
  cluster_cmd->add_option("--out", out_path, "Also write the result JSON here");

  int servers_per_rack = 20;
  int racks_per_as = 10;
  int as_count = 5;
  std::uint64_t seed = 42;
  bool residuals = false;
  CLI::App* gen_topo_cmd = app.add_subcommand("gen-topology", "Three-tier datacenter topology");
  gen_topo_cmd->add_option("--servers-per-rack", servers_per_rack, "Servers per rack")
      ->capture_default_str();
  gen_topo_cmd->add_option("--racks-per-as", racks_per_as, "Racks per aggregation switch")
      ->capture_default_str();
  gen_topo_cmd->add_option("--as-count", as_count, "Aggregation switches")->capture_default_str();
  gen_topo_cmd->add_option("--seed", seed, "Residual sampling seed")->capture_default_str();
  gen_topo_cmd->add_flag("--residuals", residuals, "Replace capacities by uniform residuals");
  gen_topo_cmd->add_option("--out", out_path, "Output file (defaults to stdout only)");

  std::string hard_model = "path";
  int hard_m = 2;
  long long hard_target = 0;
  std::string hard_items;
  long long heavy_weight = 100;
  std::string epsilon = "1/2";
  long long max_nodes = 200000;
  bool allow_unconstrained = false;
  std::string out_prefix = "hard_";
  CLI::App* gen_hard_cmd = app.add_subcommand("gen-hard", "Adversarial instance from a 3-partition input");
  gen_hard_cmd->add_option("--model", hard_model, "path | tree")->capture_default_str();
  gen_hard_cmd->add_option("--m", hard_m, "Number of groups")->required();
  gen_hard_cmd->add_option("--B", hard_target, "Group target sum B")->required();
  gen_hard_cmd->add_option("--s", hard_items, "Comma-separated 3m items")->required();
  gen_hard_cmd->add_option("--W", heavy_weight, "Heavy weight (path model)")->capture_default_str();
  gen_hard_cmd->add_option("--epsilon", epsilon, "Blow-up exponent control (tree model)")
      ->capture_default_str();
  gen_hard_cmd->add_option("--max-nodes", max_nodes, "Topology size cap (tree model)")
      ->capture_default_str();
  gen_hard_cmd->add_flag("--allow-unconstrained", allow_unconstrained,
                         "Accept items outside (B/4, B/2)");
  gen_hard_cmd->add_option("--out-prefix", out_prefix, "Output file prefix")->capture_default_str();

  std::string bench_mode = "generic";
  std::string bench_sweep = "n";
  int fixed_n = 0;
  int fixed_k = 0;
  std::string bench_points;
  int bench_trials = 5;
  std::uint64_t bench_seed = 7;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Runtime scaling sweep, CSV output");
  bench_cmd->add_option("--mode", bench_mode, "generic | cluster")->capture_default_str();
  bench_cmd->add_option("--sweep", bench_sweep, "n | k")->capture_default_str();
  bench_cmd->add_option("--fixed-n", fixed_n, "Server count when sweeping k");
  bench_cmd->add_option("--fixed-k", fixed_k, "Request size when sweeping n");
  bench_cmd->add_option("--points", bench_points, "lo:hi, lo:hi:step, or comma list")->required();
  bench_cmd->add_option("--trials", bench_trials, "Trials per point")->capture_default_str();
  bench_cmd->add_option("--seed", bench_seed, "Base seed")->capture_default_str();
  bench_cmd->add_option("--out", out_path, "Output CSV file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) return run_solve(topology_path, request_path, out_path, no_embedding);
    if (oracle_cmd->parsed()) return run_oracle(topology_path, request_path, out_path);
    if (cluster_cmd->parsed()) return run_cluster(topology_path, cluster_k, cluster_bw, out_path);
    if (gen_topo_cmd->parsed()) {
      return run_gen_topology(servers_per_rack, racks_per_as, as_count, seed, residuals, out_path);
    }
    if (gen_hard_cmd->parsed()) {
      return run_gen_hard(hard_model, hard_m, hard_target, hard_items, heavy_weight, epsilon,
                          max_nodes, allow_unconstrained, out_prefix);
    }
    if (bench_cmd->parsed()) {
      return run_bench(bench_mode, bench_sweep, fixed_n, fixed_k, bench_points, bench_trials,
                       bench_seed, out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
