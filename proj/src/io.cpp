#include "vmemb/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace vmemb {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kParseVmLimit = 1000000;

ordered_json parse_json(const std::string& text, const char* what) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

Rational rational_field(const ordered_json& j, const char* key) {
  const ordered_json& v = j.at(key);
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw std::invalid_argument(std::string("field '") + key +
                              "' must be a decimal string (or integer)");
}

Capacity capacity_field(const ordered_json& j, const char* key) {
  const ordered_json& v = j.at(key);
  if (v.is_string()) return Capacity::parse(v.get<std::string>());
  if (v.is_number_integer()) return Capacity::finite(Rational(v.get<long long>()));
  throw std::invalid_argument(std::string("field '") + key +
                              "' must be a decimal string, an integer, or \"unbounded\"");
}

}  // namespace

Topology topology_from_json(const std::string& text) {
  ordered_json j = parse_json(text, "topology");
  if (!j.contains("root") || !j.contains("nodes") || !j["nodes"].is_array()) {
    throw std::invalid_argument("topology JSON needs 'root' and a 'nodes' array");
  }
  const std::string root_id = j["root"].get<std::string>();

  std::unordered_map<std::string, int> index;
  const ordered_json& entries = j["nodes"];
  for (size_t i = 0; i < entries.size(); ++i) {
    std::string id = entries[i].at("id").get<std::string>();
    if (!index.emplace(id, static_cast<int>(i)).second) {
      throw std::invalid_argument("duplicate node id '" + id + "'");
    }
  }
  if (index.find(root_id) == index.end()) {
    throw std::invalid_argument("root '" + root_id + "' is not among the nodes");
  }

  std::vector<NetworkNode> nodes;
  nodes.reserve(entries.size());
  for (const ordered_json& entry : entries) {
    NetworkNode node;
    node.id = entry.at("id").get<std::string>();
    if (entry.contains("parent") && !entry["parent"].is_null()) {
      std::string parent_id = entry["parent"].get<std::string>();
      auto it = index.find(parent_id);
      if (it == index.end()) {
        throw std::invalid_argument("node '" + node.id + "' has unknown parent '" + parent_id +
                                    "'");
      }
      node.parent = it->second;
      node.parent_capacity = capacity_field(entry, "capacity");
    } else if (node.id != root_id) {
      throw std::invalid_argument("non-root node '" + node.id + "' has no parent");
    }
    if (entry.contains("vm_slots")) node.vm_slots = entry["vm_slots"].get<int>();
    nodes.push_back(std::move(node));
  }
  return Topology(std::move(nodes));
}

std::string topology_to_json(const Topology& t) {
  ordered_json j;
  j["root"] = t.root() == -1 ? "" : t.node(t.root()).id;
  ordered_json nodes = ordered_json::array();
  for (const NetworkNode& node : t.nodes()) {
    ordered_json entry;
    entry["id"] = node.id;
    if (node.parent != -1) {
      entry["parent"] = t.node(node.parent).id;
      entry["capacity"] = node.parent_capacity.str();
    }
    entry["vm_slots"] = node.vm_slots;
    nodes.push_back(std::move(entry));
  }
  j["nodes"] = std::move(nodes);
  return j.dump(2) + "\n";
}

RequestGraph request_from_json(const std::string& text) {
  ordered_json j = parse_json(text, "request");
  if (!j.contains("vms") || !j["vms"].is_array()) {
    throw std::invalid_argument("request JSON needs a 'vms' array");
  }
  RequestGraph r;
  if (j["vms"].size() > kParseVmLimit) {
    throw std::invalid_argument("request size k over limit");
  }
  std::unordered_map<std::string, int> index;
  for (const ordered_json& vm : j["vms"]) {
    std::string id = vm.get<std::string>();
    index.emplace(id, static_cast<int>(r.vms.size()));
    r.vms.push_back(std::move(id));
  }
  auto vm_index = [&](const ordered_json& v, const char* key) {
    std::string id = v.at(key).get<std::string>();
    auto it = index.find(id);
    if (it == index.end()) throw std::invalid_argument("unknown VM reference '" + id + "'");
    return it->second;
  };
  if (j.contains("uplinks")) {
    for (const ordered_json& u : j["uplinks"]) {
      r.uplinks.push_back({vm_index(u, "vm"), rational_field(u, "bw")});
    }
  }
  if (j.contains("chatter")) {
    for (const ordered_json& c : j["chatter"]) {
      int a = vm_index(c, "a");
      int b = vm_index(c, "b");
      if (a > b) std::swap(a, b);
      r.chatter.push_back({a, b, rational_field(c, "bw")});
    }
  }
  validate_request(r);
  return r;
}

std::string request_to_json(const RequestGraph& r) {
  ordered_json j;
  j["vms"] = r.vms;
  ordered_json uplinks = ordered_json::array();
  for (const RequestGraph::Uplink& u : r.uplinks) {
    uplinks.push_back({{"vm", r.vms[u.vm]}, {"bw", u.bw.str()}});
  }
  j["uplinks"] = std::move(uplinks);
  ordered_json chatter = ordered_json::array();
  for (const RequestGraph::Chatter& c : r.chatter) {
    chatter.push_back({{"a", r.vms[c.a]}, {"b", r.vms[c.b]}, {"bw", c.bw.str()}});
  }
  j["chatter"] = std::move(chatter);
  return j.dump(2) + "\n";
}

Embedding embedding_from_json(const std::string& text, const RequestGraph& r) {
  ordered_json j = parse_json(text, "embedding");
  if (!j.contains("assignment") || !j["assignment"].is_object()) {
    throw std::invalid_argument("embedding JSON needs an 'assignment' object");
  }
  Embedding e;
  e.vm_to_leaf.resize(r.k());
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < r.k(); ++i) index.emplace(r.vms[i], i);
  for (const auto& [vm, leaf] : j["assignment"].items()) {
    auto it = index.find(vm);
    if (it == index.end()) throw std::invalid_argument("unknown VM reference '" + vm + "'");
    e.vm_to_leaf[it->second] = leaf.get<std::string>();
  }
  return e;
}

std::string embedding_to_json(const RequestGraph& r, const Embedding& e,
                              const Rational* congestion) {
  ordered_json j;
  if (congestion != nullptr) j["congestion"] = congestion->str();
  ordered_json assignment = ordered_json::object();
  for (int i = 0; i < r.k(); ++i) assignment[r.vms[i]] = e.vm_to_leaf[i];
  j["assignment"] = std::move(assignment);
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace vmemb
