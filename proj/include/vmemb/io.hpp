#pragma once

#include <string>

#include "vmemb/embedding.hpp"
#include "vmemb/request.hpp"
#include "vmemb/topology.hpp"

namespace vmemb {

/// JSON schemas (bandwidths and capacities are decimal strings in Gbps,
/// or "unbounded" for capacities; integer JSON numbers are also accepted):
///
///   topology: { "root": id, "nodes": [ { "id", "parent", "capacity",
///               "vm_slots" } ] } — the root entry omits parent/capacity.
///   request:  { "vms": [ids], "uplinks": [{ "vm", "bw" }],
///               "chatter": [{ "a", "b", "bw" }] }
///   embedding:{ "congestion": decimal-or-fraction string,
///               "assignment": { vm: leaf-id } }
Topology topology_from_json(const std::string& text);
std::string topology_to_json(const Topology& t);

RequestGraph request_from_json(const std::string& text);
std::string request_to_json(const RequestGraph& r);

Embedding embedding_from_json(const std::string& text, const RequestGraph& r);
std::string embedding_to_json(const RequestGraph& r, const Embedding& e,
                              const Rational* congestion);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace vmemb
