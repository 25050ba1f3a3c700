#include "vmemb/request.hpp"

#include <set>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace vmemb {

void validate_request(const RequestGraph& r) {
  if (r.vms.empty()) throw std::invalid_argument("request has no VMs");

  std::unordered_set<std::string> ids;
  for (const std::string& vm : r.vms) {
    if (!ids.insert(vm).second) throw std::invalid_argument("duplicate VM id '" + vm + "'");
  }

  std::unordered_set<int> uplinked;
  for (const RequestGraph::Uplink& u : r.uplinks) {
    if (u.vm < 0 || u.vm >= r.k()) throw std::invalid_argument("uplink references unknown VM");
    if (!uplinked.insert(u.vm).second) {
      throw std::invalid_argument("duplicate uplink for VM '" + r.vms[u.vm] + "'");
    }
    if (!(Rational(0) < u.bw)) throw std::invalid_argument("nonpositive bandwidth on uplink");
  }

  std::set<std::pair<int, int>> seen;
  for (const RequestGraph::Chatter& c : r.chatter) {
    if (c.a < 0 || c.a >= r.k() || c.b < 0 || c.b >= r.k()) {
      throw std::invalid_argument("chatter references unknown VM");
    }
    if (c.a == c.b) {
      throw std::invalid_argument("self-loop chatter edge on VM '" + r.vms[c.a] + "'");
    }
    if (c.a > c.b) throw std::invalid_argument("chatter endpoints not normalized (a < b)");
    if (!seen.insert({c.a, c.b}).second) {
      throw std::invalid_argument("duplicate chatter edge between '" + r.vms[c.a] + "' and '" +
                                  r.vms[c.b] + "'");
    }
    if (!(Rational(0) < c.bw)) throw std::invalid_argument("nonpositive bandwidth on chatter edge");
  }
}

FlowTable build_flow_table(const RequestGraph& r) {
  validate_request(r);
  if (r.k() > kSubsetLimit) {
    throw std::invalid_argument("request size k=" + std::to_string(r.k()) +
                                " exceeds the subset limit of " + std::to_string(kSubsetLimit));
  }

  FlowTable table(r.k());
  const VmSubset end = table.full_set();
  for (VmSubset s = 0;; ++s) {
    Rational flow = 0;
    for (const RequestGraph::Uplink& u : r.uplinks) {
      if (s >> u.vm & 1) flow += u.bw;
    }
    for (const RequestGraph::Chatter& c : r.chatter) {
      if ((s >> c.a & 1) != (s >> c.b & 1)) flow += c.bw;
    }
    table[s] = flow;
    if (s == end) break;
  }
  return table;
}

}  // namespace vmemb
