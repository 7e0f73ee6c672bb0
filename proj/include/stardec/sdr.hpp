#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "stardec/flow.hpp"

namespace stardec {

// System-of-disjoint-representatives instance: pick eta(i) elements from each
// set F_i, all picks disjoint.
struct SdrInstance {
  int ground = 0;                        // elements are 0..ground-1
  std::vector<std::vector<int>> family;  // F_i as element lists
  std::vector<long long> demand;         // eta(i) >= 1, parallel to family
};

struct SdrResult {
  std::optional<std::vector<std::vector<int>>> sets;
  // On failure: indices J with |union of F_j| < sum of eta(j), from the
  // min cut. The same certificate is the lazy-separation cut for ILP2.
  std::vector<int> violating_family;
  long long augmentations = 0;
};

inline SdrResult find_sdr(const SdrInstance& inst) {
  if (inst.family.size() != inst.demand.size())
    throw std::invalid_argument("family/demand size mismatch");
  long long total = 0;
  for (size_t i = 0; i < inst.family.size(); ++i) {
    if (inst.demand[i] < 1) throw std::invalid_argument("eta must be positive");
    for (int e : inst.family[i])
      if (e < 0 || e >= inst.ground) throw std::invalid_argument("element out of ground set");
    total += inst.demand[i];
  }

  FlowNetwork net;
  int source = net.add_node();
  int sink = net.add_node();
  std::vector<int> setnode(inst.family.size());
  std::vector<int> elemnode(inst.ground, -1);
  for (size_t i = 0; i < inst.family.size(); ++i) setnode[i] = net.add_node();
  for (int e = 0; e < inst.ground; ++e) elemnode[e] = net.add_node();
  long long big = total + 1;  // set->element arcs never bind the cut
  std::vector<std::vector<int>> pick_handle(inst.family.size());
  for (size_t i = 0; i < inst.family.size(); ++i) {
    net.add_arc(source, setnode[i], inst.demand[i]);
    for (int e : inst.family[i]) pick_handle[i].push_back(net.add_arc(setnode[i], elemnode[e], big));
  }
  for (int e = 0; e < inst.ground; ++e) net.add_arc(elemnode[e], sink, 1);

  SdrResult res;
  long long flow = net.run(source, sink);
  res.augmentations = net.augmentations;
  if (flow == total) {
    std::vector<std::vector<int>> sets(inst.family.size());
    for (size_t i = 0; i < inst.family.size(); ++i)
      for (size_t k = 0; k < inst.family[i].size(); ++k)
        if (net.flow_on(pick_handle[i][k]) > 0) sets[i].push_back(inst.family[i][k]);
    res.sets = std::move(sets);
    return res;
  }
  std::vector<char> side = net.reachable_from(source);
  for (size_t i = 0; i < inst.family.size(); ++i)
    if (side[setnode[i]]) res.violating_family.push_back(static_cast<int>(i));
  return res;
}

// Reference check: the Hall-type condition for every subfamily J. Family
// count must stay enumeration-sized.
inline bool sdr_condition_holds(const SdrInstance& inst, std::vector<int>* violating = nullptr) {
  size_t k = inst.family.size();
  if (k > 20) throw wrong_case_error("family too large for subfamily enumeration");
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<char> in_union(inst.ground, 0);
    long long need = 0;
    for (size_t i = 0; i < k; ++i)
      if (mask >> i & 1) {
        need += inst.demand[i];
        for (int e : inst.family[i]) in_union[e] = 1;
      }
    long long have = std::count(in_union.begin(), in_union.end(), 1);
    if (have < need) {
      if (violating)
        for (size_t i = 0; i < k; ++i)
          if (mask >> i & 1) violating->push_back(static_cast<int>(i));
      return false;
    }
  }
  return true;
}

}  // namespace stardec
