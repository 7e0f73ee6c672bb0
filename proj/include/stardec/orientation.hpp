#pragma once

#include <optional>
#include <vector>

#include "stardec/flow.hpp"
#include "stardec/graph.hpp"

namespace stardec {

// Per edge of the graph: how many copies are oriented from the lower to the
// higher endpoint. Simple graphs use 0/1.
struct Orientation {
  std::vector<long long> out_of_low;

  // Out-degree of every vertex under this orientation.
  static std::vector<long long> out_degrees(const Graph& g, const Orientation& o) {
    std::vector<long long> d(g.n, 0);
    for (size_t i = 0; i < g.edges.size(); ++i) {
      d[g.edges[i].u] += o.out_of_low[i];
      d[g.edges[i].v] += g.edges[i].mult - o.out_of_low[i];
    }
    return d;
  }
};

struct OrientResult {
  std::optional<Orientation> orientation;
  // On failure: a vertex set A with more internal edges than total requested
  // out-degree (equivalently delta(A) > |E(A, V\A)|), read off the min cut.
  // Empty together with sum_mismatch when the total out-degree is off.
  std::vector<int> violating_set;
  bool sum_mismatch = false;
  long long augmentations = 0;
};

// Orientation with prescribed out-degrees via flow: source -> edge node
// (cap mult) -> endpoints (cap mult) -> sink (cap d_plus[v]). An edge copy is
// oriented out of the endpoint that absorbed its flow unit.
inline OrientResult orient_with_outdegrees(const Graph& g, const std::vector<long long>& d_plus) {
  OrientResult res;
  if (static_cast<int>(d_plus.size()) != g.n)
    throw std::invalid_argument("out-degree vector length mismatch");
  long long total = 0;
  for (long long d : d_plus) {
    if (d < 0) throw std::invalid_argument("negative out-degree requested");
    total += d;
  }
  if (total != g.edge_count()) {
    res.sum_mismatch = true;
    return res;
  }

  FlowNetwork net;
  int source = net.add_node();
  int sink = net.add_node();
  std::vector<int> vnode(g.n);
  for (int v = 0; v < g.n; ++v) vnode[v] = net.add_node();
  std::vector<int> to_u(g.edges.size()), to_v(g.edges.size());
  for (size_t i = 0; i < g.edges.size(); ++i) {
    int enode = net.add_node();
    net.add_arc(source, enode, g.edges[i].mult);
    to_u[i] = net.add_arc(enode, vnode[g.edges[i].u], g.edges[i].mult);
    to_v[i] = net.add_arc(enode, vnode[g.edges[i].v], g.edges[i].mult);
  }
  for (int v = 0; v < g.n; ++v) net.add_arc(vnode[v], sink, d_plus[v]);

  long long flow = net.run(source, sink);
  res.augmentations = net.augmentations;
  if (flow == g.edge_count()) {
    Orientation o;
    o.out_of_low.resize(g.edges.size());
    for (size_t i = 0; i < g.edges.size(); ++i) o.out_of_low[i] = net.flow_on(to_u[i]);
    res.orientation = std::move(o);
    return res;
  }
  std::vector<char> side = net.reachable_from(source);
  for (int v = 0; v < g.n; ++v)
    if (side[vnode[v]]) res.violating_set.push_back(v);
  return res;
}

struct OrientConditions {
  bool ok = false;
  bool sum_mismatch = false;
  std::vector<int> violating_set;  // first subset A with delta(A) > |E(A, V\A)| if any
};

// Checks the two orientation-existence conditions by explicit subset
// enumeration: delta(V) = 0 and delta(A) <= |E(A, V\A)| for every A, where
// delta(i) = deg(i) - 2*d_plus(i).
inline OrientConditions check_orient_conditions(const Graph& g,
                                                const std::vector<long long>& d_plus,
                                                int cap = 16) {
  if (g.n > cap) throw wrong_case_error("subset enumeration cap exceeded");
  if (static_cast<int>(d_plus.size()) != g.n)
    throw std::invalid_argument("out-degree vector length mismatch");
  OrientConditions out;
  auto deg = degrees(g);
  long long delta_total = 0;
  for (int v = 0; v < g.n; ++v) delta_total += deg[v] - 2 * d_plus[v];
  if (delta_total != 0) {
    out.sum_mismatch = true;
    return out;
  }
  for (unsigned mask = 1; mask + 1 < (1u << g.n); ++mask) {
    long long delta = 0;
    for (int v = 0; v < g.n; ++v)
      if (mask >> v & 1) delta += deg[v] - 2 * d_plus[v];
    long long cross = 0;
    for (const Edge& e : g.edges)
      if (((mask >> e.u) & 1) != ((mask >> e.v) & 1)) cross += e.mult;
    if (delta > cross) {
      for (int v = 0; v < g.n; ++v)
        if (mask >> v & 1) out.violating_set.push_back(v);
      return out;
    }
  }
  out.ok = true;
  return out;
}

}  // namespace stardec
