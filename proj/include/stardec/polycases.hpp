#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>
#include <string>
#include <vector>

#include "stardec/graph.hpp"

namespace stardec {

// Per-component edge count and parity; the s <= 2 solver decides on these.
struct ComponentStat {
  int component = 0;
  long long edge_count = 0;
  bool odd = false;
};

namespace detail {

// Pairs the edges of each component into incident pairs (length-2 stars) by
// iterative DFS post-order propagation; an odd component leaves exactly one
// unpaired edge at its root, returned as a length-1 star.
struct P2Pairing {
  std::vector<Star> two_stars;      // emission order
  std::vector<Star> leftover_ones;  // one per odd component
};

inline P2Pairing pair_into_p2(const Graph& g) {
  std::vector<std::pair<int, int>> edge_list;
  for (const Edge& e : g.edges)
    for (long long k = 0; k < e.mult; ++k) edge_list.push_back({e.u, e.v});
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);  // (other, edge id)
  for (int id = 0; id < static_cast<int>(edge_list.size()); ++id) {
    adj[edge_list[id].first].push_back({edge_list[id].second, id});
    adj[edge_list[id].second].push_back({edge_list[id].first, id});
  }

  P2Pairing out;
  std::vector<char> vis_vertex(g.n, 0), used_edge(edge_list.size(), 0);

  struct Frame {
    int v;
    int parent_vertex;  // -1 at a component root
    size_t adj_pos = 0;
    std::vector<int> pending;  // other-endpoints of unpaired edges at v
  };

  for (int root = 0; root < g.n; ++root) {
    if (vis_vertex[root]) continue;
    vis_vertex[root] = 1;
    std::vector<Frame> stack;
    stack.push_back(Frame{root, -1});
    while (!stack.empty()) {
      Frame& f = stack.back();
      bool descended = false;
      while (f.adj_pos < adj[f.v].size()) {
        auto [u, id] = adj[f.v][f.adj_pos];
        ++f.adj_pos;
        if (used_edge[id]) continue;
        used_edge[id] = 1;
        if (!vis_vertex[u]) {
          vis_vertex[u] = 1;
          stack.push_back(Frame{u, f.v});
          descended = true;
          break;
        }
        f.pending.push_back(u);  // back edge, resolved at the deeper endpoint
      }
      if (descended) continue;

      Frame done = std::move(stack.back());
      stack.pop_back();
      size_t i = 0;
      for (; i + 1 < done.pending.size(); i += 2)
        out.two_stars.push_back(Star{done.v, {done.pending[i], done.pending[i + 1]}});
      bool leftover = i < done.pending.size();
      if (done.parent_vertex < 0) {
        if (leftover) out.leftover_ones.push_back(Star{done.v, {done.pending[i]}});
      } else if (leftover) {
        // Close the pair with the tree edge up to the parent.
        out.two_stars.push_back(Star{done.v, {done.pending[i], done.parent_vertex}});
      } else {
        // Tree edge stays unpaired; the parent resolves it.
        stack.back().pending.push_back(done.v);
      }
    }
  }
  return out;
}

}  // namespace detail

inline std::vector<ComponentStat> component_stats(const Graph& g) {
  int count = 0;
  auto comp = connected_components(g, &count);
  std::vector<ComponentStat> stats(count);
  for (int c = 0; c < count; ++c) stats[c].component = c;
  for (const Edge& e : g.edges) stats[comp[e.u]].edge_count += e.mult;
  for (auto& s : stats) s.odd = (s.edge_count % 2) != 0;
  return stats;
}

// Polynomial case s <= 2: YES iff the number of odd-edge-count components is
// at most a_1. On YES, removes one edge per odd component, pairs the rest
// into length-2 stars, then splits surplus pairs to hit the exact counts.
inline SolveReport solve_s_le_2(const Instance& inst) {
  auto t0 = std::chrono::steady_clock::now();
  if (inst.spec.max_length() > 2) throw wrong_case_error("wrong case: max star length exceeds 2");
  if (!inst.size_matches()) return make_no("poly_s_le_2", "size mismatch");

  long long a1 = inst.spec.count_of(1);
  long long a2 = inst.spec.count_of(2);
  auto stats = component_stats(inst.graph);
  long long odd_count = 0;
  for (const auto& s : stats)
    if (s.odd) ++odd_count;

  // Sanity: a_1 and the odd-component count always share parity when the dot
  // product matches.
  if (((a1 - odd_count) % 2 + 2) % 2 != 0)
    throw std::logic_error("s<=2: parity lemma violated");

  if (odd_count > a1)
    return make_no("poly_s_le_2", "odd components (" + std::to_string(odd_count) +
                                      ") exceed a_1 (" + std::to_string(a1) + ")");

  detail::P2Pairing pairing = detail::pair_into_p2(inst.graph);
  if (static_cast<long long>(pairing.leftover_ones.size()) != odd_count)
    throw std::logic_error("s<=2: pairing left a wrong number of single edges");

  long long split = (a1 - odd_count) / 2;
  StarDecomposition dec;
  dec.stars = pairing.leftover_ones;
  for (size_t i = 0; i < pairing.two_stars.size(); ++i) {
    const Star& p2 = pairing.two_stars[i];
    if (static_cast<long long>(i) < split) {
      dec.stars.push_back(Star{p2.center, {p2.leaves[0]}});
      dec.stars.push_back(Star{p2.center, {p2.leaves[1]}});
    } else {
      dec.stars.push_back(p2);
    }
  }

  long long ones = 0, twos = 0;
  for (const Star& s : dec.stars) (s.leaves.size() == 1 ? ones : twos) += 1;
  if (ones != a1 || twos != a2) throw std::logic_error("s<=2: star counts off after splitting");
  if (auto why = verify_explain(inst, dec))
    throw std::logic_error("s<=2: invalid witness constructed: " + *why);

  SolveReport rep;
  rep.answer = Answer::Yes;
  rep.witness = std::move(dec);
  rep.algorithm = "poly_s_le_2";
  rep.stats.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

// Polynomial case max degree 3, spec exactly (s, a) = ((3), (|E|/3)): YES iff
// every component with edges is bipartite and has a side whose vertices all
// have degree 3; that side centers the stars.
inline SolveReport solve_cubic_k13(const Instance& inst) {
  auto t0 = std::chrono::steady_clock::now();
  const Graph& g = inst.graph;
  auto deg = degrees(g);
  for (int v = 0; v < g.n; ++v)
    if (deg[v] > 3) throw wrong_case_error("wrong case: maximum degree exceeds 3");
  if (inst.spec.size() != 1 || inst.spec.lengths[0] != 3)
    throw wrong_case_error("wrong case: spec is not a single length 3");
  if (!inst.size_matches()) return make_no("poly_cubic_k13", "size mismatch");

  auto colors_opt = bipartition(g);
  if (!colors_opt) return make_no("poly_cubic_k13", "graph is not bipartite");
  const auto& colors = *colors_opt;
  int comp_count = 0;
  auto comp = connected_components(g, &comp_count);

  std::vector<char> comp_has_edge(comp_count, 0);
  for (const Edge& e : g.edges) comp_has_edge[comp[e.u]] = 1;
  // all_deg3[c][color]: does that side of component c have only degree-3
  // vertices?
  std::vector<std::array<char, 2>> all_deg3(comp_count, {1, 1});
  for (int v = 0; v < g.n; ++v)
    if (deg[v] != 3) all_deg3[comp[v]][colors[v]] = 0;

  std::vector<int> side_of(comp_count, -1);
  for (int c = 0; c < comp_count; ++c) {
    if (!comp_has_edge[c]) continue;
    // Color 0 is the side of the lowest-indexed vertex in the component.
    if (all_deg3[c][0])
      side_of[c] = 0;
    else if (all_deg3[c][1])
      side_of[c] = 1;
    else
      return make_no("poly_cubic_k13",
                     "component " + std::to_string(c) + " has no all-degree-3 side");
  }

  auto adj = adjacency(g);
  StarDecomposition dec;
  for (int v = 0; v < g.n; ++v) {
    int c = comp[v];
    if (side_of[c] != colors[v] || !comp_has_edge[c]) continue;
    Star star;
    star.center = v;
    for (auto [w, id] : adj[v])
      for (long long k = 0; k < g.edges[id].mult; ++k) star.leaves.push_back(w);
    std::sort(star.leaves.begin(), star.leaves.end());
    dec.stars.push_back(std::move(star));
  }
  if (auto why = verify_explain(inst, dec))
    throw std::logic_error("cubic_k13: invalid witness constructed: " + *why);

  SolveReport rep;
  rep.answer = Answer::Yes;
  rep.witness = std::move(dec);
  rep.algorithm = "poly_cubic_k13";
  rep.stats.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace stardec
