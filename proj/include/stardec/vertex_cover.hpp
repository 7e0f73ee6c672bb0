#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "stardec/graph.hpp"

namespace stardec {

namespace detail {

inline bool vc_branch(const std::vector<std::pair<int, int>>& edges, size_t from,
                      std::vector<char>& chosen, int k, std::vector<int>& out) {
  size_t i = from;
  while (i < edges.size() && (chosen[edges[i].first] || chosen[edges[i].second])) ++i;
  if (i == edges.size()) {
    out.clear();
    for (size_t v = 0; v < chosen.size(); ++v)
      if (chosen[v]) out.push_back(static_cast<int>(v));
    return true;
  }
  if (k == 0) return false;
  auto [u, v] = edges[i];
  chosen[u] = 1;
  if (vc_branch(edges, i + 1, chosen, k - 1, out)) return true;
  chosen[u] = 0;
  chosen[v] = 1;
  if (vc_branch(edges, i + 1, chosen, k - 1, out)) return true;
  chosen[v] = 0;
  return false;
}

}  // namespace detail

// Minimum vertex cover by the classic 2^k branching on an uncovered edge,
// searched by increasing k up to the cap. Parallel edges are irrelevant.
inline std::optional<std::vector<int>> min_vertex_cover(const Graph& g, int cap = 12) {
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : g.edges) edges.push_back({e.u, e.v});
  std::vector<int> out;
  for (int k = 0; k <= cap; ++k) {
    std::vector<char> chosen(g.n, 0);
    if (detail::vc_branch(edges, 0, chosen, k, out)) return out;
  }
  return std::nullopt;
}

inline bool is_vertex_cover(const Graph& g, const std::vector<int>& cover) {
  std::vector<char> in(g.n, 0);
  for (int v : cover) {
    if (v < 0 || v >= g.n) return false;
    in[v] = 1;
  }
  for (const Edge& e : g.edges)
    if (!in[e.u] && !in[e.v]) return false;
  return true;
}

}  // namespace stardec
