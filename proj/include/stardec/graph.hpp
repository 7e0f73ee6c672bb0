#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stardec {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A solver was invoked outside its precondition ("wrong case").
struct wrong_case_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A solver needs a certificate (e.g. an expansion bound) it could not obtain.
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unordered edge, u < v, with positive multiplicity (1 for simple graphs).
struct Edge {
  int u = 0;
  int v = 0;
  long long mult = 1;
};

// Loopless (multi)graph on dense vertex ids 0..n-1. Edges are stored as
// unique sorted pairs; parallel edges are carried by the multiplicity.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;

  static Graph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs,
                          const std::vector<long long>& mults = {}) {
    if (n < 0) throw parse_error("vertex count is negative");
    if (!mults.empty() && mults.size() != pairs.size())
      throw parse_error("multiplicity array length does not match edge list");
    std::map<std::pair<int, int>, long long> acc;
    for (size_t i = 0; i < pairs.size(); ++i) {
      int a = pairs[i].first, b = pairs[i].second;
      if (a == b) throw parse_error("self-loop on vertex " + std::to_string(a));
      if (a < 0 || b < 0 || a >= n || b >= n)
        throw parse_error("edge endpoint out of range: (" + std::to_string(a) + "," +
                          std::to_string(b) + ")");
      long long m = mults.empty() ? 1 : mults[i];
      if (m < 1) throw parse_error("edge multiplicity must be positive");
      acc[std::minmax(a, b)] += m;
    }
    Graph g;
    g.n = n;
    g.edges.reserve(acc.size());
    for (const auto& [uv, m] : acc) g.edges.push_back(Edge{uv.first, uv.second, m});
    return g;
  }

  long long edge_count() const {
    long long m = 0;
    for (const Edge& e : edges) m += e.mult;
    return m;
  }

  bool is_simple() const {
    for (const Edge& e : edges)
      if (e.mult != 1) return false;
    return true;
  }
};

// Adjacency as (neighbor, edge index) lists, multiplicity not expanded.
inline std::vector<std::vector<std::pair<int, int>>> adjacency(const Graph& g) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    adj[g.edges[i].u].push_back({g.edges[i].v, i});
    adj[g.edges[i].v].push_back({g.edges[i].u, i});
  }
  return adj;
}

// Per-vertex degree counted with multiplicity.
inline std::vector<long long> degrees(const Graph& g) {
  std::vector<long long> deg(g.n, 0);
  for (const Edge& e : g.edges) {
    deg[e.u] += e.mult;
    deg[e.v] += e.mult;
  }
  return deg;
}

// Component id per vertex, ids assigned in order of lowest contained vertex.
inline std::vector<int> connected_components(const Graph& g, int* count = nullptr) {
  auto adj = adjacency(g);
  std::vector<int> comp(g.n, -1);
  int c = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [w, id] : adj[v])
        if (comp[w] == -1) {
          comp[w] = c;
          stack.push_back(w);
        }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

// Two-coloring (0/1 per vertex) if bipartite, else nullopt. The lowest vertex
// of every component gets color 0.
inline std::optional<std::vector<int>> bipartition(const Graph& g) {
  auto adj = adjacency(g);
  std::vector<int> color(g.n, -1);
  std::vector<int> queue;
  for (int s = 0; s < g.n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.push_back(s);
    size_t head = queue.size() - 1;
    while (head < queue.size()) {
      int v = queue[head++];
      for (auto [w, id] : adj[v]) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

// Induced subgraph on `verts`; `back` maps new ids to original ids.
inline Graph induced_subgraph(const Graph& g, std::vector<int> verts,
                              std::vector<int>* back = nullptr) {
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<int> fwd(g.n, -1);
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) fwd[verts[i]] = i;
  Graph h;
  h.n = static_cast<int>(verts.size());
  for (const Edge& e : g.edges)
    if (fwd[e.u] >= 0 && fwd[e.v] >= 0) h.edges.push_back(Edge{fwd[e.u], fwd[e.v], e.mult});
  if (back) *back = verts;
  return h;
}

// Star lengths and how many stars of each length the decomposition must use.
struct StarSpec {
  std::vector<long long> lengths;  // strictly increasing, all >= 1
  std::vector<long long> counts;   // parallel to lengths, all >= 1

  size_t size() const { return lengths.size(); }

  long long total() const {
    long long t = 0;
    for (size_t i = 0; i < lengths.size(); ++i) t += lengths[i] * counts[i];
    return t;
  }

  long long max_length() const { return lengths.empty() ? 0 : lengths.back(); }

  long long count_of(long long len) const {
    auto it = std::lower_bound(lengths.begin(), lengths.end(), len);
    if (it == lengths.end() || *it != len) return 0;
    return counts[it - lengths.begin()];
  }

  // Sorts by length and merges duplicate lengths by summing counts.
  // Sets *changed when the input was not already in canonical form.
  static StarSpec normalized(const std::vector<long long>& lengths,
                             const std::vector<long long>& counts, bool* changed = nullptr) {
    if (lengths.size() != counts.size()) throw parse_error("s and a have different lengths");
    if (lengths.empty()) throw parse_error("star spec is empty");
    std::vector<std::pair<long long, long long>> items;
    for (size_t i = 0; i < lengths.size(); ++i) {
      if (lengths[i] < 1) throw parse_error("star length must be positive");
      if (counts[i] < 1) throw parse_error("star count must be positive");
      items.push_back({lengths[i], counts[i]});
    }
    std::stable_sort(items.begin(), items.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    StarSpec spec;
    for (const auto& [len, cnt] : items) {
      if (!spec.lengths.empty() && spec.lengths.back() == len)
        spec.counts.back() += cnt;
      else {
        spec.lengths.push_back(len);
        spec.counts.push_back(cnt);
      }
    }
    if (changed)
      *changed = !(spec.lengths.size() == lengths.size() &&
                   std::is_sorted(lengths.begin(), lengths.end()) &&
                   std::adjacent_find(lengths.begin(), lengths.end()) == lengths.end());
    return spec;
  }
};

// One problem instance: a graph plus the star spec it must decompose into.
struct Instance {
  Graph graph;
  StarSpec spec;
  bool spec_normalized = false;        // loader merged/sorted the spec
  std::vector<std::string> labels;     // original vertex labels; empty = identity

  // Necessary condition dot(s, a) == |E|; violations are immediate NOs.
  bool size_matches() const { return spec.total() == graph.edge_count(); }
};

struct Star {
  int center = 0;
  std::vector<int> leaves;  // multiset; repeats allowed up to edge multiplicity
};

struct StarDecomposition {
  std::vector<Star> stars;
};

enum class Answer { Yes, No, Unknown };

inline const char* answer_name(Answer a) {
  switch (a) {
    case Answer::Yes: return "YES";
    case Answer::No: return "NO";
    default: return "UNKNOWN";
  }
}

struct SolveStats {
  long long nodes = 0;
  long long augmentations = 0;
  double millis = 0.0;
};

struct SolveReport {
  Answer answer = Answer::Unknown;
  std::optional<StarDecomposition> witness;
  std::string algorithm;
  std::string reason;
  SolveStats stats;
};

inline SolveReport make_no(const std::string& algorithm, const std::string& reason) {
  SolveReport r;
  r.answer = Answer::No;
  r.algorithm = algorithm;
  r.reason = reason;
  return r;
}

inline SolveReport make_unknown(const std::string& algorithm, const std::string& reason) {
  SolveReport r;
  r.answer = Answer::Unknown;
  r.algorithm = algorithm;
  r.reason = reason;
  return r;
}

// First invariant a decomposition violates against the instance, or nullopt
// if it is a valid witness. Malformed input (ids out of range) throws; that
// is an error, not a "false".
inline std::optional<std::string> verify_explain(const Instance& inst,
                                                 const StarDecomposition& dec) {
  const Graph& g = inst.graph;
  for (const Star& s : dec.stars) {
    if (s.center < 0 || s.center >= g.n)
      throw parse_error("star center " + std::to_string(s.center) + " out of range");
    for (int leaf : s.leaves)
      if (leaf < 0 || leaf >= g.n)
        throw parse_error("star leaf " + std::to_string(leaf) + " out of range");
  }
  std::map<std::pair<int, int>, long long> mult;
  for (const Edge& e : g.edges) mult[{e.u, e.v}] = e.mult;
  std::map<std::pair<int, int>, long long> covered;
  for (const Star& s : dec.stars) {
    for (int leaf : s.leaves) {
      if (leaf == s.center)
        return "star at " + std::to_string(s.center) + " uses a self-loop";
      auto key = std::minmax(s.center, leaf);
      if (!mult.count(key))
        return "pair (" + std::to_string(key.first) + "," + std::to_string(key.second) +
               ") is not an edge";
      covered[key] += 1;
    }
  }
  for (const Edge& e : g.edges) {
    long long c = 0;
    if (auto it = covered.find({e.u, e.v}); it != covered.end()) c = it->second;
    if (c != e.mult)
      return "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") covered " +
             std::to_string(c) + " times, multiplicity " + std::to_string(e.mult);
  }
  std::map<long long, long long> hist;
  for (const Star& s : dec.stars) hist[static_cast<long long>(s.leaves.size())] += 1;
  std::map<long long, long long> want;
  for (size_t i = 0; i < inst.spec.size(); ++i) want[inst.spec.lengths[i]] = inst.spec.counts[i];
  if (hist != want) return "length histogram mismatch";
  return std::nullopt;
}

inline bool verify(const Instance& inst, const StarDecomposition& dec) {
  return !verify_explain(inst, dec).has_value();
}

// Canonical form: leaves sorted, length-1 stars centered at their lower
// endpoint (K_{1,1} has no distinguished center), stars sorted. Two
// decompositions are the same witness iff their canonical forms are equal.
inline StarDecomposition canonical(const StarDecomposition& dec) {
  StarDecomposition out = dec;
  for (Star& s : out.stars) {
    std::sort(s.leaves.begin(), s.leaves.end());
    if (s.leaves.size() == 1 && s.leaves[0] < s.center) std::swap(s.leaves[0], s.center);
  }
  std::sort(out.stars.begin(), out.stars.end(), [](const Star& a, const Star& b) {
    if (a.center != b.center) return a.center < b.center;
    return a.leaves < b.leaves;
  });
  return out;
}

inline std::string canonical_key(const StarDecomposition& dec) {
  StarDecomposition c = canonical(dec);
  std::string key;
  for (const Star& s : c.stars) {
    key += std::to_string(s.center);
    key += ':';
    for (int leaf : s.leaves) {
      key += std::to_string(leaf);
      key += ',';
    }
    key += ';';
  }
  return key;
}

}  // namespace stardec
