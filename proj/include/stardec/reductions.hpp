#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "stardec/graph.hpp"

namespace stardec {

// Unary bin packing: a_i items of weight w_i into m bins of capacity B.
struct BinPackingInstance {
  std::vector<long long> weights;  // strictly increasing after normalization
  std::vector<long long> counts;
  long long bins = 0;
  long long bin_size = 0;

  long long total() const {
    long long t = 0;
    for (size_t i = 0; i < weights.size(); ++i) t += weights[i] * counts[i];
    return t;
  }
};

// Sorts and merges the weight list, then pads with unit items so that the
// totals match B*m exactly; every bin then fills to exactly B in any
// solution. Overfull instances are rejected.
inline BinPackingInstance normalize_bp(const BinPackingInstance& bp) {
  if (bp.bins < 1 || bp.bin_size < 1) throw parse_error("bin packing: m and B must be positive");
  if (bp.weights.size() != bp.counts.size())
    throw parse_error("bin packing: weights/counts length mismatch");
  std::vector<std::pair<long long, long long>> items;
  for (size_t i = 0; i < bp.weights.size(); ++i) {
    if (bp.weights[i] < 1 || bp.counts[i] < 1)
      throw parse_error("bin packing: weights and counts must be positive");
    items.push_back({bp.weights[i], bp.counts[i]});
  }
  std::sort(items.begin(), items.end());
  BinPackingInstance out;
  out.bins = bp.bins;
  out.bin_size = bp.bin_size;
  for (auto [w, c] : items) {
    if (!out.weights.empty() && out.weights.back() == w)
      out.counts.back() += c;
    else {
      out.weights.push_back(w);
      out.counts.push_back(c);
    }
  }
  long long pad = out.bins * out.bin_size - out.total();
  if (pad < 0) throw wrong_case_error("bin packing: items exceed total bin capacity");
  if (pad > 0) {
    if (!out.weights.empty() && out.weights.front() == 1) {
      out.counts.front() += pad;
    } else {
      out.weights.insert(out.weights.begin(), 1);
      out.counts.insert(out.counts.begin(), pad);
    }
  }
  return out;
}

namespace detail {

// Exact feasibility by filling bins one at a time with sub-multisets summing
// to exactly B, memoized on the remaining count vector (the open bin count is
// determined by the remaining total).
inline bool bp_fill(const BinPackingInstance& bp, std::vector<long long>& left,
                    std::map<std::vector<long long>, bool>& memo) {
  long long rest = 0;
  for (size_t i = 0; i < left.size(); ++i) rest += left[i] * bp.weights[i];
  if (rest == 0) return true;
  if (auto it = memo.find(left); it != memo.end()) return it->second;
  std::vector<long long> take(left.size(), 0);
  bool ok = false;
  auto choose = [&](auto&& self, size_t i, long long need) -> bool {
    if (need == 0) {
      for (size_t k = 0; k < left.size(); ++k) left[k] -= take[k];
      bool r = bp_fill(bp, left, memo);
      for (size_t k = 0; k < left.size(); ++k) left[k] += take[k];
      return r;
    }
    if (i == left.size()) return false;
    long long most = std::min(left[i], need / bp.weights[i]);
    for (long long c = most; c >= 0; --c) {
      take[i] = c;
      if (self(self, i + 1, need - c * bp.weights[i])) {
        take[i] = 0;
        return true;
      }
    }
    take[i] = 0;
    return false;
  };
  ok = choose(choose, 0, bp.bin_size);
  memo[left] = ok;
  return ok;
}

}  // namespace detail

// Exact packing answer for a normalized instance.
inline bool bp_feasible(const BinPackingInstance& bp) {
  if (bp.total() != bp.bins * bp.bin_size)
    throw std::invalid_argument("bp_feasible: instance not normalized");
  std::vector<long long> left = bp.counts;
  std::map<std::vector<long long>, bool> memo;
  return detail::bp_fill(bp, left, memo);
}

// A generated instance plus its independently computed expected answer.
struct GeneratedInstance {
  Instance instance;
  std::optional<bool> expected;
};

// Bin packing -> star decomposition on K_{m, B(m+1)}: item weights scale to
// star lengths s_i = (m+1) w_i, so all centers are forced into the m-side and
// each center's load is exactly one bin.
inline GeneratedInstance binpacking_to_kmn(const BinPackingInstance& raw) {
  BinPackingInstance bp = normalize_bp(raw);
  long long m = bp.bins, B = bp.bin_size;
  long long n = B * (m + 1);
  if (m * n > 2'000'000) throw wrong_case_error("reduction image too large");
  for (long long w : bp.weights)
    if ((m + 1) * w > 1'000'000'000) throw wrong_case_error("scaled star length overflows");
  std::vector<std::pair<int, int>> pairs;
  for (long long x = 0; x < m; ++x)
    for (long long y = 0; y < n; ++y)
      pairs.push_back({static_cast<int>(x), static_cast<int>(m + y)});
  GeneratedInstance out;
  out.instance.graph = Graph::from_pairs(static_cast<int>(m + n), pairs);
  std::vector<long long> s;
  for (long long w : bp.weights) s.push_back((m + 1) * w);
  out.instance.spec = StarSpec::normalized(s, bp.counts);
  out.expected = bp_feasible(bp);
  return out;
}

// Bin packing -> star decomposition on a depth-2 tree: the root takes the
// unique star of length l = max(m, B+2); each of u_1..u_m keeps exactly B
// child edges, one bin each.
inline GeneratedInstance binpacking_to_tree(const BinPackingInstance& raw) {
  BinPackingInstance bp = normalize_bp(raw);
  long long m = bp.bins, B = bp.bin_size;
  for (long long w : bp.weights)
    if (w > B) throw wrong_case_error("tree reduction requires w_i <= B");
  long long ell = std::max(m, B + 2);
  // Root 0; children 1..ell; u_1..u_m get B leaves each.
  std::vector<std::pair<int, int>> pairs;
  for (long long i = 1; i <= ell; ++i) pairs.push_back({0, static_cast<int>(i)});
  int next = static_cast<int>(ell) + 1;
  for (long long i = 1; i <= m; ++i)
    for (long long k = 0; k < B; ++k) pairs.push_back({static_cast<int>(i), next++});
  GeneratedInstance out;
  out.instance.graph = Graph::from_pairs(next, pairs);
  std::vector<long long> s = bp.weights;
  std::vector<long long> a = bp.counts;
  s.push_back(ell);  // ell >= B+2 > w_i: no merge with existing lengths
  a.push_back(1);
  out.instance.spec = StarSpec::normalized(s, a);
  out.expected = bp_feasible(bp);
  return out;
}

// Branching search for an independent set of the given size.
inline bool has_independent_set(const Graph& g, long long k) {
  if (k <= 0) return true;
  if (k > g.n) return false;
  std::vector<std::vector<char>> adj(g.n, std::vector<char>(g.n, 0));
  for (const Edge& e : g.edges) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  std::vector<char> alive(g.n, 1);
  auto rec = [&](auto&& self, int from, long long need, int alive_count) -> bool {
    if (need == 0) return true;
    if (alive_count < need) return false;
    int v = -1;
    for (int u = from; u < g.n; ++u)
      if (alive[u]) {
        v = u;
        break;
      }
    if (v == -1) return false;
    // Include v.
    std::vector<int> removed;
    alive[v] = 0;
    removed.push_back(v);
    for (int u = 0; u < g.n; ++u)
      if (alive[u] && adj[v][u]) {
        alive[u] = 0;
        removed.push_back(u);
      }
    if (self(self, v + 1, need - 1, alive_count - static_cast<int>(removed.size()))) {
      for (int u : removed) alive[u] = 1;
      return true;
    }
    for (int u : removed) alive[u] = 1;
    // Exclude v.
    alive[v] = 0;
    bool ok = self(self, v + 1, need, alive_count - 1);
    alive[v] = 1;
    return ok;
  };
  return rec(rec, 0, k, g.n);
}

// Independent set -> star decomposition on the same cubic graph with
// s = (1, 3), a = (3n/2 - 3k, k).
inline GeneratedInstance indepset_to_stardec(const Graph& g, long long k) {
  auto deg = degrees(g);
  for (long long d : deg)
    if (d != 3) throw wrong_case_error("independent-set reduction requires a 3-regular graph");
  long long m = g.edge_count();
  long long ones = m - 3 * k;
  if (ones < 0) throw wrong_case_error("k too large: negative singleton count");
  GeneratedInstance out;
  out.instance.graph = g;
  std::vector<long long> s, a;
  if (ones > 0) {
    s.push_back(1);
    a.push_back(ones);
  }
  if (k > 0) {
    s.push_back(3);
    a.push_back(k);
  }
  if (s.empty()) {
    // k = 0 on an edgeless cubic graph cannot happen (degrees are 3).
    throw wrong_case_error("empty spec");
  }
  out.instance.spec = StarSpec::normalized(s, a);
  if (g.n <= 20) out.expected = has_independent_set(g, k);
  return out;
}

// ---------------------------------------------------------------------------
// Seeded random instance generation. All draws go through the engine
// directly so the same seed reproduces the same bytes.

namespace detail {

inline long long draw(std::mt19937_64& gen, long long n) {
  return static_cast<long long>(gen() % static_cast<unsigned long long>(n));
}

inline StarSpec random_spec(long long edges, long long max_s, std::mt19937_64& gen) {
  std::map<long long, long long> hist;
  long long left = edges;
  while (left > 0) {
    long long len = 1 + draw(gen, std::min(max_s, left));
    hist[len] += 1;
    left -= len;
  }
  std::vector<long long> s, a;
  for (auto [len, cnt] : hist) {
    s.push_back(len);
    a.push_back(cnt);
  }
  return StarSpec::normalized(s, a);
}

}  // namespace detail

// Kinds: gnm, complete, complete_bipartite, tree_depth_2, cubic. Params are
// kind-specific; max_s bounds the random spec's star lengths (default 4).
inline Instance gen_random(const std::string& kind,
                           const std::map<std::string, long long>& params, uint64_t seed) {
  std::mt19937_64 gen(seed);
  auto param = [&](const std::string& name, long long fallback) {
    auto it = params.find(name);
    return it == params.end() ? fallback : it->second;
  };
  long long max_s = param("max_s", 4);
  Instance inst;
  if (kind == "gnm") {
    long long n = param("n", 8), m = param("m", 10);
    long long pairs = n * (n - 1) / 2;
    if (n < 2 || m < 1 || m > pairs) throw parse_error("gnm: infeasible parameters");
    std::set<std::pair<int, int>> chosen;
    while (static_cast<long long>(chosen.size()) < m) {
      int u = static_cast<int>(detail::draw(gen, n));
      int v = static_cast<int>(detail::draw(gen, n));
      if (u != v) chosen.insert(std::minmax(u, v));
    }
    inst.graph = Graph::from_pairs(static_cast<int>(n), {chosen.begin(), chosen.end()});
  } else if (kind == "complete") {
    long long n = param("n", 6);
    if (n < 2) throw parse_error("complete: n must be at least 2");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    inst.graph = Graph::from_pairs(static_cast<int>(n), pairs);
  } else if (kind == "complete_bipartite") {
    long long a = param("a", 3), b = param("b", 4);
    if (a < 1 || b < 1) throw parse_error("complete_bipartite: parts must be nonempty");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j) pairs.push_back({i, static_cast<int>(a) + j});
    inst.graph = Graph::from_pairs(static_cast<int>(a + b), pairs);
  } else if (kind == "tree_depth_2") {
    long long children = param("children", 4), max_leaves = param("max_leaves", 3);
    if (children < 1 || max_leaves < 0) throw parse_error("tree_depth_2: bad parameters");
    std::vector<std::pair<int, int>> pairs;
    int next = 1 + static_cast<int>(children);
    for (long long c = 1; c <= children; ++c) {
      pairs.push_back({0, static_cast<int>(c)});
      long long leaves = detail::draw(gen, max_leaves + 1);
      for (long long l = 0; l < leaves; ++l) pairs.push_back({static_cast<int>(c), next++});
    }
    inst.graph = Graph::from_pairs(next, pairs);
  } else if (kind == "cubic") {
    long long n = param("n", 8);
    if (n < 4 || n % 2 != 0) throw parse_error("cubic: n must be even and at least 4");
    for (int attempt = 0; attempt < 2000; ++attempt) {
      std::vector<int> stubs;
      for (long long v = 0; v < n; ++v)
        for (int k = 0; k < 3; ++k) stubs.push_back(static_cast<int>(v));
      for (size_t i = stubs.size(); i > 1; --i)
        std::swap(stubs[i - 1], stubs[detail::draw(gen, static_cast<long long>(i))]);
      std::set<std::pair<int, int>> chosen;
      bool ok = true;
      for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
        int u = stubs[i], v = stubs[i + 1];
        if (u == v || chosen.count(std::minmax(u, v))) {
          ok = false;
          break;
        }
        chosen.insert(std::minmax(u, v));
      }
      if (ok) {
        inst.graph = Graph::from_pairs(static_cast<int>(n), {chosen.begin(), chosen.end()});
        break;
      }
    }
    if (inst.graph.n == 0) throw parse_error("cubic: pairing failed, try another seed");
  } else {
    throw parse_error("unknown generator kind: " + kind);
  }
  inst.spec = detail::random_spec(inst.graph.edge_count(), max_s, gen);
  return inst;
}

}  // namespace stardec
