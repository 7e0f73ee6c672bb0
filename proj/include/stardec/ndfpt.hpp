#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "stardec/expansion.hpp"
#include "stardec/graph.hpp"
#include "stardec/ilp_builders.hpp"

namespace stardec {

// Type partition: u ~ v iff N(u)\{v} = N(v)\{u}. Classes are cliques or
// independent sets and are pairwise complete or incomplete.
struct NdDecomposition {
  std::vector<std::vector<int>> classes;    // each sorted; ordered (size desc, min vertex)
  std::vector<bool> clique;                 // class type; singletons count as cliques
  std::vector<std::vector<char>> complete;  // class-level adjacency
};

inline NdDecomposition nd_decompose(const Graph& g) {
  std::vector<std::vector<int>> nbr(g.n);
  for (const Edge& e : g.edges) {
    nbr[e.u].push_back(e.v);
    nbr[e.v].push_back(e.u);
  }
  for (auto& list : nbr) std::sort(list.begin(), list.end());
  auto same_type = [&](int u, int v) {
    std::vector<int> a, b;
    for (int x : nbr[u])
      if (x != v) a.push_back(x);
    for (int x : nbr[v])
      if (x != u) b.push_back(x);
    return a == b;
  };
  std::vector<int> cls(g.n, -1);
  int count = 0;
  for (int u = 0; u < g.n; ++u) {
    if (cls[u] != -1) continue;
    cls[u] = count;
    for (int v = u + 1; v < g.n; ++v)
      if (cls[v] == -1 && same_type(u, v)) cls[v] = count;
    ++count;
  }
  std::vector<std::vector<int>> classes(count);
  for (int v = 0; v < g.n; ++v) classes[cls[v]].push_back(v);
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a[0] < b[0];
  });

  NdDecomposition nd;
  nd.classes = std::move(classes);
  std::vector<int> class_of(g.n, -1);
  for (size_t c = 0; c < nd.classes.size(); ++c)
    for (int v : nd.classes[c]) class_of[v] = static_cast<int>(c);
  nd.clique.assign(nd.classes.size(), true);
  nd.complete.assign(nd.classes.size(), std::vector<char>(nd.classes.size(), 0));
  std::vector<std::vector<long long>> cross(nd.classes.size(),
                                            std::vector<long long>(nd.classes.size(), 0));
  for (const Edge& e : g.edges) {
    int a = class_of[e.u], b = class_of[e.v];
    if (a == b) continue;
    cross[a][b] += 1;
    cross[b][a] += 1;
  }
  for (size_t c = 0; c < nd.classes.size(); ++c) {
    if (nd.classes[c].size() >= 2) {
      // Type is read off one internal pair; the relation makes it uniform.
      int u = nd.classes[c][0], v = nd.classes[c][1];
      nd.clique[c] = std::binary_search(nbr[u].begin(), nbr[u].end(), v);
      long long internal = 0;
      for (const Edge& e : g.edges)
        if (class_of[e.u] == static_cast<int>(c) && class_of[e.v] == static_cast<int>(c))
          ++internal;
      long long size = static_cast<long long>(nd.classes[c].size());
      long long want = nd.clique[c] ? size * (size - 1) / 2 : 0;
      if (internal != want) throw std::logic_error("nd: class is neither clique nor independent");
    }
  }
  for (size_t a = 0; a < nd.classes.size(); ++a)
    for (size_t b = a + 1; b < nd.classes.size(); ++b) {
      long long want =
          static_cast<long long>(nd.classes[a].size()) * nd.classes[b].size();
      if (cross[a][b] != 0 && cross[a][b] != want)
        throw std::logic_error("nd: classes neither complete nor incomplete");
      nd.complete[a][b] = nd.complete[b][a] = cross[a][b] == want && want > 0;
    }
  return nd;
}

// One output block of the class grouping: either a clique class or a union of
// classes carrying a spanning complete bipartite subgraph with sides X, Y.
struct GroupBlock {
  std::vector<int> vertices;  // sorted original ids
  bool is_complete = false;   // clique block (step-4 branch)
  std::vector<int> side_x, side_y;
};

struct GroupingPlan {
  std::vector<GroupBlock> blocks;
  std::vector<int> b0;  // stable leftover, no edges to any block
};

// Groups the big classes (size >= threshold) over the class graph: pick a
// tree vertex whose children are all leaves, block it with its children,
// absorb a lone leftover root; isolated clique classes become their own
// blocks, isolated independent classes form B_0.
inline GroupingPlan build_grouping(const NdDecomposition& nd, long long threshold) {
  if (threshold < 1) throw std::invalid_argument("threshold must be positive");
  GroupingPlan plan;
  std::vector<int> big;
  for (size_t c = 0; c < nd.classes.size(); ++c)
    if (static_cast<long long>(nd.classes[c].size()) >= threshold)
      big.push_back(static_cast<int>(c));

  std::vector<char> used(nd.classes.size(), 0);
  std::vector<int> isolated;
  for (size_t bi = 0; bi < big.size(); ++bi) {
    if (used[big[bi]]) continue;
    // BFS component of the class graph restricted to big classes.
    std::vector<int> comp{big[bi]};
    used[big[bi]] = 1;
    std::vector<int> parent{-1};
    for (size_t head = 0; head < comp.size(); ++head) {
      for (int other : big) {
        if (used[other]) continue;
        if (nd.complete[comp[head]][other]) {
          used[other] = 1;
          comp.push_back(other);
          parent.push_back(static_cast<int>(head));
        }
      }
    }
    if (comp.size() == 1) {
      isolated.push_back(comp[0]);
      continue;
    }
    // BFS tree bookkeeping over component-local indices.
    std::vector<std::vector<int>> children(comp.size());
    std::vector<int> depth(comp.size(), 0);
    for (size_t i = 1; i < comp.size(); ++i) {
      children[parent[i]].push_back(static_cast<int>(i));
      depth[i] = depth[parent[i]] + 1;
    }
    std::vector<char> alive(comp.size(), 1);
    size_t remaining = comp.size();
    while (remaining > 0) {
      // Deepest alive internal vertex whose alive children are all leaves.
      int pick = -1;
      for (size_t i = 0; i < comp.size(); ++i) {
        if (!alive[i]) continue;
        bool has_child = false, all_leaves = true;
        for (int ch : children[i]) {
          if (!alive[ch]) continue;
          has_child = true;
          bool leaf = true;
          for (int gr : children[ch])
            if (alive[gr]) leaf = false;
          if (!leaf) all_leaves = false;
        }
        if (!has_child || !all_leaves) continue;
        if (pick == -1 || depth[i] > depth[pick] ||
            (depth[i] == depth[pick] && comp[i] < comp[pick]))
          pick = static_cast<int>(i);
      }
      if (pick == -1) throw std::logic_error("grouping: no tree vertex with leaf children");
      GroupBlock block;
      for (int v : nd.classes[comp[pick]]) block.side_x.push_back(v);
      alive[pick] = 0;
      --remaining;
      for (int ch : children[pick]) {
        if (!alive[ch]) continue;
        for (int v : nd.classes[comp[ch]]) block.side_y.push_back(v);
        alive[ch] = 0;
        --remaining;
      }
      if (remaining == 1 && alive[0]) {
        // Only the root is left; it is the parent of the picked vertex and
        // complete to its class, so it joins the bipartite side.
        for (int v : nd.classes[comp[0]]) block.side_y.push_back(v);
        alive[0] = 0;
        --remaining;
      }
      block.vertices = block.side_x;
      block.vertices.insert(block.vertices.end(), block.side_y.begin(), block.side_y.end());
      std::sort(block.vertices.begin(), block.vertices.end());
      std::sort(block.side_x.begin(), block.side_x.end());
      std::sort(block.side_y.begin(), block.side_y.end());
      plan.blocks.push_back(std::move(block));
    }
  }
  for (int c : isolated) {
    if (nd.clique[c]) {
      GroupBlock block;
      block.vertices = nd.classes[c];
      block.is_complete = true;
      plan.blocks.push_back(std::move(block));
    } else {
      plan.b0.insert(plan.b0.end(), nd.classes[c].begin(), nd.classes[c].end());
    }
  }
  std::sort(plan.b0.begin(), plan.b0.end());
  return plan;
}

// Contraction of each block into one vertex b_i, carrying |E(B_i)| pendant
// edges; cross edges merge into multiplicities and remember their originals.
struct ContractedInstance {
  Graph graph;
  std::vector<int> cover;          // small-class vertices plus the b_i
  std::vector<int> untouched;      // original ids, id in G~ = index
  std::vector<int> block_vertex;   // G~ id per block
  int first_pendant = 0;
  std::vector<long long> pendant_count;
  // Per contracted edge key (min,max in G~ ids): the original G edges.
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> originals;
};

inline ContractedInstance contract(const Graph& g, const GroupingPlan& plan) {
  if (!g.is_simple()) throw wrong_case_error("contract: input must be simple");
  ContractedInstance out;
  std::vector<int> block_of(g.n, -1);
  for (size_t b = 0; b < plan.blocks.size(); ++b)
    for (int v : plan.blocks[b].vertices) block_of[v] = static_cast<int>(b);
  std::vector<char> in_b0(g.n, 0);
  for (int v : plan.b0) in_b0[v] = 1;

  std::vector<int> gid(g.n, -1);
  for (int v = 0; v < g.n; ++v)
    if (block_of[v] < 0) {
      gid[v] = static_cast<int>(out.untouched.size());
      out.untouched.push_back(v);
    }
  int next = static_cast<int>(out.untouched.size());
  for (size_t b = 0; b < plan.blocks.size(); ++b) out.block_vertex.push_back(next++);
  out.first_pendant = next;

  out.pendant_count.assign(plan.blocks.size(), 0);
  std::map<std::pair<int, int>, long long> mult;
  for (const Edge& e : g.edges) {
    int bu = block_of[e.u], bv = block_of[e.v];
    if (bu >= 0 && bu == bv) {
      out.pendant_count[bu] += 1;
      continue;
    }
    if ((bu >= 0 && in_b0[e.v]) || (bv >= 0 && in_b0[e.u]))
      throw std::logic_error("contract: edge between B_0 and a block");
    int a = bu >= 0 ? out.block_vertex[bu] : gid[e.u];
    int b = bv >= 0 ? out.block_vertex[bv] : gid[e.v];
    auto key = std::minmax(a, b);
    mult[key] += 1;
    out.originals[key].push_back({e.u, e.v});
  }
  Graph gt;
  gt.n = next;
  for (long long p : out.pendant_count) gt.n += static_cast<int>(p);
  for (const auto& [key, m] : mult) gt.edges.push_back(Edge{key.first, key.second, m});
  int pend = out.first_pendant;
  for (size_t b = 0; b < plan.blocks.size(); ++b)
    for (long long k = 0; k < out.pendant_count[b]; ++k)
      gt.edges.push_back(Edge{std::min(out.block_vertex[b], pend),
                              std::max(out.block_vertex[b], pend++), 1});
  std::sort(gt.edges.begin(), gt.edges.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  out.graph = std::move(gt);
  if (out.graph.edge_count() != g.edge_count())
    throw std::logic_error("contract: edge count changed");

  for (size_t i = 0; i < out.untouched.size(); ++i)
    if (!in_b0[out.untouched[i]]) out.cover.push_back(static_cast<int>(i));
  for (int bv : out.block_vertex) out.cover.push_back(bv);
  // Cover sanity: every contracted edge must touch it, parallels inside it.
  {
    std::vector<char> inc(out.graph.n, 0);
    for (int c : out.cover) inc[c] = 1;
    for (const Edge& e : out.graph.edges) {
      if (!inc[e.u] && !inc[e.v]) throw std::logic_error("contract: cover misses an edge");
      if (e.mult > 1 && (!inc[e.u] || !inc[e.v]))
        throw std::logic_error("contract: parallel edge crosses the cover");
    }
  }
  return out;
}

// Full pipeline: type partition, grouping, contraction, cover solve on the
// contracted multigraph, then per-block expander lifts stitched back into a
// witness on the original graph.
inline SolveReport ndfpt_solve(const Instance& inst, long long threshold,
                               const SearchBudget& budget = {}) {
  auto t0 = std::chrono::steady_clock::now();
  const Graph& g = inst.graph;
  if (!g.is_simple()) throw wrong_case_error("ndfpt: multigraph input is out of scope");
  long long s_max = inst.spec.max_length();
  if (threshold < 4 * s_max)
    throw wrong_case_error("ndfpt: threshold below 4*max star length");
  if (!inst.size_matches()) return make_no("ndfpt", "size mismatch");

  NdDecomposition nd = nd_decompose(g);
  bool any_big = false;
  for (const auto& cls : nd.classes)
    if (static_cast<long long>(cls.size()) >= threshold) any_big = true;
  if (!any_big) {
    SolveReport rep = solve_ilp1(inst, budget);
    rep.algorithm = "ndfpt";
    rep.reason = rep.reason.empty() ? "ilp1 fallback: no class reaches the threshold"
                                    : rep.reason + " (ilp1 fallback)";
    return rep;
  }

  GroupingPlan plan = build_grouping(nd, threshold);
  ContractedInstance ct = contract(g, plan);

  // Every block must carry a certified expansion bound >= max star length.
  std::vector<Rational> block_bound;
  for (const GroupBlock& blk : plan.blocks) {
    Graph sub = induced_subgraph(g, blk.vertices);
    std::optional<Rational> bound = expansion_lower_bound(sub);
    if (!bound) {
      bound = blk.is_complete
                  ? Rational::of(static_cast<long long>(blk.vertices.size()), 2)
                  : Rational::of(static_cast<long long>(
                                     std::min(blk.side_x.size(), blk.side_y.size())),
                                 4);
    }
    if (*bound < Rational::of(s_max, 1))
      throw std::logic_error("ndfpt: block misses the expansion precondition");
    block_bound.push_back(*bound);
  }

  Instance contracted;
  contracted.graph = ct.graph;
  contracted.spec = inst.spec;
  SolveReport inner = solve_ilp2(contracted, ct.cover, budget);
  SolveReport rep;
  rep.algorithm = "ndfpt";
  rep.stats.nodes = inner.stats.nodes;
  rep.stats.augmentations = inner.stats.augmentations;
  if (inner.answer != Answer::Yes) {
    rep.answer = inner.answer;
    rep.reason = inner.answer == Answer::No ? "contracted instance infeasible" : inner.reason;
    rep.stats.millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  }

  // ---- Lift ----
  StarDecomposition tilde = *inner.witness;
  size_t nblocks = plan.blocks.size();
  std::vector<int> block_of_tilde(ct.graph.n, -1);
  for (size_t b = 0; b < nblocks; ++b) block_of_tilde[ct.block_vertex[b]] = static_cast<int>(b);
  std::vector<int> pendant_block(ct.graph.n, -1);
  {
    int pend = ct.first_pendant;
    for (size_t b = 0; b < nblocks; ++b)
      for (long long k = 0; k < ct.pendant_count[b]; ++k) pendant_block[pend++] = static_cast<int>(b);
  }

  // Length-1 stars centered at a pendant vertex cover the pendant edge from
  // the wrong side; re-center them at the block vertex (same edge).
  for (Star& star : tilde.stars) {
    if (pendant_block[star.center] >= 0) {
      if (star.leaves.size() != 1 || block_of_tilde[star.leaves[0]] < 0)
        throw std::logic_error("ndfpt: pendant star is not a pendant edge");
      std::swap(star.center, star.leaves[0]);
    }
  }

  // Count, per block, the out-copies toward each neighbor in G~.
  std::vector<std::map<int, long long>> out_copies(nblocks);
  std::vector<long long> pendant_out(nblocks, 0);
  std::vector<std::vector<long long>> block_lengths(nblocks);
  for (const Star& star : tilde.stars) {
    int b = block_of_tilde[star.center];
    if (b < 0) continue;
    block_lengths[b].push_back(static_cast<long long>(star.leaves.size()));
    for (int leaf : star.leaves) {
      if (pendant_block[leaf] >= 0) {
        if (pendant_block[leaf] != b) throw std::logic_error("ndfpt: foreign pendant leaf");
        pendant_out[b] += 1;
      } else {
        out_copies[b][leaf] += 1;
      }
    }
  }
  for (size_t b = 0; b < nblocks; ++b)
    if (pendant_out[b] != ct.pendant_count[b])
      throw std::logic_error("ndfpt: pendant edges not all covered at the block vertex");

  // Allocate original edges per contracted cross edge: the block-side stars
  // take the first copies, the rest substitute for leaves on the other side.
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> rest_queue = ct.originals;
  std::vector<std::vector<std::pair<int, int>>> block_out(nblocks);  // (inside x, outside orig)
  for (size_t b = 0; b < nblocks; ++b) {
    int bv = ct.block_vertex[b];
    for (auto& [nbr_id, copies] : out_copies[b]) {
      auto key = std::minmax(bv, nbr_id);
      auto& queue = rest_queue[key];
      if (static_cast<long long>(queue.size()) < copies)
        throw std::logic_error("ndfpt: more out-copies than edge multiplicity");
      std::vector<char> inside_b(g.n, 0);
      for (int v : plan.blocks[b].vertices) inside_b[v] = 1;
      for (long long k = 0; k < copies; ++k) {
        auto [ou, ov] = queue.front();
        queue.erase(queue.begin());
        int x = inside_b[ou] ? ou : ov;
        int w = inside_b[ou] ? ov : ou;
        block_out[b].push_back({x, w});
      }
    }
  }

  // Stitch the stars not centered at block vertices, substituting original
  // endpoints for block-vertex leaves.
  StarDecomposition final_dec;
  for (const Star& star : tilde.stars) {
    if (block_of_tilde[star.center] >= 0) continue;
    if (pendant_block[star.center] >= 0) throw std::logic_error("ndfpt: stray pendant star");
    Star mapped;
    mapped.center = ct.untouched[star.center];
    for (int leaf : star.leaves) {
      int b = block_of_tilde[leaf];
      if (b < 0) {
        mapped.leaves.push_back(ct.untouched[leaf]);
        continue;
      }
      auto key = std::minmax(star.center, leaf);
      auto& queue = rest_queue[key];
      if (queue.empty()) throw std::logic_error("ndfpt: leaf substitution queue empty");
      auto [ou, ov] = queue.front();
      queue.erase(queue.begin());
      // The original endpoint inside the block replaces the leaf.
      mapped.leaves.push_back(ou == mapped.center ? ov : ou);
    }
    final_dec.stars.push_back(std::move(mapped));
  }
  for (auto& [key, queue] : rest_queue)
    if (!queue.empty() && (block_of_tilde[key.first] >= 0 || block_of_tilde[key.second] >= 0) &&
        pendant_block[key.first] < 0 && pendant_block[key.second] < 0)
      throw std::logic_error("ndfpt: cross-edge originals left unassigned");

  // Per-block lift: G_i is the block subgraph plus its outward-oriented
  // originals; external endpoints form the stable set.
  for (size_t b = 0; b < nblocks; ++b) {
    if (block_lengths[b].empty() && ct.pendant_count[b] == 0 && block_out[b].empty()) continue;
    std::vector<int> verts = plan.blocks[b].vertices;
    std::vector<int> externals;
    for (auto [x, w] : block_out[b]) externals.push_back(w);
    std::sort(externals.begin(), externals.end());
    externals.erase(std::unique(externals.begin(), externals.end()), externals.end());
    std::vector<int> all = verts;
    all.insert(all.end(), externals.begin(), externals.end());
    std::sort(all.begin(), all.end());
    std::vector<int> local(g.n, -1);
    for (size_t i = 0; i < all.size(); ++i) local[all[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> pairs;
    std::vector<char> inside(g.n, 0);
    for (int v : verts) inside[v] = 1;
    for (const Edge& e : g.edges)
      if (inside[e.u] && inside[e.v]) pairs.push_back({local[e.u], local[e.v]});
    for (auto [x, w] : block_out[b]) pairs.push_back({local[x], local[w]});
    Instance block_inst;
    block_inst.graph = Graph::from_pairs(static_cast<int>(all.size()), pairs);
    if (block_lengths[b].empty())
      throw std::logic_error("ndfpt: block has edges but no stars");
    std::map<long long, long long> hist;
    for (long long len : block_lengths[b]) hist[len] += 1;
    std::vector<long long> ls, as;
    for (auto [len, cnt] : hist) {
      ls.push_back(len);
      as.push_back(cnt);
    }
    block_inst.spec = StarSpec::normalized(ls, as);
    if (!block_inst.size_matches())
      throw std::logic_error("ndfpt: block stars do not match block edges");
    std::vector<int> stable_local;
    for (int w : externals) stable_local.push_back(local[w]);
    ExpanderOptions opts;
    opts.certified_phi = block_bound[b];
    SolveReport lifted = expander_solve(block_inst, stable_local, opts);
    if (lifted.answer != Answer::Yes)
      throw std::logic_error("ndfpt: expander lift failed on a certified block");
    for (const Star& star : lifted.witness->stars) {
      Star mapped;
      mapped.center = all[star.center];
      for (int leaf : star.leaves) mapped.leaves.push_back(all[leaf]);
      final_dec.stars.push_back(std::move(mapped));
    }
    rep.stats.augmentations += lifted.stats.augmentations;
  }

  if (auto why = verify_explain(inst, final_dec))
    throw std::logic_error("ndfpt: invalid stitched witness: " + *why);
  rep.answer = Answer::Yes;
  rep.witness = std::move(final_dec);
  rep.stats.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace stardec
