#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "stardec/graph.hpp"
#include "stardec/ilp.hpp"
#include "stardec/orientation.hpp"
#include "stardec/sdr.hpp"

namespace stardec {

// ---------------------------------------------------------------------------
// Whole-graph model: x_{i,u} stars of length s_i at u, y_e the orientation of
// edge e (copies oriented low -> high). One count row per length, one
// out-degree row per vertex.

struct Ilp1Build {
  IlpModel model;
  std::vector<int> xvar;  // i * n + u
  std::vector<int> yvar;  // parallel to graph.edges
};

inline Ilp1Build build_ilp1(const Instance& inst) {
  const Graph& g = inst.graph;
  if (g.edge_count() == 0) throw wrong_case_error("ILP1: instance has no edges");
  size_t d = inst.spec.size();
  Ilp1Build out;
  auto deg = degrees(g);
  out.xvar.assign(d * g.n, -1);
  for (size_t i = 0; i < d; ++i)
    for (int u = 0; u < g.n; ++u) {
      long long ub = std::min(inst.spec.counts[i], deg[u] / inst.spec.lengths[i]);
      out.xvar[i * g.n + u] =
          out.model.add_var(0, ub, "x_" + std::to_string(i) + "_" + std::to_string(u));
    }
  for (size_t e = 0; e < g.edges.size(); ++e)
    out.yvar.push_back(out.model.add_var(0, g.edges[e].mult,
                                         "y_" + std::to_string(g.edges[e].u) + "_" +
                                             std::to_string(g.edges[e].v)));
  for (size_t i = 0; i < d; ++i) {
    std::vector<std::pair<int, long long>> terms;
    for (int u = 0; u < g.n; ++u) terms.push_back({out.xvar[i * g.n + u], 1});
    out.model.add_row(std::move(terms), Rel::Eq, inst.spec.counts[i],
                      "count_" + std::to_string(i));
  }
  for (int u = 0; u < g.n; ++u) {
    std::vector<std::pair<int, long long>> terms;
    for (size_t i = 0; i < d; ++i)
      terms.push_back({out.xvar[i * g.n + u], inst.spec.lengths[i]});
    long long rhs = 0;
    for (size_t e = 0; e < g.edges.size(); ++e) {
      if (g.edges[e].u == u)
        terms.push_back({out.yvar[e], -1});
      else if (g.edges[e].v == u) {
        terms.push_back({out.yvar[e], 1});
        rhs += g.edges[e].mult;
      }
    }
    out.model.add_row(std::move(terms), Rel::Eq, rhs, "outdeg_" + std::to_string(u));
  }
  return out;
}

namespace detail {

// Chops each vertex's sorted out-neighbor list into stars, longest first.
inline void chop_stars(int center, const std::vector<int>& out_list,
                       const std::vector<std::pair<long long, long long>>& length_counts,
                       StarDecomposition& dec) {
  size_t pos = 0;
  for (auto it = length_counts.rbegin(); it != length_counts.rend(); ++it) {
    for (long long k = 0; k < it->second; ++k) {
      Star star;
      star.center = center;
      for (long long l = 0; l < it->first; ++l) {
        if (pos >= out_list.size()) throw std::logic_error("extract: out-list underflow");
        star.leaves.push_back(out_list[pos++]);
      }
      dec.stars.push_back(std::move(star));
    }
  }
  if (pos != out_list.size()) throw std::logic_error("extract: out-list not fully consumed");
}

}  // namespace detail

inline StarDecomposition extract_ilp1(const Instance& inst, const Ilp1Build& build,
                                      const std::vector<long long>& values) {
  const Graph& g = inst.graph;
  size_t d = inst.spec.size();
  std::vector<std::vector<int>> out(g.n);
  for (size_t e = 0; e < g.edges.size(); ++e) {
    long long low = values[build.yvar[e]];
    for (long long k = 0; k < low; ++k) out[g.edges[e].u].push_back(g.edges[e].v);
    for (long long k = 0; k < g.edges[e].mult - low; ++k) out[g.edges[e].v].push_back(g.edges[e].u);
  }
  StarDecomposition dec;
  for (int u = 0; u < g.n; ++u) {
    std::sort(out[u].begin(), out[u].end());
    std::vector<std::pair<long long, long long>> lc;
    for (size_t i = 0; i < d; ++i)
      lc.push_back({inst.spec.lengths[i], values[build.xvar[i * g.n + u]]});
    detail::chop_stars(u, out[u], lc, dec);
  }
  return dec;
}

// Orientation variables are completed by flow once the star placement is
// fixed: the residual subsystem is exactly orientation with prescribed
// out-degrees, which value enumeration handles poorly.
inline DeferredBlock make_ilp1_block(const Instance& inst, const Ilp1Build& build) {
  DeferredBlock block;
  block.vars = build.yvar;
  const Graph* g = &inst.graph;
  const StarSpec* spec = &inst.spec;
  const std::vector<int>* xvar = &build.xvar;
  block.complete = [g, spec, xvar](const std::vector<long long>& vals)
      -> std::optional<std::vector<long long>> {
    std::vector<long long> target(g->n, 0);
    for (size_t i = 0; i < spec->size(); ++i)
      for (int u = 0; u < g->n; ++u) target[u] += spec->lengths[i] * vals[(*xvar)[i * g->n + u]];
    OrientResult res = orient_with_outdegrees(*g, target);
    if (!res.orientation) return std::nullopt;
    return res.orientation->out_of_low;
  };
  return block;
}

inline SolveReport solve_ilp1(const Instance& inst, const SearchBudget& budget = {}) {
  auto t0 = std::chrono::steady_clock::now();
  if (!inst.size_matches()) return make_no("ilp1", "size mismatch");
  Ilp1Build build = build_ilp1(inst);
  DeferredBlock block = make_ilp1_block(inst, build);
  FeasResult res = solve_feasibility(build.model, budget, &block);
  SolveReport rep;
  rep.algorithm = "ilp1";
  rep.stats.nodes = res.nodes;
  if (res.status == FeasStatus::Unknown) {
    rep.answer = Answer::Unknown;
    rep.reason = "budget exhausted";
  } else if (res.status == FeasStatus::Infeasible) {
    rep.answer = Answer::No;
    rep.reason = "model infeasible";
  } else {
    rep.answer = Answer::Yes;
    rep.witness = extract_ilp1(inst, build, res.values);
    if (auto why = verify_explain(inst, *rep.witness))
      throw std::logic_error("ilp1: invalid witness constructed: " + *why);
  }
  rep.stats.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

// ---------------------------------------------------------------------------
// Vertex-cover model: stars at cover vertices (x), orientation inside the
// cover (y), and per-(b, T) counts of independent-side vertices hosting b
// stars with out-neighborhood exactly T (z). Of the doubly-exponential family
// constraints only the singleton rows are materialized; the rest are
// separated lazily via the SDR min-cut certificate.

struct VcContext {
  std::vector<int> cover;       // sorted original vertex ids
  std::vector<int> s_vertices;  // sorted original vertex ids of S = V \ C
  int vc = 0;
  size_t d_prime = 0;                     // lengths with s_i <= vc
  std::vector<long long> d_u;             // |E(u, S)| per cover index
  std::vector<unsigned> nmask;            // per S index: N(v) as cover mask
  std::vector<std::vector<int>> n_t;      // per T mask: S indices with T subseteq N(v)
  std::vector<std::vector<std::vector<long long>>> b_lists;  // per t: b vectors (size d')
};

inline VcContext make_vc_context(const Instance& inst, std::vector<int> cover) {
  const Graph& g = inst.graph;
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
  VcContext ctx;
  ctx.cover = cover;
  ctx.vc = static_cast<int>(cover.size());
  if (ctx.vc > 16) throw wrong_case_error("ILP2: cover too large");
  std::vector<int> cidx(g.n, -1);
  for (int i = 0; i < ctx.vc; ++i) {
    if (cover[i] < 0 || cover[i] >= g.n) throw parse_error("cover vertex out of range");
    cidx[cover[i]] = i;
  }
  for (int v = 0; v < g.n; ++v)
    if (cidx[v] < 0) ctx.s_vertices.push_back(v);
  std::vector<int> sidx(g.n, -1);
  for (size_t i = 0; i < ctx.s_vertices.size(); ++i) sidx[ctx.s_vertices[i]] = static_cast<int>(i);

  ctx.d_u.assign(ctx.vc, 0);
  ctx.nmask.assign(ctx.s_vertices.size(), 0);
  for (const Edge& e : g.edges) {
    bool cu = cidx[e.u] >= 0, cv = cidx[e.v] >= 0;
    if (!cu && !cv) throw wrong_case_error("ILP2: not a vertex cover");
    if (cu && cv) continue;
    if (e.mult != 1)
      throw wrong_case_error("ILP2: parallel edges must lie inside the cover");
    int c = cu ? cidx[e.u] : cidx[e.v];
    int s = cu ? sidx[e.v] : sidx[e.u];
    ctx.d_u[c] += 1;
    ctx.nmask[s] |= 1u << c;
  }

  ctx.n_t.assign(1u << ctx.vc, {});
  for (unsigned t = 0; t < (1u << ctx.vc); ++t)
    for (size_t s = 0; s < ctx.s_vertices.size(); ++s)
      if ((ctx.nmask[s] & t) == t) ctx.n_t[t].push_back(static_cast<int>(s));

  while (ctx.d_prime < inst.spec.size() && inst.spec.lengths[ctx.d_prime] <= ctx.vc)
    ++ctx.d_prime;

  // B_t: all b >= 0 with sum b_i s_i = t, in lexicographic order.
  ctx.b_lists.resize(ctx.vc + 1);
  for (int t = 0; t <= ctx.vc; ++t) {
    std::vector<long long> cur(ctx.d_prime, 0);
    auto gen = [&](auto&& self, size_t i, long long left) -> void {
      if (i == ctx.d_prime) {
        if (left == 0) ctx.b_lists[t].push_back(cur);
        return;
      }
      for (long long c = 0; c * inst.spec.lengths[i] <= left; ++c) {
        cur[i] = c;
        self(self, i + 1, left - c * inst.spec.lengths[i]);
      }
      cur[i] = 0;
    };
    gen(gen, 0, t);
  }
  return ctx;
}

struct Ilp2Build {
  IlpModel model;
  VcContext ctx;
  std::vector<int> xvar;                  // i * vc + cover index
  std::vector<std::pair<size_t, int>> yedges;  // (edge index in graph, var id)
  std::vector<std::vector<int>> zvar;     // per T mask: var ids parallel to b_lists[|T|]
};

inline Ilp2Build build_ilp2(const Instance& inst, const std::vector<int>& cover) {
  const Graph& g = inst.graph;
  Ilp2Build out;
  out.ctx = make_vc_context(inst, cover);
  VcContext& ctx = out.ctx;
  size_t d = inst.spec.size();
  auto deg = degrees(g);

  out.xvar.assign(d * ctx.vc, -1);
  for (size_t i = 0; i < d; ++i)
    for (int c = 0; c < ctx.vc; ++c) {
      long long ub = std::min(inst.spec.counts[i], deg[ctx.cover[c]] / inst.spec.lengths[i]);
      out.xvar[i * ctx.vc + c] = out.model.add_var(
          0, ub, "x_" + std::to_string(i) + "_" + std::to_string(ctx.cover[c]));
    }
  std::vector<int> cidx(g.n, -1);
  for (int i = 0; i < ctx.vc; ++i) cidx[ctx.cover[i]] = i;
  for (size_t e = 0; e < g.edges.size(); ++e)
    if (cidx[g.edges[e].u] >= 0 && cidx[g.edges[e].v] >= 0)
      out.yedges.push_back({e, out.model.add_var(0, g.edges[e].mult,
                                                 "y_" + std::to_string(g.edges[e].u) + "_" +
                                                     std::to_string(g.edges[e].v))});

  size_t z_total = 0;
  out.zvar.assign(1u << ctx.vc, {});
  for (unsigned t = 0; t < (1u << ctx.vc); ++t) {
    int tsize = __builtin_popcount(t);
    long long cap = static_cast<long long>(ctx.n_t[t].size());
    for (size_t bi = 0; bi < ctx.b_lists[tsize].size(); ++bi) {
      out.zvar[t].push_back(out.model.add_var(
          0, cap, "z_" + std::to_string(t) + "_" + std::to_string(bi)));
      ++z_total;
      if (z_total > 500'000) throw wrong_case_error("ILP2: model too large");
    }
  }

  // Every independent-side vertex is counted in exactly one z_T.
  {
    std::vector<std::pair<int, long long>> terms;
    for (unsigned t = 0; t < (1u << ctx.vc); ++t)
      for (int zv : out.zvar[t]) terms.push_back({zv, 1});
    out.model.add_row(std::move(terms), Rel::Eq,
                      static_cast<long long>(ctx.s_vertices.size()), "s_partition");
  }
  // Star counts per length: cover stars plus b-weighted independent stars.
  for (size_t i = 0; i < d; ++i) {
    std::vector<std::pair<int, long long>> terms;
    for (int c = 0; c < ctx.vc; ++c) terms.push_back({out.xvar[i * ctx.vc + c], 1});
    if (i < ctx.d_prime)
      for (unsigned t = 0; t < (1u << ctx.vc); ++t) {
        int tsize = __builtin_popcount(t);
        for (size_t bi = 0; bi < ctx.b_lists[tsize].size(); ++bi) {
          long long coef = ctx.b_lists[tsize][bi][i];
          if (coef != 0) terms.push_back({out.zvar[t][bi], coef});
        }
      }
    out.model.add_row(std::move(terms), Rel::Eq, inst.spec.counts[i],
                      "count_" + std::to_string(i));
  }
  // Out-degree of each cover vertex: inner orientation, plus its S-edges not
  // claimed by S-centered stars.
  for (int c = 0; c < ctx.vc; ++c) {
    std::vector<std::pair<int, long long>> terms;
    for (size_t i = 0; i < d; ++i)
      terms.push_back({out.xvar[i * ctx.vc + c], inst.spec.lengths[i]});
    long long rhs = ctx.d_u[c];
    int u = ctx.cover[c];
    for (auto [e, yv] : out.yedges) {
      if (g.edges[e].u == u)
        terms.push_back({yv, -1});
      else if (g.edges[e].v == u) {
        terms.push_back({yv, 1});
        rhs += g.edges[e].mult;
      }
    }
    for (unsigned t = 0; t < (1u << ctx.vc); ++t) {
      if (!(t >> c & 1)) continue;
      for (int zv : out.zvar[t]) terms.push_back({zv, 1});
    }
    out.model.add_row(std::move(terms), Rel::Eq, rhs, "outdeg_" + std::to_string(u));
  }
  // Singleton family rows z_T <= |N_T|; larger families are separated lazily.
  // Pair rows are cheap for small covers and cut out most separation rounds,
  // so they are materialized too (skipping the vacuous ones).
  for (unsigned t = 0; t < (1u << ctx.vc); ++t) {
    if (out.zvar[t].empty()) continue;
    std::vector<std::pair<int, long long>> terms;
    for (int zv : out.zvar[t]) terms.push_back({zv, 1});
    out.model.add_row(std::move(terms), Rel::Le, static_cast<long long>(ctx.n_t[t].size()),
                      "family_" + std::to_string(t));
  }
  if (ctx.vc <= 6) {
    long long s_count = static_cast<long long>(ctx.s_vertices.size());
    for (unsigned t1 = 0; t1 < (1u << ctx.vc); ++t1) {
      if (out.zvar[t1].empty()) continue;
      for (unsigned t2 = t1 + 1; t2 < (1u << ctx.vc); ++t2) {
        if (out.zvar[t2].empty()) continue;
        std::vector<char> in_union(ctx.s_vertices.size(), 0);
        for (int s : ctx.n_t[t1]) in_union[s] = 1;
        for (int s : ctx.n_t[t2]) in_union[s] = 1;
        long long bound = std::count(in_union.begin(), in_union.end(), 1);
        if (bound >= s_count) continue;  // implied by the partition row
        std::vector<std::pair<int, long long>> terms;
        for (int zv : out.zvar[t1]) terms.push_back({zv, 1});
        for (int zv : out.zvar[t2]) terms.push_back({zv, 1});
        out.model.add_row(std::move(terms), Rel::Le, bound,
                          "family_" + std::to_string(t1) + "_" + std::to_string(t2));
      }
    }
  }
  return out;
}

inline StarDecomposition extract_ilp2(const Instance& inst, const Ilp2Build& build,
                                      const std::vector<long long>& values,
                                      const std::vector<unsigned>& masks,
                                      const std::vector<std::vector<int>>& z_sets) {
  const Graph& g = inst.graph;
  const VcContext& ctx = build.ctx;
  size_t d = inst.spec.size();
  std::vector<std::vector<int>> out(g.n);
  for (auto [e, yv] : build.yedges) {
    long long low = values[yv];
    for (long long k = 0; k < low; ++k) out[g.edges[e].u].push_back(g.edges[e].v);
    for (long long k = 0; k < g.edges[e].mult - low; ++k)
      out[g.edges[e].v].push_back(g.edges[e].u);
  }
  // Orient S edges: v in Z_T sends to exactly the cover vertices in T.
  std::vector<int> assigned_mask(ctx.s_vertices.size(), -1);
  for (size_t j = 0; j < masks.size(); ++j)
    for (int s : z_sets[j]) {
      if (assigned_mask[s] != -1) throw std::logic_error("ilp2: SDR sets overlap");
      assigned_mask[s] = static_cast<int>(masks[j]);
    }
  for (size_t s = 0; s < ctx.s_vertices.size(); ++s) {
    if (assigned_mask[s] < 0) throw std::logic_error("ilp2: SDR sets do not partition S");
    unsigned t = static_cast<unsigned>(assigned_mask[s]);
    int sv = ctx.s_vertices[s];
    for (int c = 0; c < ctx.vc; ++c) {
      if (!(ctx.nmask[s] >> c & 1)) continue;
      if (t >> c & 1)
        out[sv].push_back(ctx.cover[c]);
      else
        out[ctx.cover[c]].push_back(sv);
    }
  }

  StarDecomposition dec;
  for (int c = 0; c < ctx.vc; ++c) {
    int u = ctx.cover[c];
    std::sort(out[u].begin(), out[u].end());
    std::vector<std::pair<long long, long long>> lc;
    for (size_t i = 0; i < d; ++i)
      lc.push_back({inst.spec.lengths[i], values[build.xvar[i * ctx.vc + c]]});
    detail::chop_stars(u, out[u], lc, dec);
  }
  // Split each Z_T into the per-b groups in lexicographic b order, then chop
  // each member's out-list by its b.
  for (size_t j = 0; j < masks.size(); ++j) {
    unsigned t = masks[j];
    int tsize = __builtin_popcount(t);
    std::vector<int> members = z_sets[j];
    std::sort(members.begin(), members.end());
    size_t pos = 0;
    for (size_t bi = 0; bi < ctx.b_lists[tsize].size(); ++bi) {
      long long take = values[build.zvar[t][bi]];
      for (long long k = 0; k < take; ++k) {
        if (pos >= members.size()) throw std::logic_error("ilp2: Z_T split underflow");
        int s = members[pos++];
        int sv = ctx.s_vertices[s];
        std::sort(out[sv].begin(), out[sv].end());
        std::vector<std::pair<long long, long long>> lc;
        for (size_t i = 0; i < ctx.d_prime; ++i)
          lc.push_back({inst.spec.lengths[i], ctx.b_lists[tsize][bi][i]});
        detail::chop_stars(sv, out[sv], lc, dec);
      }
    }
    if (pos != members.size()) throw std::logic_error("ilp2: Z_T split leftover");
  }
  return dec;
}

struct Ilp2Outcome {
  SolveReport report;
  long long separation_rounds = 0;
  Ilp2Build build;                  // final model including lazy cuts
  std::vector<long long> values;    // feasible assignment when YES
};

inline Ilp2Outcome solve_ilp2_full(const Instance& inst, const std::vector<int>& cover,
                                   const SearchBudget& budget = {}) {
  auto t0 = std::chrono::steady_clock::now();
  Ilp2Outcome out{};
  out.report.algorithm = "ilp2";
  if (!inst.size_matches()) {
    out.report = make_no("ilp2", "size mismatch");
    return out;
  }
  out.build = build_ilp2(inst, cover);
  Ilp2Build& build = out.build;
  const VcContext& ctx = build.ctx;

  // The inner-cover orientation is a flow completion: out-degree targets come
  // from the fixed stars minus the S-edges claimed by S-centered stars.
  Graph cover_graph;
  cover_graph.n = ctx.vc;
  {
    std::vector<int> cidx(inst.graph.n, -1);
    for (int i = 0; i < ctx.vc; ++i) cidx[ctx.cover[i]] = i;
    for (auto [e, yv] : build.yedges)
      cover_graph.edges.push_back(
          Edge{cidx[inst.graph.edges[e].u], cidx[inst.graph.edges[e].v], inst.graph.edges[e].mult});
  }
  DeferredBlock block;
  for (auto [e, yv] : build.yedges) block.vars.push_back(yv);
  block.complete = [&inst, &build, &cover_graph](const std::vector<long long>& vals)
      -> std::optional<std::vector<long long>> {
    const VcContext& c = build.ctx;
    std::vector<long long> target(c.vc, 0);
    for (int u = 0; u < c.vc; ++u) {
      long long stars = 0;
      for (size_t i = 0; i < inst.spec.size(); ++i)
        stars += inst.spec.lengths[i] * vals[build.xvar[i * c.vc + u]];
      long long s_out = c.d_u[u];
      for (unsigned t = 0; t < (1u << c.vc); ++t) {
        if (!(t >> u & 1)) continue;
        for (int zv : build.zvar[t]) s_out -= vals[zv];
      }
      target[u] = stars - s_out;
      if (target[u] < 0) return std::nullopt;
    }
    OrientResult res = orient_with_outdegrees(cover_graph, target);
    if (!res.orientation) return std::nullopt;
    return res.orientation->out_of_low;
  };

  long long nodes_total = 0;
  for (long long round = 0;; ++round) {
    if (round > 100000) throw std::logic_error("ilp2: separation failed to terminate");
    FeasResult res = solve_feasibility(build.model, budget, &block);
    nodes_total += res.nodes;
    if (res.status == FeasStatus::Unknown) {
      out.report.answer = Answer::Unknown;
      out.report.reason = "budget exhausted";
      break;
    }
    if (res.status == FeasStatus::Infeasible) {
      out.report.answer = Answer::No;
      out.report.reason = "model infeasible";
      break;
    }
    // Candidate z: demand an SDR of the N_T family; its min-cut failure
    // certificate is exactly a violated family constraint.
    std::vector<unsigned> masks;
    std::vector<long long> demands;
    for (unsigned t = 0; t < (1u << ctx.vc); ++t) {
      long long zt = 0;
      for (int zv : build.zvar[t]) zt += res.values[zv];
      if (zt > 0) {
        masks.push_back(t);
        demands.push_back(zt);
      }
    }
    SdrInstance sdr;
    sdr.ground = static_cast<int>(ctx.s_vertices.size());
    for (size_t j = 0; j < masks.size(); ++j) {
      sdr.family.push_back(ctx.n_t[masks[j]]);
      sdr.demand.push_back(demands[j]);
    }
    SdrResult sres = find_sdr(sdr);
    out.report.stats.augmentations += sres.augmentations;
    if (sres.sets) {
      out.values = res.values;
      out.report.answer = Answer::Yes;
      out.report.witness = extract_ilp2(inst, build, res.values, masks, *sres.sets);
      if (auto why = verify_explain(inst, *out.report.witness))
        throw std::logic_error("ilp2: invalid witness constructed: " + *why);
      break;
    }
    // Add the violated family cut: sum of z over the family <= |union N_T|.
    std::vector<char> in_union(ctx.s_vertices.size(), 0);
    std::vector<std::pair<int, long long>> terms;
    long long lhs_now = 0;
    for (int j : sres.violating_family) {
      unsigned t = masks[j];
      for (int s : ctx.n_t[t]) in_union[s] = 1;
      for (int zv : build.zvar[t]) terms.push_back({zv, 1});
      lhs_now += demands[j];
    }
    long long bound = std::count(in_union.begin(), in_union.end(), 1);
    if (lhs_now <= bound) throw std::logic_error("ilp2: separation produced a vacuous cut");
    build.model.add_row(std::move(terms), Rel::Le, bound,
                        "lazy_family_" + std::to_string(round));
    out.separation_rounds = round + 1;
  }
  out.report.stats.nodes = nodes_total;
  out.report.stats.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

inline SolveReport solve_ilp2(const Instance& inst, const std::vector<int>& cover,
                              const SearchBudget& budget = {}) {
  return solve_ilp2_full(inst, cover, budget).report;
}

// Post-hoc check of the full doubly-exponential family: for every family of
// T-sets, sum z_T <= |union N_T|. Enumeration-sized covers only.
inline bool ilp2_families_hold(const Ilp2Build& build, const std::vector<long long>& values) {
  const VcContext& ctx = build.ctx;
  if (ctx.vc > 3) throw wrong_case_error("family enumeration only for vc <= 3");
  unsigned subsets = 1u << ctx.vc;
  std::vector<long long> zt(subsets, 0);
  for (unsigned t = 0; t < subsets; ++t)
    for (int zv : build.zvar[t]) zt[t] += values[zv];
  for (uint64_t fam = 1; fam < (1ull << subsets); ++fam) {
    std::vector<char> in_union(ctx.s_vertices.size(), 0);
    long long need = 0;
    for (unsigned t = 0; t < subsets; ++t) {
      if (!(fam >> t & 1)) continue;
      need += zt[t];
      for (int s : ctx.n_t[t]) in_union[s] = 1;
    }
    if (need > std::count(in_union.begin(), in_union.end(), 1)) return false;
  }
  return true;
}

}  // namespace stardec
