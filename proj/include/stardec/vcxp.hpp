#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "stardec/graph.hpp"
#include "stardec/oracle.hpp"

namespace stardec {

struct DpResult {
  bool feasible = false;
  std::vector<std::vector<long long>> bins;  // per target bin, the item lengths placed there
};

// Decides whether `items` split into |targets| bins with exact sums, by the
// boolean table f(i, x_1..x_{k-1}) over the first k-1 bins; the last bin is
// implicit (items not placed in bins 1..k-1 must sum to the last target
// whenever the totals match). Assignment recovered by walking the table.
inline DpResult dp_feasible(const std::vector<long long>& items,
                            const std::vector<long long>& targets) {
  long long item_total = std::accumulate(items.begin(), items.end(), 0LL);
  long long target_total = std::accumulate(targets.begin(), targets.end(), 0LL);
  if (item_total != target_total)
    throw std::invalid_argument("dp_feasible: totals must match");
  for (long long t : targets)
    if (t < 0) throw std::invalid_argument("dp_feasible: negative target");

  DpResult out;
  size_t k = targets.size();
  if (k == 0) {
    out.feasible = items.empty();
    return out;
  }
  out.bins.assign(k, {});

  // Mixed-radix state over the first k-1 targets.
  size_t states = 1;
  std::vector<size_t> stride(k > 0 ? k - 1 : 0, 1);
  for (size_t j = 0; j + 1 < k; ++j) {
    stride[j] = states;
    states *= static_cast<size_t>(targets[j] + 1);
    if (states > 50'000'000) throw wrong_case_error("dp_feasible: state space too large");
  }
  size_t T = items.size();
  std::vector<std::vector<char>> f(T + 1, std::vector<char>(states, 0));
  f[0][0] = 1;
  for (size_t i = 0; i < T; ++i) {
    long long len = items[i];
    for (size_t st = 0; st < states; ++st) {
      if (!f[i][st]) continue;
      f[i + 1][st] = 1;  // item goes to the implicit last bin
      size_t rem = st;
      for (size_t j = 0; j + 1 < k; ++j) {
        long long xj = static_cast<long long>((st / stride[j]) % (targets[j] + 1));
        (void)rem;
        if (xj + len <= targets[j]) f[i + 1][st + stride[j] * len] = 1;
      }
    }
  }
  size_t goal = 0;
  for (size_t j = 0; j + 1 < k; ++j) goal += stride[j] * static_cast<size_t>(targets[j]);
  out.feasible = f[T][goal] != 0;
  if (!out.feasible) return out;

  size_t st = goal;
  for (size_t i = T; i > 0; --i) {
    long long len = items[i - 1];
    if (f[i - 1][st]) {
      out.bins[k - 1].push_back(len);
      continue;
    }
    bool placed = false;
    for (size_t j = 0; j + 1 < k && !placed; ++j) {
      long long xj = static_cast<long long>((st / stride[j]) % (targets[j] + 1));
      if (xj >= len && f[i - 1][st - stride[j] * len]) {
        out.bins[j].push_back(len);
        st -= stride[j] * len;
        placed = true;
      }
    }
    if (!placed) throw std::logic_error("dp_feasible: backtrace failed");
  }
  // Structural check: the implicit bin received exactly the last target.
  long long last = std::accumulate(out.bins[k - 1].begin(), out.bins[k - 1].end(), 0LL);
  if (last != targets[k - 1]) throw std::logic_error("dp_feasible: implicit bin sum is off");
  return out;
}

namespace detail {

struct VcxpLabel {
  unsigned leaves_mask;          // B, a submask of the class neighborhood A
  std::vector<long long> b;      // stars of each length s_i (i < d') at the vertex
};

}  // namespace detail

// XP-in-vertex-cover solver: for every class of independent vertices with the
// same neighborhood, enumerate how many vertices take each (b, B) label; then
// enumerate orientations of the cover-internal edges in Gray-code order and
// run the bin-packing DP on the remaining stars against the out-degrees.
inline SolveReport vcxp_solve(const Instance& inst, const std::vector<int>& cover,
                              const SearchBudget& budget = {}) {
  auto t0 = std::chrono::steady_clock::now();
  const Graph& g = inst.graph;
  if (!g.is_simple()) throw wrong_case_error("vcxp: multigraphs are out of scope");
  if (!inst.size_matches()) return make_no("vcxp", "size mismatch");

  std::vector<int> C(cover);
  std::sort(C.begin(), C.end());
  C.erase(std::unique(C.begin(), C.end()), C.end());
  int vc = static_cast<int>(C.size());
  if (vc > 6) throw wrong_case_error("vcxp: cover too large for label enumeration");
  std::vector<int> cidx(g.n, -1);
  for (int i = 0; i < vc; ++i) {
    if (C[i] < 0 || C[i] >= g.n) throw parse_error("cover vertex out of range");
    cidx[C[i]] = i;
  }
  std::vector<int> indep;
  for (int v = 0; v < g.n; ++v)
    if (cidx[v] < 0) indep.push_back(v);
  std::vector<int> iidx(g.n, -1);
  for (size_t i = 0; i < indep.size(); ++i) iidx[indep[i]] = static_cast<int>(i);

  std::vector<unsigned> nmask(indep.size(), 0);
  std::vector<size_t> inner_edges;
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const Edge& ed = g.edges[e];
    bool cu = cidx[ed.u] >= 0, cv = cidx[ed.v] >= 0;
    if (!cu && !cv) throw wrong_case_error("vcxp: not a vertex cover");
    if (cu && cv) {
      inner_edges.push_back(e);
      continue;
    }
    int s = cu ? iidx[ed.v] : iidx[ed.u];
    int c = cu ? cidx[ed.u] : cidx[ed.v];
    nmask[s] |= 1u << c;
  }
  if (inner_edges.size() > 20) throw wrong_case_error("vcxp: too many cover-internal edges");

  // Classes I_A, ascending by neighborhood mask.
  std::map<unsigned, std::vector<int>> classes;
  for (size_t s = 0; s < indep.size(); ++s) classes[nmask[s]].push_back(indep[s]);

  size_t d = inst.spec.size();
  size_t d_prime = 0;
  while (d_prime < d && inst.spec.lengths[d_prime] <= vc) ++d_prime;

  // Per class: its label set C_A in (B submask asc, b lex asc) order.
  struct ClassInfo {
    unsigned A;
    std::vector<int> members;  // sorted vertex ids
    std::vector<detail::VcxpLabel> labels;
  };
  std::vector<ClassInfo> class_list;
  for (auto& [A, members] : classes) {
    ClassInfo info;
    info.A = A;
    info.members = members;
    std::vector<unsigned> submasks;
    for (unsigned B = A;; B = (B - 1) & A) {
      submasks.push_back(B);
      if (B == 0) break;
    }
    std::sort(submasks.begin(), submasks.end());
    for (unsigned B : submasks) {
      long long bsize = __builtin_popcount(B);
      std::vector<long long> b(d_prime, 0);
      auto gen = [&](auto&& self, size_t i, long long left) -> void {
        if (i == d_prime) {
          if (left == 0) info.labels.push_back({B, b});
          return;
        }
        for (long long c = 0; c * inst.spec.lengths[i] <= left && c <= inst.spec.counts[i]; ++c) {
          b[i] = c;
          self(self, i + 1, left - c * inst.spec.lengths[i]);
        }
        b[i] = 0;
      };
      gen(gen, 0, bsize);
    }
    class_list.push_back(std::move(info));
  }

  long long nodes = 0;
  auto tick = [&]() {
    ++nodes;
    if (nodes > budget.max_nodes) throw detail::BudgetHit{};
    if ((nodes & 0xFF) == 0) {
      double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      if (ms > static_cast<double>(budget.max_millis)) throw detail::BudgetHit{};
    }
  };

  // alpha[c][l]: how many vertices of class c take label l.
  std::vector<std::vector<long long>> alpha(class_list.size());
  for (size_t c = 0; c < class_list.size(); ++c) alpha[c].assign(class_list[c].labels.size(), 0);
  std::vector<long long> a_left(inst.spec.counts);

  StarDecomposition witness;
  bool found = false;

  // With labels fixed: remaining counts a', per-cover out-degree base from
  // unclaimed class edges, then the Gray-code orientation sweep and the DP.
  auto run_orientations = [&]() -> bool {
    std::vector<long long> a_rem(a_left);
    std::vector<long long> base(vc, 0);
    for (size_t c = 0; c < class_list.size(); ++c) {
      const ClassInfo& info = class_list[c];
      for (size_t l = 0; l < info.labels.size(); ++l)
        for (long long k = 0; k < alpha[c][l]; ++k) {
          unsigned rest = info.A & ~info.labels[l].leaves_mask;
          for (int u = 0; u < vc; ++u)
            if (rest >> u & 1) base[u] += 1;
        }
    }
    std::vector<long long> items;
    for (size_t i = d; i > 0; --i)
      for (long long k = 0; k < a_rem[i - 1]; ++k) items.push_back(inst.spec.lengths[i - 1]);

    size_t k_edges = inner_edges.size();
    // Initial orientation: every inner edge out of its lower endpoint.
    std::vector<int> dir(k_edges, 0);  // 0: low->high, 1: high->low
    std::vector<long long> dcur(base);
    for (size_t i = 0; i < k_edges; ++i) {
      const Edge& ed = g.edges[inner_edges[i]];
      dcur[cidx[std::min(ed.u, ed.v)]] += 1;
    }
    uint64_t total = 1ull << k_edges;
    long long isum = std::accumulate(items.begin(), items.end(), 0LL);
    for (uint64_t step = 0;; ++step) {
      tick();
      long long dsum = std::accumulate(dcur.begin(), dcur.end(), 0LL);
      if (dsum != isum) throw std::logic_error("vcxp: degree/item totals diverged");
      {
        DpResult dp = dp_feasible(items, dcur);
        if (dp.feasible) {
          // Reconstruct: stars at labeled independent vertices, stars at
          // cover vertices from the DP bins.
          StarDecomposition dec;
          for (size_t c = 0; c < class_list.size(); ++c) {
            const ClassInfo& info = class_list[c];
            size_t member = 0;
            for (size_t l = 0; l < info.labels.size(); ++l) {
              for (long long kk = 0; kk < alpha[c][l]; ++kk) {
                int x = info.members[member++];
                std::vector<int> leaves;
                for (int u = 0; u < vc; ++u)
                  if (info.labels[l].leaves_mask >> u & 1) leaves.push_back(C[u]);
                std::vector<std::pair<long long, long long>> lc;
                for (size_t i = 0; i < d_prime; ++i)
                  lc.push_back({inst.spec.lengths[i], info.labels[l].b[i]});
                size_t pos = 0;
                for (auto it = lc.rbegin(); it != lc.rend(); ++it)
                  for (long long cnt = 0; cnt < it->second; ++cnt) {
                    Star star;
                    star.center = x;
                    for (long long ll = 0; ll < it->first; ++ll)
                      star.leaves.push_back(leaves[pos++]);
                    dec.stars.push_back(std::move(star));
                  }
                if (pos != leaves.size())
                  throw std::logic_error("vcxp: label leaves not consumed");
              }
            }
          }
          // Out-lists for cover vertices under this orientation.
          std::vector<std::vector<int>> out(vc);
          for (size_t i = 0; i < k_edges; ++i) {
            const Edge& ed = g.edges[inner_edges[i]];
            int lo = std::min(ed.u, ed.v), hi = std::max(ed.u, ed.v);
            if (dir[i] == 0)
              out[cidx[lo]].push_back(hi);
            else
              out[cidx[hi]].push_back(lo);
          }
          for (size_t c = 0; c < class_list.size(); ++c) {
            const ClassInfo& info = class_list[c];
            size_t member = 0;
            for (size_t l = 0; l < info.labels.size(); ++l)
              for (long long kk = 0; kk < alpha[c][l]; ++kk) {
                int x = info.members[member++];
                unsigned rest = info.A & ~info.labels[l].leaves_mask;
                for (int u = 0; u < vc; ++u)
                  if (rest >> u & 1) out[u].push_back(x);
              }
          }
          for (int u = 0; u < vc; ++u) {
            std::sort(out[u].begin(), out[u].end());
            size_t pos = 0;
            // dp.bins[u] lists this vertex's star lengths (descending).
            std::vector<long long> lengths = dp.bins[u];
            std::sort(lengths.rbegin(), lengths.rend());
            for (long long len : lengths) {
              Star star;
              star.center = C[u];
              for (long long ll = 0; ll < len; ++ll) star.leaves.push_back(out[u][pos++]);
              dec.stars.push_back(std::move(star));
            }
            if (pos != out[u].size()) throw std::logic_error("vcxp: out-list not consumed");
          }
          if (auto why = verify_explain(inst, dec))
            throw std::logic_error("vcxp: invalid witness constructed: " + *why);
          witness = std::move(dec);
          return true;
        }
      }
      if (step + 1 == total) break;
      // Gray code: flip the edge indexed by the lowest set bit of step+1.
      size_t flip = static_cast<size_t>(__builtin_ctzll(step + 1));
      const Edge& ed = g.edges[inner_edges[flip]];
      int lo = cidx[std::min(ed.u, ed.v)], hi = cidx[std::max(ed.u, ed.v)];
      if (dir[flip] == 0) {
        dcur[lo] -= 1;
        dcur[hi] += 1;
        dir[flip] = 1;
      } else {
        dcur[hi] -= 1;
        dcur[lo] += 1;
        dir[flip] = 0;
      }
    }
    return false;
  };

  // Enumerate per-class compositions of |I_A| over the labels, pruning when a
  // label consumes more stars of some length than remain.
  auto enumerate = [&](auto&& self, size_t c) -> bool {
    if (c == class_list.size()) return run_orientations();
    const ClassInfo& info = class_list[c];
    long long need = static_cast<long long>(info.members.size());
    auto place = [&](auto&& placer, size_t l, long long left) -> bool {
      if (l + 1 == info.labels.size()) {
        // Last label takes the remainder.
        const auto& b = info.labels[l].b;
        for (size_t i = 0; i < d_prime; ++i)
          if (b[i] * left > a_left[i]) return false;
        for (size_t i = 0; i < d_prime; ++i) a_left[i] -= b[i] * left;
        alpha[c][l] = left;
        bool ok = self(self, c + 1);
        alpha[c][l] = 0;
        for (size_t i = 0; i < d_prime; ++i) a_left[i] += b[i] * left;
        return ok;
      }
      for (long long take = 0; take <= left; ++take) {
        const auto& b = info.labels[l].b;
        bool fits = true;
        for (size_t i = 0; i < d_prime; ++i)
          if (b[i] * take > a_left[i]) fits = false;
        if (!fits) break;
        for (size_t i = 0; i < d_prime; ++i) a_left[i] -= b[i] * take;
        alpha[c][l] = take;
        bool ok = placer(placer, l + 1, left - take);
        alpha[c][l] = 0;
        for (size_t i = 0; i < d_prime; ++i) a_left[i] += b[i] * take;
        if (ok) return true;
      }
      return false;
    };
    if (info.labels.empty()) return need == 0 ? self(self, c + 1) : false;
    return place(place, 0, need);
  };

  SolveReport rep;
  rep.algorithm = "vcxp";
  try {
    found = enumerate(enumerate, 0);
    rep.answer = found ? Answer::Yes : Answer::No;
    if (found) rep.witness = std::move(witness);
  } catch (const detail::BudgetHit&) {
    rep.answer = Answer::Unknown;
    rep.reason = "budget exhausted";
  }
  rep.stats.nodes = nodes;
  rep.stats.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace stardec
