#pragma once

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "stardec/expansion.hpp"
#include "stardec/graph.hpp"
#include "stardec/ilp_builders.hpp"
#include "stardec/ndfpt.hpp"
#include "stardec/oracle.hpp"
#include "stardec/polycases.hpp"
#include "stardec/vcxp.hpp"
#include "stardec/vertex_cover.hpp"

namespace stardec {

enum class Algorithm { Auto, Oracle, Poly, Tarsi, Ilp1, Ilp2, Vcxp, Ndfpt };

inline Algorithm parse_algorithm(const std::string& name) {
  if (name == "auto") return Algorithm::Auto;
  if (name == "oracle") return Algorithm::Oracle;
  if (name == "poly") return Algorithm::Poly;
  if (name == "tarsi") return Algorithm::Tarsi;
  if (name == "ilp1") return Algorithm::Ilp1;
  if (name == "ilp2") return Algorithm::Ilp2;
  if (name == "vcxp") return Algorithm::Vcxp;
  if (name == "ndfpt") return Algorithm::Ndfpt;
  throw parse_error("unknown algorithm: " + name);
}

struct SolveOptions {
  Algorithm algorithm = Algorithm::Auto;
  SearchBudget budget;
  std::optional<std::vector<int>> cover;       // explicit vertex cover
  std::optional<long long> threshold;          // ndfpt theta
  int expansion_cap = 20;
  int cover_cap = 12;
};

namespace detail {

inline int log_level() {
  static int level = [] {
    const char* env = std::getenv("STARDEC_LOG");
    return env ? std::atoi(env) : 0;
  }();
  return level;
}

inline void trace(const std::string& msg) {
  if (log_level() >= 1) std::cerr << "[stardec] " << msg << "\n";
}

inline bool cubic_case_applies(const Instance& inst) {
  if (inst.spec.size() != 1 || inst.spec.lengths[0] != 3) return false;
  auto deg = degrees(inst.graph);
  for (long long d : deg)
    if (d > 3) return false;
  return true;
}

inline bool expansion_certified(const Instance& inst, int cap) {
  long long s = inst.spec.max_length();
  const Graph& g = inst.graph;
  if (g.n <= 1) return true;
  if (auto bound = expansion_lower_bound(g); bound && *bound >= Rational::of(s, 1)) return true;
  if (g.n <= cap && edge_expansion(g, cap) >= Rational::of(s, 1)) return true;
  return false;
}

inline std::vector<int> cover_or_minimum(const Instance& inst, const SolveOptions& opts) {
  if (opts.cover) {
    if (!is_vertex_cover(inst.graph, *opts.cover))
      throw precondition_error("provided set is not a vertex cover");
    return *opts.cover;
  }
  auto found = min_vertex_cover(inst.graph, opts.cover_cap);
  if (!found) throw wrong_case_error("no vertex cover within the cap");
  return *found;
}

}  // namespace detail

// Dispatch: load check, then the polynomial cases, then the certified
// expander route, then the cover model, the whole-graph model, and finally
// the budgeted exhaustive search. A budget-exhausted solver falls through.
inline SolveReport auto_solve(const Instance& inst, const SolveOptions& opts) {
  if (!inst.size_matches()) return make_no("load_check", "size mismatch");

  if (inst.spec.max_length() <= 2) {
    detail::trace("auto: s <= 2 polynomial case");
    return solve_s_le_2(inst);
  }
  if (detail::cubic_case_applies(inst)) {
    detail::trace("auto: cubic K_{1,3} polynomial case");
    return solve_cubic_k13(inst);
  }
  if (detail::expansion_certified(inst, opts.expansion_cap)) {
    detail::trace("auto: expansion certified, expander construction");
    return expander_solve(inst, {}, ExpanderOptions{std::nullopt, opts.expansion_cap});
  }
  std::optional<std::vector<int>> cover;
  if (opts.cover) {
    cover = opts.cover;
  } else {
    cover = min_vertex_cover(inst.graph, opts.cover_cap);
  }
  if (cover) {
    bool parallels_inside = true;
    {
      std::vector<char> in(inst.graph.n, 0);
      for (int v : *cover) in[v] = 1;
      for (const Edge& e : inst.graph.edges)
        if (e.mult > 1 && (!in[e.u] || !in[e.v])) parallels_inside = false;
    }
    if (parallels_inside) {
      detail::trace("auto: ilp2 with cover of size " + std::to_string(cover->size()));
      SolveReport rep = solve_ilp2(inst, *cover, opts.budget);
      if (rep.answer != Answer::Unknown) return rep;
    }
  }
  detail::trace("auto: ilp1");
  {
    SolveReport rep = solve_ilp1(inst, opts.budget);
    if (rep.answer != Answer::Unknown) return rep;
  }
  detail::trace("auto: oracle");
  return oracle_solve(inst, opts.budget);
}

inline SolveReport solve(const Instance& inst, const SolveOptions& opts = {}) {
  switch (opts.algorithm) {
    case Algorithm::Auto:
      return auto_solve(inst, opts);
    case Algorithm::Oracle:
      return oracle_solve(inst, opts.budget);
    case Algorithm::Poly:
      if (inst.spec.max_length() <= 2) return solve_s_le_2(inst);
      if (detail::cubic_case_applies(inst)) return solve_cubic_k13(inst);
      throw wrong_case_error("wrong case: neither s <= 2 nor the cubic K_{1,3} case");
    case Algorithm::Tarsi:
      return expander_solve(inst, {}, ExpanderOptions{std::nullopt, opts.expansion_cap});
    case Algorithm::Ilp1:
      return solve_ilp1(inst, opts.budget);
    case Algorithm::Ilp2:
      return solve_ilp2(inst, detail::cover_or_minimum(inst, opts), opts.budget);
    case Algorithm::Vcxp:
      return vcxp_solve(inst, detail::cover_or_minimum(inst, opts), opts.budget);
    case Algorithm::Ndfpt: {
      long long theta = opts.threshold ? *opts.threshold : 4 * inst.spec.max_length();
      return ndfpt_solve(inst, theta, opts.budget);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace stardec
