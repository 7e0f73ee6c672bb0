#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "stardec/graph.hpp"
#include "stardec/oracle.hpp"

namespace stardec {

enum class Rel { Eq, Le };

// Bounded-integer feasibility model: A x (=|<=) b with l <= x <= u.
struct IlpModel {
  struct Var {
    long long lb;
    long long ub;
    std::string name;
  };
  struct Row {
    std::vector<std::pair<int, long long>> terms;  // (var, coefficient)
    Rel rel;
    long long rhs;
    std::string name;
  };

  std::vector<Var> vars;
  std::vector<Row> rows;

  int add_var(long long lb, long long ub, std::string name = {}) {
    vars.push_back(Var{lb, ub, std::move(name)});
    return static_cast<int>(vars.size()) - 1;
  }

  void add_row(std::vector<std::pair<int, long long>> terms, Rel rel, long long rhs,
               std::string name = {}) {
    for (auto [v, c] : terms)
      if (v < 0 || v >= static_cast<int>(vars.size()))
        throw std::invalid_argument("row references undeclared variable");
    rows.push_back(Row{std::move(terms), rel, rhs, std::move(name)});
  }
};

enum class FeasStatus { Feasible, Infeasible, Unknown };

struct FeasResult {
  FeasStatus status = FeasStatus::Unknown;
  std::vector<long long> values;
  long long nodes = 0;
};

// A block of variables excluded from branching and completed in one shot once
// everything else is fixed. Used for orientation variables, whose residual
// subsystem is a flow problem the value enumeration would thrash on. The
// callback sees the full value vector (block entries undefined) and returns
// values for the block's variables, or nullopt when no completion exists.
struct DeferredBlock {
  std::vector<int> vars;
  std::function<std::optional<std::vector<long long>>(const std::vector<long long>&)> complete;
};

namespace detail {

inline long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline long long ceil_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) == (b < 0))) ? q + 1 : q;
}

// Depth-first value enumeration with bounds propagation over the rows.
// Branch rule: unfixed variable with the smallest domain, values ascending.
// Bound changes are trailed and undone on backtrack.
class BoundsSearch {
 public:
  BoundsSearch(const IlpModel& model, const SearchBudget& budget,
               const DeferredBlock* block = nullptr)
      : model_(model), budget_(budget), block_(block) {
    size_t nv = model.vars.size();
    lb_.resize(nv);
    ub_.resize(nv);
    for (size_t i = 0; i < nv; ++i) {
      lb_[i] = model.vars[i].lb;
      ub_[i] = model.vars[i].ub;
    }
    in_block_.assign(nv, 0);
    if (block_)
      for (int v : block_->vars) in_block_[v] = 1;
    rows_of_.assign(nv, {});
    for (size_t r = 0; r < model.rows.size(); ++r)
      for (auto [v, c] : model.rows[r].terms) rows_of_[v].push_back(static_cast<int>(r));
    start_ = std::chrono::steady_clock::now();
  }

  FeasResult run() {
    FeasResult res;
    try {
      std::vector<int> all_rows(model_.rows.size());
      for (size_t r = 0; r < all_rows.size(); ++r) all_rows[r] = static_cast<int>(r);
      bool root_ok = propagate(all_rows);
      if (root_ok && search()) {
        res.status = FeasStatus::Feasible;
        res.values = solution_;
      } else {
        res.status = FeasStatus::Infeasible;
      }
    } catch (const BudgetHit&) {
      res.status = FeasStatus::Unknown;
    }
    res.nodes = nodes_;
    return res;
  }

 private:
  void tick() {
    ++nodes_;
    if (nodes_ > budget_.max_nodes) throw BudgetHit{};
    if ((nodes_ & 0x3FF) == 0) {
      double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
              .count();
      if (ms > static_cast<double>(budget_.max_millis)) throw BudgetHit{};
    }
  }

  bool set_lb(int v, long long value, std::vector<int>& dirty) {
    if (value <= lb_[v]) return true;
    trail_.push_back({v, lb_[v], true});
    lb_[v] = value;
    if (lb_[v] > ub_[v]) return false;
    dirty.push_back(v);
    return true;
  }

  bool set_ub(int v, long long value, std::vector<int>& dirty) {
    if (value >= ub_[v]) return true;
    trail_.push_back({v, ub_[v], false});
    ub_[v] = value;
    if (lb_[v] > ub_[v]) return false;
    dirty.push_back(v);
    return true;
  }

  // Tightens bounds from the given rows until a fixpoint; false = infeasible.
  bool propagate(std::vector<int> queue) {
    std::vector<char> queued(model_.rows.size(), 0);
    for (int r : queue) queued[r] = 1;
    while (!queue.empty()) {
      int r = queue.back();
      queue.pop_back();
      queued[r] = 0;
      const IlpModel::Row& row = model_.rows[r];
      long long minact = 0, maxact = 0;
      for (auto [v, c] : row.terms) {
        if (c > 0) {
          minact += c * lb_[v];
          maxact += c * ub_[v];
        } else {
          minact += c * ub_[v];
          maxact += c * lb_[v];
        }
      }
      if (minact > row.rhs) return false;
      if (row.rel == Rel::Eq && maxact < row.rhs) return false;
      std::vector<int> dirty;
      for (auto [v, c] : row.terms) {
        long long min_wo = minact - (c > 0 ? c * lb_[v] : c * ub_[v]);
        long long max_wo = maxact - (c > 0 ? c * ub_[v] : c * lb_[v]);
        if (c > 0) {
          if (!set_ub(v, floor_div(row.rhs - min_wo, c), dirty)) return false;
          if (row.rel == Rel::Eq && !set_lb(v, ceil_div(row.rhs - max_wo, c), dirty)) return false;
        } else {
          if (!set_lb(v, ceil_div(row.rhs - min_wo, c), dirty)) return false;
          if (row.rel == Rel::Eq && !set_ub(v, floor_div(row.rhs - max_wo, c), dirty)) return false;
        }
      }
      for (int v : dirty)
        for (int r2 : rows_of_[v])
          if (!queued[r2]) {
            queued[r2] = 1;
            queue.push_back(r2);
          }
    }
    return true;
  }

  int pick_branch_var() const {
    int best = -1;
    long long best_domain = 0;
    for (size_t v = 0; v < lb_.size(); ++v) {
      if (in_block_[v]) continue;
      long long dom = ub_[v] - lb_[v];
      if (dom == 0) continue;
      if (best == -1 || dom < best_domain) {
        best = static_cast<int>(v);
        best_domain = dom;
      }
    }
    return best;
  }

  bool rows_hold_on(const std::vector<long long>& vals) const {
    for (const IlpModel::Row& row : model_.rows) {
      long long act = 0;
      for (auto [v, c] : row.terms) act += c * vals[v];
      if (row.rel == Rel::Eq ? act != row.rhs : act > row.rhs) return false;
    }
    return true;
  }

  bool close_leaf() {
    std::vector<long long> vals(lb_);
    if (block_ && !block_->vars.empty()) {
      auto filled = block_->complete(vals);
      if (!filled) return false;
      for (size_t i = 0; i < block_->vars.size(); ++i) vals[block_->vars[i]] = (*filled)[i];
    }
    if (!rows_hold_on(vals)) {
      if (block_ && !block_->vars.empty())
        throw std::logic_error("B&B: block completion violates a row");
      throw std::logic_error("B&B: fixed point violates a row");
    }
    solution_ = std::move(vals);
    return true;
  }

  bool search() {
    int v = pick_branch_var();
    if (v == -1) return close_leaf();
    long long lo = lb_[v], hi = ub_[v];
    for (long long val = lo; val <= hi; ++val) {
      tick();
      size_t mark = trail_.size();
      std::vector<int> dirty;
      bool ok = set_lb(v, val, dirty) && set_ub(v, val, dirty);
      if (ok) {
        std::vector<int> rows(rows_of_[v].begin(), rows_of_[v].end());
        ok = propagate(std::move(rows));
      }
      if (ok && search()) return true;
      while (trail_.size() > mark) {
        auto [var, old, was_lb] = trail_.back();
        trail_.pop_back();
        (was_lb ? lb_ : ub_)[var] = old;
      }
    }
    return false;
  }

  const IlpModel& model_;
  SearchBudget budget_;
  const DeferredBlock* block_;
  std::vector<char> in_block_;
  std::vector<long long> lb_, ub_;
  std::vector<long long> solution_;
  std::vector<std::vector<int>> rows_of_;
  std::vector<std::tuple<int, long long, bool>> trail_;
  long long nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

// Integer assignment satisfying all rows, proof of infeasibility by exhausted
// search, or Unknown when the budget runs out. All variables must be bounded.
inline FeasResult solve_feasibility(const IlpModel& model, const SearchBudget& budget = {},
                                    const DeferredBlock* block = nullptr) {
  for (const auto& v : model.vars) {
    if (v.lb > v.ub) return FeasResult{FeasStatus::Infeasible, {}, 0};
    const long long kBig = 1'000'000'000'000LL;
    if (v.lb < -kBig || v.ub > kBig)
      throw std::invalid_argument("solve_feasibility: unbounded variable");
  }
  detail::BoundsSearch search(model, budget, block);
  return search.run();
}

// CPLEX LP text for external cross-checking.
inline std::string to_lp_format(const IlpModel& model) {
  std::ostringstream out;
  auto var_name = [&](int v) {
    return model.vars[v].name.empty() ? "x" + std::to_string(v) : model.vars[v].name;
  };
  out << "\\ feasibility model\nMinimize\n obj: 0\nSubject To\n";
  for (size_t r = 0; r < model.rows.size(); ++r) {
    const auto& row = model.rows[r];
    out << " " << (row.name.empty() ? "r" + std::to_string(r) : row.name) << ":";
    for (auto [v, c] : row.terms) {
      out << (c >= 0 ? " + " : " - ") << (c >= 0 ? c : -c) << " " << var_name(v);
    }
    out << (row.rel == Rel::Eq ? " = " : " <= ") << row.rhs << "\n";
  }
  out << "Bounds\n";
  for (size_t v = 0; v < model.vars.size(); ++v)
    out << " " << model.vars[v].lb << " <= " << var_name(static_cast<int>(v)) << " <= "
        << model.vars[v].ub << "\n";
  out << "Generals\n";
  for (size_t v = 0; v < model.vars.size(); ++v) out << " " << var_name(static_cast<int>(v)) << "\n";
  out << "End\n";
  return out.str();
}

}  // namespace stardec
