#pragma once

#include <algorithm>
#include <chrono>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "stardec/graph.hpp"

namespace stardec {

// Node/time budget for the exhaustive searches. Exceeding it yields UNKNOWN
// (or a truncated enumeration), never a wrong answer.
struct SearchBudget {
  long long max_nodes = 200'000'000;
  long long max_millis = 120'000;
};

namespace detail {

struct BudgetHit {};

// Edge-driven exhaustive search over the two-stage space: pick the lowest
// uncovered edge, branch on which endpoint centers a star through it and
// which star that is (an already-open one or a fresh length).
class OracleSearch {
 public:
  OracleSearch(const Instance& inst, const SearchBudget& budget, bool collect_all)
      : spec_(inst.spec), budget_(budget), collect_all_(collect_all) {
    n_ = inst.graph.n;
    for (const Edge& e : inst.graph.edges)
      for (long long k = 0; k < e.mult; ++k) edge_list_.push_back({e.u, e.v});
    std::sort(edge_list_.begin(), edge_list_.end());
    m_ = static_cast<long long>(edge_list_.size());
    avail_.assign(n_, 0);
    for (auto [u, v] : edge_list_) {
      ++avail_[u];
      ++avail_[v];
    }
    open_rem_.assign(n_, 0);
    open_at_.assign(n_, {});
    a_left_ = spec_.counts;
    long long total_stars = 0;
    for (long long c : a_left_) total_stars += c;
    stars_.reserve(static_cast<size_t>(total_stars));
    memo_ok_ = memo_usable();
    start_ = std::chrono::steady_clock::now();
  }

  // True when a witness was found (solve mode stops at the first one).
  bool run() {
    found_ = false;
    search(0);
    return found_;
  }

  StarDecomposition first_witness() const { return first_witness_; }
  std::vector<StarDecomposition> all_witnesses() const { return collected_; }
  long long nodes() const { return nodes_; }
  bool truncated() const { return truncated_; }

 private:
  struct OpenStar {
    int center;
    size_t len_idx;
    long long remaining;
    std::vector<int> leaves;
  };

  void tick() {
    ++nodes_;
    if (nodes_ > budget_.max_nodes) throw BudgetHit{};
    if ((nodes_ & 0xFFF) == 0) {
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            start_)
                      .count();
      if (ms > static_cast<double>(budget_.max_millis)) throw BudgetHit{};
    }
  }

  bool counts_can_cover(long long target) {
    if (target < 0) return false;
    if (target == 0) return true;
    dp_.assign(static_cast<size_t>(target) + 1, 0);
    dp_[0] = 1;
    for (size_t i = 0; i < spec_.size(); ++i) {
      long long s = spec_.lengths[i];
      if (s > target || a_left_[i] == 0) continue;
      // Bounded knapsack reachability, forward with per-length use counters.
      use_.assign(static_cast<size_t>(target) + 1, 0);
      for (long long t = s; t <= target; ++t) {
        if (dp_[t]) continue;
        if (dp_[t - s] && use_[t - s] < a_left_[i]) {
          dp_[t] = 1;
          use_[t] = use_[t - s] + 1;
        }
      }
      if (dp_[target]) return true;
    }
    return dp_[target] != 0;
  }

  bool feasible_here(long long cur, int u, int v) {
    if (open_rem_[u] > avail_[u] || open_rem_[v] > avail_[v]) return false;
    long long rem_edges = m_ - cur;
    return counts_can_cover(rem_edges - total_open_rem_);
  }

  // The remaining search depends only on the covered prefix, the per-vertex
  // open-star remainders, and the unused counts — not on how leaves were
  // assigned so far. States proven completion-free are cached and skipped.
  std::string state_key(long long cur) const {
    std::string key;
    key.reserve(8 + 2 * a_left_.size() + 4 * stars_.size());
    auto push16 = [&key](long long x) {
      key.push_back(static_cast<char>(x & 0xFF));
      key.push_back(static_cast<char>((x >> 8) & 0xFF));
    };
    push16(cur);
    for (long long a : a_left_) push16(a);
    for (int v = 0; v < n_; ++v) {
      if (open_at_[v].empty()) continue;
      push16(-2 - v);
      std::vector<long long> rems;
      for (size_t sid : open_at_[v]) rems.push_back(stars_[sid].remaining);
      std::sort(rems.begin(), rems.end());
      for (long long r : rems) push16(r);
    }
    return key;
  }

  bool memo_usable() const {
    if (m_ >= 0x7FFF) return false;
    for (long long a : a_left_)
      if (a >= 0x7FFF) return false;
    return true;
  }

  void emit() {
    ++emit_count_;
    StarDecomposition dec;
    for (const OpenStar& s : stars_) {
      Star star;
      star.center = s.center;
      star.leaves = s.leaves;
      dec.stars.push_back(std::move(star));
    }
    if (!collect_all_) {
      first_witness_ = std::move(dec);
      found_ = true;
      return;
    }
    std::string key = canonical_key(dec);
    if (seen_.insert(key).second) collected_.push_back(canonical(dec));
  }

  // Returns true to unwind the whole search (solve mode found a witness).
  bool search(long long cur) {
    if (cur == m_) {
      if (total_open_rem_ == 0) {
        emit();
        return !collect_all_;
      }
      return false;
    }
    std::string key;
    bool use_memo = memo_ok_ && failed_.size() < kMemoCap;
    if (use_memo) {
      key = state_key(cur);
      if (failed_.count(key)) return false;
    }
    long long emitted_before = emit_count_;
    bool found = branch(cur);
    if (found) return true;
    if (use_memo && emit_count_ == emitted_before) failed_.insert(std::move(key));
    return false;
  }

  bool branch(long long cur) {
    auto [u, v] = edge_list_[cur];
    for (int side = 0; side < 2; ++side) {
      int c = side == 0 ? u : v;
      int o = side == 0 ? v : u;
      if (u == v) break;
      // Frame-local list of open stars to try; in solve mode two open stars
      // with the same (length, remaining) are interchangeable, keep one.
      std::vector<size_t> attach_order;
      {
        std::vector<std::pair<long long, long long>> seen;
        for (size_t pos = 0; pos < open_at_[c].size(); ++pos) {
          size_t sid = open_at_[c][pos];
          if (!collect_all_) {
            auto cls = std::make_pair(spec_.lengths[stars_[sid].len_idx], stars_[sid].remaining);
            bool dup = false;
            for (const auto& sc : seen)
              if (sc == cls) {
                dup = true;
                break;
              }
            if (dup) continue;
            seen.push_back(cls);
          }
          attach_order.push_back(pos);
        }
      }
      for (size_t k = 0; k < attach_order.size(); ++k) {
        // We erase and reinsert around the recursion, so stored positions
        // stay valid.
        size_t pos = attach_order[k];
        size_t sid = open_at_[c][pos];
        tick();
        stars_[sid].leaves.push_back(o);
        stars_[sid].remaining -= 1;
        open_rem_[c] -= 1;
        total_open_rem_ -= 1;
        avail_[u] -= 1;
        avail_[v] -= 1;
        bool closed = stars_[sid].remaining == 0;
        if (closed) open_at_[c].erase(open_at_[c].begin() + pos);
        bool done = feasible_here(cur + 1, u, v) && search(cur + 1);
        if (done) return true;
        if (closed) open_at_[c].insert(open_at_[c].begin() + pos, sid);
        stars_[sid].leaves.pop_back();
        stars_[sid].remaining += 1;
        open_rem_[c] += 1;
        total_open_rem_ += 1;
        avail_[u] += 1;
        avail_[v] += 1;
      }
      // Open a fresh star of each still-available length at c.
      for (size_t i = 0; i < spec_.size(); ++i) {
        if (a_left_[i] == 0) continue;
        tick();
        long long len = spec_.lengths[i];
        a_left_[i] -= 1;
        stars_.push_back(OpenStar{c, i, len - 1, {o}});
        size_t sid = stars_.size() - 1;
        bool open = len > 1;
        if (open) open_at_[c].push_back(sid);
        open_rem_[c] += len - 1;
        total_open_rem_ += len - 1;
        avail_[u] -= 1;
        avail_[v] -= 1;
        if (feasible_here(cur + 1, u, v) && search(cur + 1)) return true;
        avail_[u] += 1;
        avail_[v] += 1;
        open_rem_[c] -= len - 1;
        total_open_rem_ -= len - 1;
        if (open) open_at_[c].pop_back();
        stars_.pop_back();
        a_left_[i] += 1;
      }
    }
    return false;
  }

  StarSpec spec_;
  SearchBudget budget_;
  bool collect_all_;
  int n_ = 0;
  long long m_ = 0;
  std::vector<std::pair<int, int>> edge_list_;
  std::vector<long long> avail_;
  std::vector<long long> open_rem_;
  long long total_open_rem_ = 0;
  std::vector<std::vector<size_t>> open_at_;
  std::vector<OpenStar> stars_;
  std::vector<long long> a_left_;
  std::vector<char> dp_;
  std::vector<long long> use_;
  static constexpr size_t kMemoCap = 4'000'000;
  std::unordered_set<std::string> failed_;
  bool memo_ok_ = false;
  long long emit_count_ = 0;
  std::set<std::string> seen_;
  std::vector<StarDecomposition> collected_;
  StarDecomposition first_witness_;
  bool found_ = false;
  bool truncated_ = false;
  long long nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

inline SolveReport oracle_solve(const Instance& inst, const SearchBudget& budget = {}) {
  auto t0 = std::chrono::steady_clock::now();
  if (!inst.size_matches()) return make_no("oracle", "size mismatch");
  detail::OracleSearch search(inst, budget, /*collect_all=*/false);
  SolveReport rep;
  rep.algorithm = "oracle";
  try {
    bool yes = search.run();
    rep.answer = yes ? Answer::Yes : Answer::No;
    if (yes) {
      rep.witness = search.first_witness();
      if (auto why = verify_explain(inst, *rep.witness))
        throw std::logic_error("oracle: invalid witness constructed: " + *why);
    }
  } catch (const detail::BudgetHit&) {
    rep.answer = Answer::Unknown;
    rep.reason = "budget exhausted";
  }
  rep.stats.nodes = search.nodes();
  rep.stats.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

struct WitnessEnumeration {
  std::vector<StarDecomposition> witnesses;  // distinct up to star reordering
  bool truncated = false;
  long long nodes = 0;
};

inline WitnessEnumeration enumerate_all_witnesses(const Instance& inst,
                                                  const SearchBudget& budget = {}) {
  WitnessEnumeration out;
  if (!inst.size_matches()) return out;
  detail::OracleSearch search(inst, budget, /*collect_all=*/true);
  try {
    search.run();
  } catch (const detail::BudgetHit&) {
    out.truncated = true;
  }
  out.witnesses = search.all_witnesses();
  out.nodes = search.nodes();
  return out;
}

}  // namespace stardec
