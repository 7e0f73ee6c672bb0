#pragma once

#include <limits>
#include <stdexcept>
#include <vector>

namespace stardec {

// Integer max-flow via shortest augmenting paths (BFS). Deterministic: arcs
// are scanned in insertion order. An instance is single-use; it carries
// residual state after run().
struct FlowNetwork {
  struct Arc {
    int to;
    int rev;        // index of the reverse arc in adj[to]
    long long cap;  // residual capacity
  };

  int node_count = 0;
  std::vector<std::vector<Arc>> adj;
  std::vector<long long> orig_cap_of_handle;
  std::vector<std::pair<int, int>> handles;  // (node, arc index) per added arc
  long long augmentations = 0;

  int add_node() {
    adj.emplace_back();
    return node_count++;
  }

  // Returns a handle usable with flow_on() after run().
  int add_arc(int from, int to, long long cap) {
    if (cap < 0) throw std::invalid_argument("negative capacity");
    adj[from].push_back(Arc{to, static_cast<int>(adj[to].size()), cap});
    adj[to].push_back(Arc{from, static_cast<int>(adj[from].size()) - 1, 0});
    handles.push_back({from, static_cast<int>(adj[from].size()) - 1});
    orig_cap_of_handle.push_back(cap);
    return static_cast<int>(handles.size()) - 1;
  }

  long long run(int source, int sink) {
    long long flow = 0;
    std::vector<int> prev_node(node_count), prev_arc(node_count);
    while (true) {
      std::vector<char> seen(node_count, 0);
      std::vector<int> queue{source};
      seen[source] = 1;
      for (size_t head = 0; head < queue.size() && !seen[sink]; ++head) {
        int v = queue[head];
        for (int i = 0; i < static_cast<int>(adj[v].size()); ++i) {
          const Arc& a = adj[v][i];
          if (a.cap > 0 && !seen[a.to]) {
            seen[a.to] = 1;
            prev_node[a.to] = v;
            prev_arc[a.to] = i;
            queue.push_back(a.to);
          }
        }
      }
      if (!seen[sink]) break;
      long long push = std::numeric_limits<long long>::max();
      for (int v = sink; v != source; v = prev_node[v])
        push = std::min(push, adj[prev_node[v]][prev_arc[v]].cap);
      for (int v = sink; v != source; v = prev_node[v]) {
        Arc& a = adj[prev_node[v]][prev_arc[v]];
        a.cap -= push;
        adj[a.to][a.rev].cap += push;
      }
      flow += push;
      ++augmentations;
    }
    check_min_cut(source, flow);
    return flow;
  }

  long long flow_on(int handle) const {
    auto [node, idx] = handles[handle];
    return orig_cap_of_handle[handle] - adj[node][idx].cap;
  }

  // Source side of a min cut in the residual graph (valid after run()).
  std::vector<char> reachable_from(int source) const {
    std::vector<char> seen(node_count, 0);
    std::vector<int> queue{source};
    seen[source] = 1;
    for (size_t head = 0; head < queue.size(); ++head)
      for (const Arc& a : adj[queue[head]])
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          queue.push_back(a.to);
        }
    return seen;
  }

 private:
  // Max-flow = min-cut self-check on every run.
  void check_min_cut(int source, long long flow) const {
    std::vector<char> side = reachable_from(source);
    long long cut = 0;
    for (size_t h = 0; h < handles.size(); ++h) {
      auto [node, idx] = handles[h];
      int to = adj[node][idx].to;
      if (side[node] && !side[to]) cut += orig_cap_of_handle[h];
    }
    if (cut != flow) throw std::logic_error("max-flow != min-cut, flow engine defect");
  }
};

}  // namespace stardec
