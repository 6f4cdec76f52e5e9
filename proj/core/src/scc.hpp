#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

namespace triexp::detail {

struct Components {
  std::vector<std::size_t> of;  // node -> component
  std::size_t count = 0;
};

// Tarjan's algorithm without recursion. Components are numbered in the order
// they complete, so every edge leaving a component points to a smaller id.
// `target(e)` maps an element of adj[v] to its head.
template <class Adjacency, class Target>
Components strong_components(const Adjacency& adj, Target target) {
  const std::size_t n = adj.size();
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, kUnset), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  Components out{std::vector<std::size_t>(n, kUnset), 0};
  std::size_t next_index = 0;
  std::vector<std::pair<std::size_t, std::size_t>> call;  // (node, next edge)

  for (std::size_t s = 0; s < n; ++s) {
    if (index[s] != kUnset) continue;
    call.emplace_back(s, 0);
    while (!call.empty()) {
      auto& [v, e] = call.back();
      if (e == 0 && index[v] == kUnset) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      if (e < adj[v].size()) {
        const std::size_t w = target(adj[v][e++]);
        if (index[w] == kUnset) {
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          out.of[w] = out.count;
        } while (w != v);
        ++out.count;
      }
      const std::size_t done = v;
      call.pop_back();
      if (!call.empty()) {
        const std::size_t parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  return out;
}

}  // namespace triexp::detail
