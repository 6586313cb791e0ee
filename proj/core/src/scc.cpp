#include "scc.hpp"

#include <algorithm>
#include <limits>

namespace sftconj::detail {

Csr to_csr(const std::vector<std::vector<std::size_t>>& adj) {
  Csr c;
  c.offset.reserve(adj.size() + 1);
  for (const auto& row : adj) {
    c.target.insert(c.target.end(), row.begin(), row.end());
    c.offset.push_back(c.target.size());
  }
  return c;
}

SccResult tarjan(const Csr& g) {
  constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
  const std::size_t n = g.size();
  SccResult r;
  r.comp.assign(n, unvisited);
  std::vector<std::size_t> index(n, unvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  // (vertex, next edge position)
  std::vector<std::pair<std::size_t, std::size_t>> call;
  std::size_t counter = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    call.emplace_back(root, g.offset[root]);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      if (pos < g.offset[v + 1]) {
        std::size_t w = g.target[pos++];
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, g.offset[w]);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      std::size_t done = v;
      call.pop_back();
      if (!call.empty()) {
        std::size_t parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          r.comp[w] = r.count;
        } while (w != done);
        ++r.count;
      }
    }
  }
  return r;
}

}  // namespace sftconj::detail
