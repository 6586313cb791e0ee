#pragma once

#include <cstddef>
#include <vector>

namespace sftconj::detail {

// Compressed adjacency: successors of v are target[offset[v] .. offset[v+1]).
struct Csr {
  std::vector<std::size_t> offset{0};
  std::vector<std::size_t> target;

  std::size_t size() const { return offset.size() - 1; }
};

Csr to_csr(const std::vector<std::vector<std::size_t>>& adj);

struct SccResult {
  // comp[v] numbers components in reverse topological order (sinks first).
  std::vector<std::size_t> comp;
  std::size_t count = 0;
};

// Iterative Tarjan, roots visited in ascending order.
SccResult tarjan(const Csr& g);

}  // namespace sftconj::detail
