#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sftconj/block_map.hpp"
#include "sftconj/graph.hpp"

namespace sftconj {

struct SearchOptions {
  // decide: search-tree nodes visited; reduce: partitions tried.
  std::uint64_t budget = 10'000'000;
  unsigned threads = 1;
};

// First k-block conjugacy from trim(g) to trim(h) in lexicographic order of
// table entries (keys in higher-block order, values in target vertex order).
// The returned table is keyed by the length-k paths of trim(g).
// Throws BudgetExceeded.
std::optional<BlockMap> decide_k_block_conjugacy(const DirectedGraph& g, const DirectedGraph& h, std::size_t k,
                                                 const SearchOptions& options = {});

// Image graph of g under the quotient map; block b is named by its members
// joined with '+'.
struct Quotient {
  DirectedGraph image;
  BlockMap map;
  std::vector<std::vector<VertexId>> blocks;
};

Quotient minimal_image_graph(const DirectedGraph& g, const std::vector<std::size_t>& block_of);

// Partitions of V_g into exactly |V_g| - ell blocks, as restricted growth
// strings in lexicographic order; returns the first whose quotient map
// verifies. Throws BudgetExceeded.
std::optional<Quotient> search_one_block_reduction(const DirectedGraph& g, std::size_t ell,
                                                   const SearchOptions& options = {});

// Calls visit(rgs) for every restricted growth string of length n with exactly
// `blocks` blocks, in lexicographic order, until visit returns false.
template <class Visit>
void for_each_partition(std::size_t n, std::size_t blocks, Visit&& visit);

}  // namespace sftconj

#include "sftconj/detail/partitions.ipp"
