#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sftconj/graph.hpp"
#include "sftconj/verdict.hpp"

namespace sftconj::detail {

// Two distinct walks with the same first and last vertex and equal labels.
struct WalkPair {
  std::vector<VertexId> left;
  std::vector<VertexId> right;
};

// Pair-graph BFS: diagonal -> off-diagonal ... -> diagonal.
std::optional<WalkPair> find_diamond(const DirectedGraph& g, const std::vector<std::size_t>& label);

// Rebuilds base-graph words from a walk in a higher block graph.
std::vector<VertexId> unlift_walk(const std::vector<std::vector<VertexId>>& words,
                                  const std::vector<VertexId>& walk);

// Base-graph cycle behind a cycle of lifted vertices (first symbol of each).
std::vector<VertexId> unlift_cycle(const std::vector<std::vector<VertexId>>& words,
                                   const std::vector<VertexId>& cycle);

Diamond make_diamond(const DirectedGraph& base, const std::vector<std::vector<VertexId>>& words,
                     const WalkPair& pair, const Word& image);

}  // namespace sftconj::detail
