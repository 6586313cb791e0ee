#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "sftconj/block_map.hpp"
#include "sftconj/graph.hpp"

namespace sftconj {

// out: N+(u) = N+(v) and N-(u), N-(v) disjoint. in: the mirror condition.
enum class AmalgamationKind { in, out };

std::string_view to_string(AmalgamationKind k);

struct AmalgamationStep {
  AmalgamationKind kind = AmalgamationKind::out;
  Symbol first;
  Symbol second;
  Symbol new_name;
  friend bool operator==(const AmalgamationStep&, const AmalgamationStep&) = default;
};

std::optional<AmalgamationKind> can_amalgamate(const DirectedGraph& g, VertexId u, VertexId v);
std::optional<AmalgamationKind> can_amalgamate(const DirectedGraph& g, const Symbol& u, const Symbol& v);

// The merged vertex takes u's position; v disappears.
DirectedGraph amalgamate(const DirectedGraph& g, const Symbol& u, const Symbol& v, const Symbol& new_name);

// out_partition splits N+(v) into two parts (copies share N-(v)); in_partition
// splits N-(v). If v has a self-loop, listing v in a part links that part to
// both copies.
enum class SplitKind { out_partition, in_partition };

DirectedGraph split(const DirectedGraph& g, const Symbol& v, SplitKind kind,
                    const std::vector<Symbol>& first_part, const std::vector<Symbol>& second_part,
                    const Symbol& first_name, const Symbol& second_name);

struct AmalgamationResult {
  DirectedGraph graph;
  BlockMap map;  // 1-block map from the input graph onto graph
};

// Applies steps in order, checking each against can_amalgamate.
AmalgamationResult apply_amalgamations(const DirectedGraph& g, const std::vector<AmalgamationStep>& steps);

}  // namespace sftconj
