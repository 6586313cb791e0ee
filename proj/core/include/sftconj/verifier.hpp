#pragma once

#include <cstddef>
#include <optional>

#include "sftconj/block_map.hpp"
#include "sftconj/graph.hpp"
#include "sftconj/verdict.hpp"

namespace sftconj {

struct VerifyOptions {
  // Workers for the meta-graph construction; results do not depend on it.
  unsigned threads = 1;
};

bool is_valid_block_map(const DirectedGraph& g, const DirectedGraph& h, const BlockMap& phi);

struct CycleMapResult {
  bool injective = true;
  std::optional<CyclePair> witness;
  // Cycles of source vertex ids behind the witness.
  std::vector<VertexId> first_cycle;
  std::vector<VertexId> second_cycle;
  std::size_t meta_vertices = 0;
  std::size_t meta_edges = 0;
};

// Meta-graph on V_G x V_G; an SCC with an edge and an off-diagonal vertex
// means two distinct cycles share an image.
CycleMapResult is_injective_cycle_map(const OneBlockCode& code, const VerifyOptions& options = {});
CycleMapResult is_injective_cycle_map(const DirectedGraph& g, const DirectedGraph& h,
                                      const BlockMap& phi);

// Both graphs must be irreducible (ContractError otherwise).
Verdict is_conjugacy_irreducible(const OneBlockCode& code, const VerifyOptions& options = {});
Verdict is_conjugacy_irreducible(const DirectedGraph& g, const DirectedGraph& h, const BlockMap& phi);

OneBlockCode add_sink_components(const OneBlockCode& code);
OneBlockCode add_source_components(const OneBlockCode& code);
// Requires every sink and source component of the target to be a single
// vertex with a single preimage.
OneBlockCode augment_to_irreducible(const OneBlockCode& code);

// Runs all three augmentation steps.
OneBlockCode augment(const OneBlockCode& code);

Verdict verify(const DirectedGraph& g, const DirectedGraph& h, const BlockMap& phi,
               const VerifyOptions& options = {});
// verify for a 1-block code on graphs that are already essential.
Verdict verify_one_block(const OneBlockCode& code, const VerifyOptions& options = {});

Verdict verify_edge_shift(const MultiGraph& g, const MultiGraph& h, const BlockMap& phi,
                          const VerifyOptions& options = {});

}  // namespace sftconj
