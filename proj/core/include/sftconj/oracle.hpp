#pragma once

#include <cstddef>

#include "sftconj/block_map.hpp"
#include "sftconj/graph.hpp"
#include "sftconj/verdict.hpp"

namespace sftconj {

struct OracleOptions {
  // Cap on (target vertex, source subset) states in the surjectivity product.
  std::size_t max_states = 1u << 20;
  // Cap on vertices of the lifted source graph.
  std::size_t max_vertices = 256;
};

struct OracleReport {
  bool valid = true;
  bool injective = true;
  bool surjective = true;
};

// Brute-force decision that shares no code with the verifier pipeline beyond
// the graph type and higher block construction. Throws BudgetExceeded.
OracleReport oracle_report(const DirectedGraph& g, const DirectedGraph& h, const BlockMap& phi,
                           const OracleOptions& options = {});

// not_injective takes precedence when both halves fail.
Verdict oracle_is_conjugacy(const DirectedGraph& g, const DirectedGraph& h, const BlockMap& phi,
                            const OracleOptions& options = {});

}  // namespace sftconj
