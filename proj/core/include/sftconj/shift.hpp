#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sftconj/block_map.hpp"
#include "sftconj/errors.hpp"
#include "sftconj/graph.hpp"
#include "sftconj/verdict.hpp"

namespace sftconj {

// Raised when a block map does not define a code from X_G into X_H.
class InvalidCode : public Error {
 public:
  explicit InvalidCode(InvalidWord w);
  const InvalidWord& witness() const { return witness_; }

 private:
  InvalidWord witness_;
};

struct HigherBlock {
  DirectedGraph graph;
  // words[v] is the length-k path of the base graph behind lifted vertex v.
  std::vector<std::vector<VertexId>> words;
};

// Vertex names of G^[k] are the k symbols joined by single spaces (k >= 2).
HigherBlock higher_block(const DirectedGraph& g, std::size_t k);
DirectedGraph higher_block_graph(const DirectedGraph& g, std::size_t k);
std::string join_word(const Word& w);

struct LiftedCode {
  DirectedGraph graph;  // g^[k]
  BlockMap map;         // 1-block, keyed by lifted vertex names
  std::vector<std::vector<VertexId>> words;
};

// Throws InvalidCode if a key is not a path of g or a path of g has no entry.
LiftedCode lift_block_map(const DirectedGraph& g, const BlockMap& phi);

DirectedGraph edge_to_vertex(const MultiGraph& g);

// All cycles of length n, rotations counted separately. max_cycles caps the output.
std::vector<Word> enumerate_cycles(const DirectedGraph& g, std::size_t n,
                                   std::uint64_t max_cycles = 1'000'000);

// Symbol-wise image of a cycle; windows wrap around and respect memory.
Word cycle_image(const BlockMap& phi, const Word& cycle);

// Searches the pair graph of the lifted code for a diamond on trimmed g.
std::optional<Diamond> collapses_diamond(const DirectedGraph& g, const BlockMap& phi);

struct EntropyOptions {
  double tolerance = 1e-9;
  std::size_t max_iterations = 1'000'000;
};

// log2 of the spectral radius of trim_to_essential(g).
double entropy_estimate(const DirectedGraph& g, const EntropyOptions& options = {});
double entropy_estimate(const DirectedGraph& g, double tolerance);

}  // namespace sftconj
