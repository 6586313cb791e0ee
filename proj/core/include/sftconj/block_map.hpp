#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "sftconj/graph.hpp"

namespace sftconj {

// k-block sliding block code: window of k source symbols -> one target symbol.
// Memory m says the window for output position i starts at i - m; the
// verifier always works with the memory-0 form.
class BlockMap {
 public:
  explicit BlockMap(std::size_t block_size = 1, std::size_t memory = 0);

  std::size_t block_size() const { return k_; }
  std::size_t memory() const { return m_; }
  std::size_t anticipation() const { return k_ - 1 - m_; }

  // Overwrites an existing entry.
  void set(const Word& key, const Symbol& value);
  const Symbol* find(const Word& key) const;
  const Symbol& at(const Word& key) const;
  bool contains(const Word& key) const { return table_.count(key) != 0; }

  const std::map<Word, Symbol>& table() const { return table_; }
  std::size_t size() const { return table_.size(); }

  friend bool operator==(const BlockMap&, const BlockMap&) = default;

 private:
  std::size_t k_;
  std::size_t m_;
  std::map<Word, Symbol> table_;
};

// Text form: header "k=<int> m=<int>", then "v1 ... vk -> u" per line, '#' comments.
BlockMap parse_block_map(std::istream& in);
BlockMap parse_block_map_string(const std::string& text);
BlockMap load_block_map(const std::string& path);
std::string format_block_map(const BlockMap& phi);

// 1-block code as a vertex map between two concrete graphs.
struct OneBlockCode {
  DirectedGraph source;
  DirectedGraph target;
  std::vector<VertexId> image;  // indexed by source vertex id
};

// Throws ContractError unless phi is a 1-block map defined on every source
// vertex with values among the target vertices.
OneBlockCode make_one_block(const DirectedGraph& g, const DirectedGraph& h, const BlockMap& phi);
BlockMap to_block_map(const OneBlockCode& code);

}  // namespace sftconj
