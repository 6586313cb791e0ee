#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sftconj {

using VertexId = std::size_t;
using Symbol = std::string;
using Word = std::vector<Symbol>;
using BigInt = boost::multiprecision::cpp_int;

// values[i-1] = tr(A^i)
using TraceSequence = std::vector<BigInt>;

// Simple directed graph with named vertices. Ids follow insertion order and
// neighbour lists are kept sorted, so "least vertex" always means least id.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  DirectedGraph(const std::vector<Symbol>& vertices,
                const std::vector<std::pair<Symbol, Symbol>>& edges);

  VertexId add_vertex(const Symbol& name);
  // Returns false when the edge was already present.
  bool add_edge(VertexId from, VertexId to);
  bool add_edge(const Symbol& from, const Symbol& to);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return names_.empty(); }

  const Symbol& name(VertexId v) const { return names_.at(v); }
  const std::vector<Symbol>& names() const { return names_; }
  std::optional<VertexId> find(const Symbol& name) const;
  VertexId index(const Symbol& name) const;
  bool contains(const Symbol& name) const { return index_.count(name) != 0; }

  const std::vector<VertexId>& successors(VertexId v) const { return out_.at(v); }
  const std::vector<VertexId>& predecessors(VertexId v) const { return in_.at(v); }
  bool has_edge(VertexId from, VertexId to) const;
  bool has_edge(const Symbol& from, const Symbol& to) const;

  // Sorted by (source, target).
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  // Keeps the listed vertices (in ascending id order) and the edges between them.
  DirectedGraph induced_subgraph(const std::vector<VertexId>& keep) const;

  Word word(const std::vector<VertexId>& ids) const;

  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b);

 private:
  std::vector<Symbol> names_;
  std::unordered_map<Symbol, VertexId> index_;
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
  std::size_t edge_count_ = 0;
};

struct LabeledEdge {
  Symbol label;
  VertexId source = 0;
  VertexId target = 0;

  friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

// Multigraph for edge shifts; edges carry unique labels.
class MultiGraph {
 public:
  MultiGraph() = default;

  VertexId add_vertex(const Symbol& name);
  std::size_t add_edge(const Symbol& label, VertexId from, VertexId to);
  std::size_t add_edge(const Symbol& label, const Symbol& from, const Symbol& to);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const Symbol& name(VertexId v) const { return names_.at(v); }
  const std::vector<Symbol>& names() const { return names_; }
  std::optional<VertexId> find(const Symbol& name) const;
  VertexId index(const Symbol& name) const;
  bool contains(const Symbol& name) const { return index_.count(name) != 0; }
  const std::vector<LabeledEdge>& edges() const { return edges_; }
  std::optional<std::size_t> find_edge(const Symbol& label) const;

  std::vector<std::vector<std::uint64_t>> adjacency_matrix() const;

  friend bool operator==(const MultiGraph& a, const MultiGraph& b);

 private:
  std::vector<Symbol> names_;
  std::unordered_map<Symbol, VertexId> index_;
  std::vector<LabeledEdge> edges_;
  std::unordered_map<Symbol, std::size_t> label_index_;
};

bool is_essential(const DirectedGraph& g);
DirectedGraph trim_to_essential(const DirectedGraph& g);
// Ids of g that survive trimming, ascending.
std::vector<VertexId> essential_vertices(const DirectedGraph& g);

bool is_strongly_connected(const DirectedGraph& g);
bool is_irreducible(const DirectedGraph& g);

// Tarjan; components come out in reverse topological order, each sorted.
std::vector<std::vector<VertexId>> strongly_connected_components(const DirectedGraph& g);
// Component index per vertex, matching strongly_connected_components order.
std::vector<std::size_t> component_index(const DirectedGraph& g,
                                         const std::vector<std::vector<VertexId>>& sccs);

// Components with no edge leaving (sink) or entering (source) them.
std::vector<std::vector<VertexId>> sink_components(const DirectedGraph& g);
std::vector<std::vector<VertexId>> source_components(const DirectedGraph& g);

// v1 ... vn with v1 = v and (vn, v1) an edge; BFS, least-id tie-breaking.
std::optional<std::vector<VertexId>> shortest_cycle_through(const DirectedGraph& g, VertexId v);

TraceSequence trace_powers(const DirectedGraph& g, std::size_t n);
TraceSequence trace_powers(const MultiGraph& g, std::size_t n);

DirectedGraph reverse_edges(const DirectedGraph& g);

}  // namespace sftconj
