#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sftconj/amalgamation.hpp"
#include "sftconj/block_map.hpp"
#include "sftconj/graph.hpp"
#include "sftconj/hitting_set.hpp"

namespace sftconj {

// Only used as input to the isomorphism reduction.
class UndirectedGraph {
 public:
  VertexId add_vertex(const Symbol& name);
  void add_edge(const Symbol& a, const Symbol& b);

  std::size_t vertex_count() const { return names_.size(); }
  const std::vector<Symbol>& names() const { return names_; }
  // Each edge once, with first <= second.
  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
  bool has_edge(VertexId a, VertexId b) const;
  bool is_connected() const;

 private:
  std::vector<Symbol> names_;
  std::map<Symbol, VertexId> index_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
};

// Each undirected edge becomes two arcs; loops stay single self-loops.
DirectedGraph double_edges(const UndirectedGraph& g);
// Rejects disconnected input.
std::pair<DirectedGraph, DirectedGraph> gi_to_digraphs(const UndirectedGraph& g1, const UndirectedGraph& g2);

// Vertex v of g becomes v__in -> v__1 -> ... -> v__{k-1} -> {v__<k>t, v__<k>b} -> v__out;
// vertex u of h becomes u__in -> u__1t ... u__kt -> u__out and the same through
// u__1b ... u__kb. An edge (x, y) becomes x__out -> y__in. Needs k >= 2.
DirectedGraph source_vertex_gadget(const DirectedGraph& g, std::size_t k);
DirectedGraph target_vertex_gadget(const DirectedGraph& h, std::size_t k);
std::pair<DirectedGraph, DirectedGraph> vertex_gadget_pair(const DirectedGraph& g, const DirectedGraph& h,
                                                          std::size_t k);

// Edge analogue: labels reuse the vertex-gadget names, so edge_to_vertex of
// the result equals the vertex gadget of edge_to_vertex of the input.
MultiGraph source_edge_gadget(const MultiGraph& g, std::size_t k);
MultiGraph target_edge_gadget(const MultiGraph& h, std::size_t k);
std::pair<MultiGraph, MultiGraph> edge_gadget_pair(const MultiGraph& g, const MultiGraph& h, std::size_t k);

// Forward direction of the gadget equivalence: a 1-block map g -> h becomes a
// k-block map on the source vertex gadget.
BlockMap lift_to_vertex_gadget(const DirectedGraph& g, const BlockMap& phi, std::size_t k);

struct StructurePartition {
  Symbol alpha;
  std::vector<Symbol> A, B, C;
};

bool has_structure_property(const DirectedGraph& g, const StructurePartition& p);

struct WeightWidget {
  std::string id;
  std::size_t K = 0;
  std::vector<Symbol> a, b, c;  // a and c have K/2 entries, b has K
  std::vector<Symbol> a_star, c_star;
};

struct WidgetAttachment {
  DirectedGraph graph;
  StructurePartition partition;
  WeightWidget widget;
};

// Adds w<id>__a<i>, w<id>__b<i>, w<id>__c<i> with the widget wiring plus the
// alpha edges and self-loops the structure property asks for.
WidgetAttachment attach_weight_widget(const DirectedGraph& g, const StructurePartition& p,
                                      const std::vector<Symbol>& a_star, const std::vector<Symbol>& c_star,
                                      std::size_t K, const std::string& id);

// Checks the b-vertex neighbourhoods and the exclusivity condition.
bool is_weight_widget(const DirectedGraph& g, const StructurePartition& p, const WeightWidget& w);

struct ReductionMetadata {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t K = 0;
  bool test_scale = false;
  bool with_widgets = true;
  std::vector<WeightWidget> widgets;
  // Widget ids keyed by (set vertex, element) for incidence widgets and by
  // element for element widgets.
  std::map<std::pair<Symbol, Symbol>, std::string> incidence_widget;
  std::map<Symbol, std::string> element_widget;
};

struct HittingSetReduction {
  HittingSetInstance instance;
  DirectedGraph graph;
  StructurePartition partition;
  ReductionMetadata meta;
};

// Set i is vertex S<i>; connectors are b_S<i>_<s> and b_S<i>_beta; plus alpha
// and beta. K defaults to 5mn, rounded up to even.
HittingSetReduction hitting_set_reduction(const HittingSetInstance& instance, std::optional<std::size_t> K = {},
                                          bool with_widgets = true);

Symbol set_vertex(std::size_t i);
Symbol connector_vertex(std::size_t i, const Symbol& s);

// Constructive amalgamation sequence for a hitting set; every step is
// checked with can_amalgamate as it is generated.
std::vector<AmalgamationStep> activation_schedule(const HittingSetReduction& r,
                                                  const std::vector<Symbol>& hitting_set);

}  // namespace sftconj
