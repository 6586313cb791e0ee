#pragma once

#include <string>

#include "sftconj/gadgets.hpp"
#include "sftconj/graph.hpp"
#include "sftconj/hitting_set.hpp"
#include "sftconj/search.hpp"
#include "sftconj/verdict.hpp"

namespace sftconj {

// {"vertices": [...], "edges": [[src, dst], ...]}; unknown keys rejected.
DirectedGraph parse_directed_graph(const std::string& text);
DirectedGraph load_directed_graph(const std::string& path);
std::string to_json(const DirectedGraph& g);

// {"vertices": [...], "multi_edges": [[label, src, dst], ...]}.
MultiGraph parse_multigraph(const std::string& text);
MultiGraph load_multigraph(const std::string& path);
std::string to_json(const MultiGraph& g);

// Same layout as a directed graph; each edge listed once.
UndirectedGraph parse_undirected_graph(const std::string& text);
UndirectedGraph load_undirected_graph(const std::string& path);

// {"is_conjugacy": bool, "failure": "...", "witness": {...} | null}
std::string to_json(const Verdict& v);
Verdict parse_verdict(const std::string& text);
// Verdict-shaped report for input that could not be read.
std::string input_error_json(const std::string& message);

// {"sets": [[...], ...], "universe": [...], "t": int}
HittingSetInstance parse_hitting_set(const std::string& text);
HittingSetInstance load_hitting_set(const std::string& path);
std::string to_json(const HittingSetInstance& instance);

std::string to_json(const StructurePartition& p);
std::string to_json(const WeightWidget& w);
std::string to_json(const ReductionMetadata& meta, const StructurePartition& p);
std::string to_json(const Quotient& q);
std::string to_json(const BlockMap& phi);

std::string read_file(const std::string& path);

}  // namespace sftconj
