#include "sftconj/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sftconj/errors.hpp"

namespace sftconj {

using nlohmann::json;

namespace {

json parse_object(const std::string& text, const std::set<std::string>& allowed, const char* what) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
  if (!j.is_object()) throw ParseError(std::string(what) + ": expected a JSON object");
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) throw ParseError(std::string(what) + ": unknown key '" + key + "'");
  return j;
}

const json& field(const json& j, const char* key, const char* what) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string(what) + ": missing key '" + key + "'");
  return *it;
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + ": expected a string");
  return j.get<std::string>();
}

std::vector<std::string> as_strings(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(as_string(x, what));
  return out;
}

template <class Fn>
auto wrap(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const ContractError& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

json words(const Word& w) { return json(w); }

json witness_json(const Witness& w) {
  struct {
    json operator()(const CyclePair& c) const {
      return {{"kind", "cycle_pair"}, {"first", words(c.first)}, {"second", words(c.second)},
              {"image", words(c.image)}};
    }
    json operator()(const TraceMismatch& t) const {
      return {{"kind", "trace_mismatch"}, {"power", t.power}, {"source_trace", t.source_trace.str()},
              {"target_trace", t.target_trace.str()}};
    }
    json operator()(const Diamond& d) const {
      return {{"kind", "diamond"},      {"prefix", words(d.prefix)}, {"left", words(d.left)},
              {"right", words(d.right)}, {"suffix", words(d.suffix)}, {"image", words(d.image)}};
    }
    json operator()(const InvalidWord& w) const {
      return {{"kind", "invalid_word"}, {"word", words(w.word)}, {"reason", w.reason}};
    }
  } visit;
  return std::visit(visit, w);
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DirectedGraph parse_directed_graph(const std::string& text) {
  const char* what = "graph";
  json j = parse_object(text, {"vertices", "edges"}, what);
  return wrap(what, [&] {
    DirectedGraph g;
    for (const auto& v : as_strings(field(j, "vertices", what), what)) g.add_vertex(v);
    const json& edges = field(j, "edges", what);
    if (!edges.is_array()) throw ParseError("graph: 'edges' must be an array");
    for (const auto& e : edges) {
      if (!e.is_array() || e.size() != 2) throw ParseError("graph: each edge must be [src, dst]");
      auto a = as_string(e[0], what), b = as_string(e[1], what);
      if (!g.contains(a) || !g.contains(b)) throw ParseError("graph: edge endpoint not declared: " + a + " -> " + b);
      if (!g.add_edge(a, b)) throw ParseError("graph: duplicate edge " + a + " -> " + b);
    }
    return g;
  });
}

DirectedGraph load_directed_graph(const std::string& path) { return parse_directed_graph(read_file(path)); }

std::string to_json(const DirectedGraph& g) {
  json edges = json::array();
  for (auto [a, b] : g.edges()) edges.push_back({g.name(a), g.name(b)});
  return json{{"vertices", g.names()}, {"edges", edges}}.dump();
}

MultiGraph parse_multigraph(const std::string& text) {
  const char* what = "multigraph";
  json j = parse_object(text, {"vertices", "multi_edges"}, what);
  return wrap(what, [&] {
    MultiGraph g;
    for (const auto& v : as_strings(field(j, "vertices", what), what)) g.add_vertex(v);
    const json& edges = field(j, "multi_edges", what);
    if (!edges.is_array()) throw ParseError("multigraph: 'multi_edges' must be an array");
    for (const auto& e : edges) {
      if (!e.is_array() || e.size() != 3) throw ParseError("multigraph: each edge must be [label, src, dst]");
      auto l = as_string(e[0], what), a = as_string(e[1], what), b = as_string(e[2], what);
      if (!g.contains(a) || !g.contains(b)) throw ParseError("multigraph: edge endpoint not declared in " + l);
      g.add_edge(l, a, b);
    }
    return g;
  });
}

MultiGraph load_multigraph(const std::string& path) { return parse_multigraph(read_file(path)); }

std::string to_json(const MultiGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.label, g.name(e.source), g.name(e.target)});
  return json{{"vertices", g.names()}, {"multi_edges", edges}}.dump();
}

UndirectedGraph parse_undirected_graph(const std::string& text) {
  const char* what = "undirected graph";
  json j = parse_object(text, {"vertices", "edges"}, what);
  return wrap(what, [&] {
    UndirectedGraph g;
    for (const auto& v : as_strings(field(j, "vertices", what), what)) g.add_vertex(v);
    const json& edges = field(j, "edges", what);
    if (!edges.is_array()) throw ParseError("undirected graph: 'edges' must be an array");
    for (const auto& e : edges) {
      if (!e.is_array() || e.size() != 2) throw ParseError("undirected graph: each edge must be [u, v]");
      g.add_edge(as_string(e[0], what), as_string(e[1], what));
    }
    return g;
  });
}

UndirectedGraph load_undirected_graph(const std::string& path) { return parse_undirected_graph(read_file(path)); }

std::string to_json(const Verdict& v) {
  json j{{"is_conjugacy", v.is_conjugacy}, {"failure", std::string(to_string(v.failure))}, {"witness", nullptr}};
  if (v.witness) j["witness"] = witness_json(*v.witness);
  return j.dump();
}

std::string input_error_json(const std::string& message) {
  json j{{"is_conjugacy", false},
         {"failure", "invalid_code"},
         {"witness", {{"kind", "input_error"}, {"message", message}}}};
  return j.dump();
}

Verdict parse_verdict(const std::string& text) {
  const char* what = "verdict";
  json j = parse_object(text, {"is_conjugacy", "failure", "witness"}, what);
  Verdict v;
  const json& c = field(j, "is_conjugacy", what);
  if (!c.is_boolean()) throw ParseError("verdict: 'is_conjugacy' must be a boolean");
  v.is_conjugacy = c.get<bool>();
  v.failure = failure_from_string(as_string(field(j, "failure", what), what));
  const json& w = field(j, "witness", what);
  if (w.is_null()) return v;
  if (!w.is_object()) throw ParseError("verdict: witness must be an object or null");
  std::string kind = as_string(field(w, "kind", what), what);
  auto list = [&](const char* key) { return as_strings(field(w, key, what), what); };
  if (kind == "cycle_pair") {
    v.witness = CyclePair{list("first"), list("second"), list("image")};
  } else if (kind == "trace_mismatch") {
    TraceMismatch t;
    t.power = field(w, "power", what).get<std::size_t>();
    t.source_trace = BigInt(as_string(field(w, "source_trace", what), what));
    t.target_trace = BigInt(as_string(field(w, "target_trace", what), what));
    v.witness = t;
  } else if (kind == "diamond") {
    v.witness = Diamond{list("prefix"), list("left"), list("right"), list("suffix"), list("image")};
  } else if (kind == "invalid_word") {
    v.witness = InvalidWord{list("word"), as_string(field(w, "reason", what), what)};
  } else if (kind != "input_error") {
    throw ParseError("verdict: unknown witness kind '" + kind + "'");
  }
  return v;
}

HittingSetInstance parse_hitting_set(const std::string& text) {
  const char* what = "hitting set";
  json j = parse_object(text, {"sets", "universe", "t"}, what);
  HittingSetInstance inst;
  const json& sets = field(j, "sets", what);
  if (!sets.is_array()) throw ParseError("hitting set: 'sets' must be an array");
  for (const auto& s : sets) inst.sets.push_back(as_strings(s, what));
  inst.universe = as_strings(field(j, "universe", what), what);
  const json& t = field(j, "t", what);
  if (!t.is_number_unsigned() && !(t.is_number_integer() && t.get<long long>() >= 0))
    throw ParseError("hitting set: 't' must be a non-negative integer");
  inst.t = t.get<std::size_t>();
  wrap(what, [&] {
    validate(inst);
    return 0;
  });
  return inst;
}

HittingSetInstance load_hitting_set(const std::string& path) { return parse_hitting_set(read_file(path)); }

std::string to_json(const HittingSetInstance& instance) {
  return json{{"sets", instance.sets}, {"universe", instance.universe}, {"t", instance.t}}.dump();
}

namespace {

json partition_json(const StructurePartition& p) {
  return {{"alpha", p.alpha}, {"A", p.A}, {"B", p.B}, {"C", p.C}};
}

json widget_json(const WeightWidget& w) {
  return {{"id", w.id}, {"K", w.K},           {"a", w.a},          {"b", w.b},
          {"c", w.c},   {"a_star", w.a_star}, {"c_star", w.c_star}};
}

}  // namespace

std::string to_json(const StructurePartition& p) { return partition_json(p).dump(); }

std::string to_json(const WeightWidget& w) { return widget_json(w).dump(); }

std::string to_json(const ReductionMetadata& meta, const StructurePartition& p) {
  json widgets = json::array();
  for (const auto& w : meta.widgets) widgets.push_back(widget_json(w));
  json incidence = json::array();
  for (const auto& [key, id] : meta.incidence_widget)
    incidence.push_back({{"set", key.first}, {"element", key.second}, {"widget", id}});
  json element = json::object();
  for (const auto& [s, id] : meta.element_widget) element[s] = id;
  return json{{"m", meta.m},
              {"n", meta.n},
              {"K", meta.K},
              {"test_scale", meta.test_scale},
              {"with_widgets", meta.with_widgets},
              {"partition", partition_json(p)},
              {"widgets", widgets},
              {"incidence_widgets", incidence},
              {"element_widgets", element}}
      .dump();
}

std::string to_json(const BlockMap& phi) {
  json table = json::array();
  for (const auto& [key, value] : phi.table()) table.push_back({{"word", key}, {"image", value}});
  return json{{"k", phi.block_size()}, {"m", phi.memory()}, {"table", table}}.dump();
}

std::string to_json(const Quotient& q) {
  json image = json::parse(to_json(q.image));
  json map = json::parse(to_json(q.map));
  return json{{"image", image}, {"map", map}}.dump();
}

}  // namespace sftconj
