#include "sftconj/amalgamation.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "sftconj/errors.hpp"

namespace sftconj {

std::string_view to_string(AmalgamationKind k) {
  return k == AmalgamationKind::in ? "in" : "out";
}

namespace {

bool disjoint(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i;
    else ++j;
  }
  return true;
}

}  // namespace

std::optional<AmalgamationKind> can_amalgamate(const DirectedGraph& g, VertexId u, VertexId v) {
  if (u == v) throw ContractError("cannot amalgamate a vertex with itself");
  if (g.successors(u) == g.successors(v) && disjoint(g.predecessors(u), g.predecessors(v)))
    return AmalgamationKind::out;
  if (g.predecessors(u) == g.predecessors(v) && disjoint(g.successors(u), g.successors(v)))
    return AmalgamationKind::in;
  return std::nullopt;
}

std::optional<AmalgamationKind> can_amalgamate(const DirectedGraph& g, const Symbol& u, const Symbol& v) {
  return can_amalgamate(g, g.index(u), g.index(v));
}

DirectedGraph amalgamate(const DirectedGraph& g, const Symbol& u, const Symbol& v, const Symbol& new_name) {
  VertexId iu = g.index(u), iv = g.index(v);
  if (!can_amalgamate(g, iu, iv)) throw ContractError("vertices " + u + " and " + v + " cannot be amalgamated");
  if (new_name != u && new_name != v && g.contains(new_name))
    throw ContractError("name already in use: " + new_name);
  DirectedGraph out;
  std::vector<VertexId> remap(g.vertex_count());
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    if (x == iv) continue;
    remap[x] = out.add_vertex(x == iu ? new_name : g.name(x));
  }
  remap[iv] = remap[iu];
  for (auto [a, b] : g.edges()) out.add_edge(remap[a], remap[b]);
  return out;
}

DirectedGraph split(const DirectedGraph& g, const Symbol& v, SplitKind kind,
                    const std::vector<Symbol>& first_part, const std::vector<Symbol>& second_part,
                    const Symbol& first_name, const Symbol& second_name) {
  VertexId iv = g.index(v);
  const bool by_out = kind == SplitKind::out_partition;
  const auto& nb = by_out ? g.successors(iv) : g.predecessors(iv);
  std::set<VertexId> p1, p2;
  for (const auto& s : first_part) p1.insert(g.index(s));
  for (const auto& s : second_part) p2.insert(g.index(s));
  if (p1.empty() || p2.empty()) throw ContractError("split parts must be non-empty");
  std::set<VertexId> all(nb.begin(), nb.end()), joined = p1;
  for (VertexId x : p2)
    if (!joined.insert(x).second) throw ContractError("split parts overlap");
  if (joined != all) throw ContractError("split parts do not partition the neighbourhood of " + v);
  if (first_name == second_name) throw ContractError("split copies need distinct names");
  for (const auto& name : {first_name, second_name})
    if (name != v && g.contains(name)) throw ContractError("name already in use: " + name);

  DirectedGraph out;
  std::vector<VertexId> remap(g.vertex_count());
  VertexId c1 = 0, c2 = 0;
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    if (x == iv) {
      c1 = out.add_vertex(first_name);
      c2 = out.add_vertex(second_name);
      remap[x] = c1;
    } else {
      remap[x] = out.add_vertex(g.name(x));
    }
  }
  auto copies = [&](VertexId x) {
    return x == iv ? std::vector<VertexId>{c1, c2} : std::vector<VertexId>{remap[x]};
  };
  for (auto [a, b] : g.edges()) {
    if (a != iv && b != iv) {
      out.add_edge(remap[a], remap[b]);
      continue;
    }
    // Edge touching v: the partitioned side picks one copy, the other side
    // is shared by both copies.
    if (by_out) {
      if (a == iv) {
        VertexId from = p1.count(b) ? c1 : c2;
        for (VertexId to : copies(b)) out.add_edge(from, to);
      } else {
        for (VertexId to : {c1, c2}) out.add_edge(remap[a], to);
      }
    } else {
      if (b == iv) {
        VertexId to = p1.count(a) ? c1 : c2;
        for (VertexId from : copies(a)) out.add_edge(from, to);
      } else {
        for (VertexId from : {c1, c2}) out.add_edge(from, remap[b]);
      }
    }
  }
  return out;
}

AmalgamationResult apply_amalgamations(const DirectedGraph& g, const std::vector<AmalgamationStep>& steps) {
  DirectedGraph cur = g;
  // Current image name of every original vertex.
  std::vector<Symbol> image(g.names());
  for (const auto& step : steps) {
    auto kind = can_amalgamate(cur, step.first, step.second);
    if (!kind) throw ContractError("step " + step.first + " + " + step.second + " is not an amalgamation");
    if (*kind != step.kind) throw ContractError("step " + step.first + " + " + step.second + " has the wrong kind");
    cur = amalgamate(cur, step.first, step.second, step.new_name);
    for (auto& s : image)
      if (s == step.first || s == step.second) s = step.new_name;
  }
  BlockMap phi(1, 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) phi.set({g.name(v)}, image[v]);
  return {cur, phi};
}

}  // namespace sftconj
