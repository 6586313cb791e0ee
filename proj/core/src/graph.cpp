#include "sftconj/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "scc.hpp"
#include "sftconj/errors.hpp"

namespace sftconj {

namespace {

bool sorted_insert(std::vector<VertexId>& v, VertexId x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it != v.end() && *it == x) return false;
  v.insert(it, x);
  return true;
}

detail::Csr csr_of(const DirectedGraph& g) {
  detail::Csr c;
  c.offset.reserve(g.vertex_count() + 1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& s = g.successors(v);
    c.target.insert(c.target.end(), s.begin(), s.end());
    c.offset.push_back(c.target.size());
  }
  return c;
}

using Matrix = std::vector<std::vector<BigInt>>;

// Traces of A^1..A^n with A given as sparse rows of (column, multiplicity).
TraceSequence sparse_traces(const std::vector<std::vector<std::pair<VertexId, std::uint64_t>>>& rows,
                            std::size_t n) {
  const std::size_t size = rows.size();
  TraceSequence out;
  out.reserve(n);
  Matrix power(size, std::vector<BigInt>(size));
  for (std::size_t r = 0; r < size; ++r)
    for (auto [c, m] : rows[r]) power[r][c] += m;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i > 1) {
      Matrix next(size, std::vector<BigInt>(size));
      for (std::size_t r = 0; r < size; ++r)
        for (std::size_t u = 0; u < size; ++u) {
          if (power[r][u].is_zero()) continue;
          for (auto [c, m] : rows[u]) next[r][c] += power[r][u] * m;
        }
      power = std::move(next);
    }
    BigInt tr = 0;
    for (std::size_t r = 0; r < size; ++r) tr += power[r][r];
    out.push_back(tr);
  }
  return out;
}

}  // namespace

DirectedGraph::DirectedGraph(const std::vector<Symbol>& vertices,
                             const std::vector<std::pair<Symbol, Symbol>>& edges) {
  for (const auto& v : vertices) add_vertex(v);
  for (const auto& [a, b] : edges) add_edge(a, b);
}

VertexId DirectedGraph::add_vertex(const Symbol& name) {
  if (name.empty()) throw ContractError("vertex name must be non-empty");
  auto [it, inserted] = index_.emplace(name, names_.size());
  if (!inserted) throw ContractError("duplicate vertex: " + name);
  names_.push_back(name);
  out_.emplace_back();
  in_.emplace_back();
  return it->second;
}

bool DirectedGraph::add_edge(VertexId from, VertexId to) {
  if (from >= names_.size() || to >= names_.size())
    throw ContractError("edge endpoint out of range");
  if (!sorted_insert(out_[from], to)) return false;
  sorted_insert(in_[to], from);
  ++edge_count_;
  return true;
}

bool DirectedGraph::add_edge(const Symbol& from, const Symbol& to) {
  return add_edge(index(from), index(to));
}

std::optional<VertexId> DirectedGraph::find(const Symbol& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId DirectedGraph::index(const Symbol& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw ContractError("unknown vertex: " + name);
  return it->second;
}

bool DirectedGraph::has_edge(VertexId from, VertexId to) const {
  const auto& s = out_.at(from);
  return std::binary_search(s.begin(), s.end(), to);
}

bool DirectedGraph::has_edge(const Symbol& from, const Symbol& to) const {
  auto a = find(from), b = find(to);
  return a && b && has_edge(*a, *b);
}

std::vector<std::pair<VertexId, VertexId>> DirectedGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> e;
  e.reserve(edge_count_);
  for (VertexId v = 0; v < out_.size(); ++v)
    for (VertexId w : out_[v]) e.emplace_back(v, w);
  return e;
}

DirectedGraph DirectedGraph::induced_subgraph(const std::vector<VertexId>& keep) const {
  std::vector<VertexId> ids = keep;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  constexpr VertexId none = std::numeric_limits<VertexId>::max();
  std::vector<VertexId> remap(names_.size(), none);
  DirectedGraph sub;
  for (VertexId v : ids) remap[v] = sub.add_vertex(names_.at(v));
  for (VertexId v : ids)
    for (VertexId w : out_[v])
      if (remap[w] != none) sub.add_edge(remap[v], remap[w]);
  return sub;
}

Word DirectedGraph::word(const std::vector<VertexId>& ids) const {
  Word w;
  w.reserve(ids.size());
  for (VertexId v : ids) w.push_back(names_.at(v));
  return w;
}

bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
  return a.names_ == b.names_ && a.out_ == b.out_;
}

VertexId MultiGraph::add_vertex(const Symbol& name) {
  if (name.empty()) throw ContractError("vertex name must be non-empty");
  auto [it, inserted] = index_.emplace(name, names_.size());
  if (!inserted) throw ContractError("duplicate vertex: " + name);
  names_.push_back(name);
  return it->second;
}

std::size_t MultiGraph::add_edge(const Symbol& label, VertexId from, VertexId to) {
  if (label.empty()) throw ContractError("edge label must be non-empty");
  if (from >= names_.size() || to >= names_.size())
    throw ContractError("edge endpoint out of range");
  auto [it, inserted] = label_index_.emplace(label, edges_.size());
  if (!inserted) throw ContractError("duplicate edge label: " + label);
  edges_.push_back({label, from, to});
  return it->second;
}

std::size_t MultiGraph::add_edge(const Symbol& label, const Symbol& from, const Symbol& to) {
  return add_edge(label, index(from), index(to));
}

std::optional<VertexId> MultiGraph::find(const Symbol& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId MultiGraph::index(const Symbol& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw ContractError("unknown vertex: " + name);
  return it->second;
}

std::optional<std::size_t> MultiGraph::find_edge(const Symbol& label) const {
  auto it = label_index_.find(label);
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::vector<std::uint64_t>> MultiGraph::adjacency_matrix() const {
  std::vector<std::vector<std::uint64_t>> a(names_.size(),
                                            std::vector<std::uint64_t>(names_.size(), 0));
  for (const auto& e : edges_) ++a[e.source][e.target];
  return a;
}

bool operator==(const MultiGraph& a, const MultiGraph& b) {
  return a.names_ == b.names_ && a.edges_ == b.edges_;
}

std::vector<VertexId> essential_vertices(const DirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> indeg(n), outdeg(n);
  std::vector<bool> removed(n, false);
  std::deque<VertexId> queue;
  for (VertexId v = 0; v < n; ++v) {
    indeg[v] = g.predecessors(v).size();
    outdeg[v] = g.successors(v).size();
    if (indeg[v] == 0 || outdeg[v] == 0) {
      removed[v] = true;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : g.successors(v)) {
      if (removed[w]) continue;
      if (--indeg[w] == 0) {
        removed[w] = true;
        queue.push_back(w);
      }
    }
    for (VertexId u : g.predecessors(v)) {
      if (removed[u]) continue;
      if (--outdeg[u] == 0) {
        removed[u] = true;
        queue.push_back(u);
      }
    }
  }
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < n; ++v)
    if (!removed[v]) keep.push_back(v);
  return keep;
}

bool is_essential(const DirectedGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.successors(v).empty() || g.predecessors(v).empty()) return false;
  return true;
}

DirectedGraph trim_to_essential(const DirectedGraph& g) {
  auto keep = essential_vertices(g);
  if (keep.size() == g.vertex_count()) return g;
  return g.induced_subgraph(keep);
}

std::vector<std::vector<VertexId>> strongly_connected_components(const DirectedGraph& g) {
  auto r = detail::tarjan(csr_of(g));
  std::vector<std::vector<VertexId>> comps(r.count);
  for (VertexId v = 0; v < g.vertex_count(); ++v) comps[r.comp[v]].push_back(v);
  return comps;
}

std::vector<std::size_t> component_index(const DirectedGraph& g,
                                         const std::vector<std::vector<VertexId>>& sccs) {
  std::vector<std::size_t> idx(g.vertex_count(), 0);
  for (std::size_t c = 0; c < sccs.size(); ++c)
    for (VertexId v : sccs[c]) idx[v] = c;
  return idx;
}

bool is_strongly_connected(const DirectedGraph& g) {
  return !g.empty() && strongly_connected_components(g).size() == 1;
}

bool is_irreducible(const DirectedGraph& g) {
  if (g.empty()) return false;
  if (g.vertex_count() == 1) return g.has_edge(0, 0);
  return is_strongly_connected(g);
}

namespace {

std::vector<std::vector<VertexId>> terminal_components(const DirectedGraph& g, bool sinks) {
  auto sccs = strongly_connected_components(g);
  auto idx = component_index(g, sccs);
  std::vector<std::vector<VertexId>> out;
  for (std::size_t c = 0; c < sccs.size(); ++c) {
    bool closed = true;
    for (VertexId v : sccs[c]) {
      const auto& nb = sinks ? g.successors(v) : g.predecessors(v);
      for (VertexId w : nb)
        if (idx[w] != c) closed = false;
    }
    if (closed) out.push_back(sccs[c]);
  }
  return out;
}

}  // namespace

std::vector<std::vector<VertexId>> sink_components(const DirectedGraph& g) {
  return terminal_components(g, true);
}

std::vector<std::vector<VertexId>> source_components(const DirectedGraph& g) {
  return terminal_components(g, false);
}

std::optional<std::vector<VertexId>> shortest_cycle_through(const DirectedGraph& g, VertexId v) {
  if (v >= g.vertex_count()) throw ContractError("vertex out of range");
  if (g.has_edge(v, v)) return std::vector<VertexId>{v};
  constexpr VertexId none = std::numeric_limits<VertexId>::max();
  std::vector<VertexId> parent(g.vertex_count(), none);
  std::deque<VertexId> queue{v};
  parent[v] = v;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : g.successors(u)) {
      if (w == v) {
        std::vector<VertexId> cycle;
        for (VertexId x = u; x != v; x = parent[x]) cycle.push_back(x);
        cycle.push_back(v);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (parent[w] != none) continue;
      parent[w] = u;
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

TraceSequence trace_powers(const DirectedGraph& g, std::size_t n) {
  if (n == 0) throw ContractError("trace_powers needs n >= 1");
  std::vector<std::vector<std::pair<VertexId, std::uint64_t>>> rows(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (VertexId w : g.successors(v)) rows[v].emplace_back(w, 1);
  return sparse_traces(rows, n);
}

TraceSequence trace_powers(const MultiGraph& g, std::size_t n) {
  if (n == 0) throw ContractError("trace_powers needs n >= 1");
  auto a = g.adjacency_matrix();
  std::vector<std::vector<std::pair<VertexId, std::uint64_t>>> rows(a.size());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c)
      if (a[r][c] != 0) rows[r].emplace_back(c, a[r][c]);
  return sparse_traces(rows, n);
}

DirectedGraph reverse_edges(const DirectedGraph& g) {
  DirectedGraph r;
  for (const auto& name : g.names()) r.add_vertex(name);
  for (auto [a, b] : g.edges()) r.add_edge(b, a);
  return r;
}

}  // namespace sftconj
