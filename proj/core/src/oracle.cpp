#include "sftconj/oracle.hpp"

#include <deque>
#include <map>
#include <set>

#include "sftconj/errors.hpp"
#include "sftconj/shift.hpp"

namespace sftconj {

namespace {

// Plain adjacency-list graph local to the oracle.
struct Adj {
  std::vector<std::vector<std::size_t>> out, in;
  explicit Adj(std::size_t n) : out(n), in(n) {}
  void add(std::size_t a, std::size_t b) {
    out[a].push_back(b);
    in[b].push_back(a);
  }
};

// Vertices on some bi-infinite walk: repeatedly strip sources and sinks.
std::vector<bool> surviving(const Adj& a) {
  const std::size_t n = a.out.size();
  std::vector<std::size_t> indeg(n), outdeg(n);
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < n; ++v) {
    indeg[v] = a.in[v].size();
    outdeg[v] = a.out[v].size();
    if (indeg[v] == 0 || outdeg[v] == 0) {
      alive[v] = false;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : a.out[v])
      if (alive[w] && --indeg[w] == 0) {
        alive[w] = false;
        stack.push_back(w);
      }
    for (std::size_t u : a.in[v])
      if (alive[u] && --outdeg[u] == 0) {
        alive[u] = false;
        stack.push_back(u);
      }
  }
  return alive;
}

Adj adjacency(const DirectedGraph& g) {
  Adj a(g.vertex_count());
  for (auto [x, y] : g.edges()) a.add(x, y);
  return a;
}

}  // namespace

OracleReport oracle_report(const DirectedGraph& g, const DirectedGraph& h, const BlockMap& phi,
                           const OracleOptions& options) {
  OracleReport report;
  const std::size_t k = phi.block_size();

  // Keys must be paths of g.
  for (const auto& [key, value] : phi.table())
    for (std::size_t i = 0; i < key.size(); ++i)
      if (!g.contains(key[i]) || (i > 0 && !g.has_edge(key[i - 1], key[i]))) {
        report.valid = report.injective = report.surjective = false;
        return report;
      }

  // Restrict both graphs to vertices that occur in points.
  auto g_alive = surviving(adjacency(g));
  auto h_alive = surviving(adjacency(h));
  std::vector<VertexId> g_keep, h_keep;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g_alive[v]) g_keep.push_back(v);
  for (VertexId v = 0; v < h.vertex_count(); ++v)
    if (h_alive[v]) h_keep.push_back(v);
  DirectedGraph gs = g.induced_subgraph(g_keep);
  DirectedGraph hs = h.induced_subgraph(h_keep);

  auto hb = higher_block(gs, k);
  const DirectedGraph& lg = hb.graph;
  const std::size_t n = lg.vertex_count();
  if (n > options.max_vertices) throw BudgetExceeded("oracle: lifted source graph too large");

  // Labels: image vertex in hs for every lifted vertex; every lifted edge
  // must land on an edge of h.
  std::vector<std::size_t> label(n);
  for (VertexId v = 0; v < n; ++v) {
    const Symbol* img = phi.find(gs.word(hb.words[v]));
    auto hv = img ? h.find(*img) : std::nullopt;
    if (!hv) {
      report.valid = report.injective = report.surjective = false;
      return report;
    }
    label[v] = *hv;
  }
  for (auto [x, y] : lg.edges())
    if (!h.has_edge(label[x], label[y])) {
      report.valid = report.injective = report.surjective = false;
      return report;
    }
  // Relabel into hs ids (images of essential walks are essential).
  for (VertexId v = 0; v < n; ++v) label[v] = hs.index(h.name(label[v]));

  // Injectivity: essential part of the pair graph must be diagonal.
  {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> id;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (label[x] == label[y]) {
          id.emplace(std::make_pair(x, y), pairs.size());
          pairs.emplace_back(x, y);
        }
    Adj pg(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto [x, y] = pairs[i];
      for (VertexId x2 : lg.successors(x))
        for (VertexId y2 : lg.successors(y)) {
          auto it = id.find({x2, y2});
          if (it != id.end()) pg.add(i, it->second);
        }
    }
    auto alive = surviving(pg);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (alive[i] && pairs[i].first != pairs[i].second) report.injective = false;
  }

  // Surjectivity: follower sets over hs; an empty set means some word of hs
  // has no preimage.
  {
    std::vector<std::vector<std::size_t>> pre(hs.vertex_count());
    for (std::size_t x = 0; x < n; ++x) pre[label[x]].push_back(x);
    using State = std::pair<VertexId, std::vector<std::size_t>>;
    std::set<State> seen;
    std::deque<State> queue;
    for (VertexId y = 0; y < hs.vertex_count(); ++y) {
      State s{y, pre[y]};
      if (seen.insert(s).second) queue.push_back(std::move(s));
    }
    while (!queue.empty() && report.surjective) {
      State s = std::move(queue.front());
      queue.pop_front();
      if (s.second.empty()) {
        report.surjective = false;
        break;
      }
      for (VertexId y2 : hs.successors(s.first)) {
        std::set<std::size_t> next;
        for (std::size_t x : s.second)
          for (VertexId x2 : lg.successors(x))
            if (label[x2] == y2) next.insert(x2);
        State t{y2, {next.begin(), next.end()}};
        if (seen.count(t)) continue;
        if (seen.size() >= options.max_states) throw BudgetExceeded("oracle: subset construction too large");
        seen.insert(t);
        queue.push_back(std::move(t));
      }
    }
  }
  return report;
}

Verdict oracle_is_conjugacy(const DirectedGraph& g, const DirectedGraph& h, const BlockMap& phi,
                            const OracleOptions& options) {
  auto r = oracle_report(g, h, phi, options);
  if (!r.valid) return Verdict::failed(Failure::invalid_code);
  if (!r.injective) return Verdict::failed(Failure::not_injective);
  if (!r.surjective) return Verdict::failed(Failure::not_surjective);
  return Verdict::conjugacy();
}

}  // namespace sftconj
