#include "sftconj/verifier.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <thread>

#include "internal.hpp"
#include "scc.hpp"
#include "sftconj/errors.hpp"
#include "sftconj/shift.hpp"

namespace sftconj {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

Symbol fresh_name(const DirectedGraph& g, Symbol base) {
  while (g.contains(base)) base += '_';
  return base;
}

std::optional<InvalidWord> check_edge_images(const OneBlockCode& code) {
  for (auto [x, y] : code.source.edges()) {
    if (!code.target.has_edge(code.image[x], code.image[y]))
      return InvalidWord{{code.source.name(x), code.source.name(y)},
                         "image " + code.target.name(code.image[x]) + " " +
                             code.target.name(code.image[y]) + " is not an edge of the target"};
  }
  return std::nullopt;
}

// Meta-graph restricted to pairs with equal image; other pairs carry no edges.
struct MetaGraph {
  std::vector<std::size_t> cls;         // image class per source vertex
  std::vector<std::size_t> pos;         // position inside its class
  std::vector<std::vector<VertexId>> members;
  std::vector<std::size_t> base;        // first meta id of each class
  std::vector<std::pair<VertexId, VertexId>> pair_of;
  detail::Csr csr;

  std::size_t id(VertexId x, VertexId y) const {
    std::size_t c = cls[x];
    return base[c] + pos[x] * members[c].size() + pos[y];
  }
};

MetaGraph build_meta_graph(const OneBlockCode& code, unsigned threads) {
  const auto& g = code.source;
  const std::size_t n = g.vertex_count();
  MetaGraph m;
  m.cls.assign(n, npos);
  m.pos.assign(n, 0);
  std::vector<std::size_t> class_of_image(code.target.vertex_count(), npos);
  for (VertexId x = 0; x < n; ++x) {
    std::size_t& c = class_of_image[code.image[x]];
    if (c == npos) {
      c = m.members.size();
      m.members.emplace_back();
    }
    m.cls[x] = c;
    m.pos[x] = m.members[c].size();
    m.members[c].push_back(x);
  }
  std::size_t total = 0;
  for (const auto& mem : m.members) {
    m.base.push_back(total);
    for (VertexId x : mem)
      for (VertexId y : mem) m.pair_of.emplace_back(x, y);
    total += mem.size() * mem.size();
  }

  // Successors of y grouped by class, so matching (x', y') pairs are cheap.
  std::vector<std::vector<std::pair<std::size_t, VertexId>>> by_class(n);
  for (VertexId y = 0; y < n; ++y) {
    for (VertexId w : g.successors(y)) by_class[y].emplace_back(m.cls[w], w);
    std::sort(by_class[y].begin(), by_class[y].end());
  }

  auto build_rows = [&](std::size_t lo, std::size_t hi, std::vector<std::vector<std::size_t>>& rows) {
    rows.assign(hi - lo, {});
    for (std::size_t id = lo; id < hi; ++id) {
      auto [x, y] = m.pair_of[id];
      auto& row = rows[id - lo];
      for (VertexId u : g.successors(x)) {
        auto range = std::equal_range(
            by_class[y].begin(), by_class[y].end(), std::make_pair(m.cls[u], VertexId{0}),
            [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto it = range.first; it != range.second; ++it) row.push_back(m.id(u, it->second));
      }
      std::sort(row.begin(), row.end());
    }
  };

  unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(total / 256 + 1)));
  std::vector<std::vector<std::vector<std::size_t>>> parts(workers);
  if (workers == 1) {
    build_rows(0, total, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      std::size_t lo = total * w / workers, hi = total * (w + 1) / workers;
      pool.emplace_back([&, w, lo, hi] { build_rows(lo, hi, parts[w]); });
    }
    for (auto& t : pool) t.join();
  }
  for (const auto& part : parts)
    for (const auto& row : part) {
      m.csr.target.insert(m.csr.target.end(), row.begin(), row.end());
      m.csr.offset.push_back(m.csr.target.size());
    }
  return m;
}

// BFS inside one SCC from start back to start.
std::vector<std::size_t> cycle_in_component(const detail::Csr& g, const std::vector<std::size_t>& comp,
                                            std::size_t start) {
  std::vector<std::size_t> parent(g.size(), npos);
  std::deque<std::size_t> queue{start};
  parent[start] = start;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t p = g.offset[u]; p < g.offset[u + 1]; ++p) {
      std::size_t w = g.target[p];
      if (comp[w] != comp[start]) continue;
      if (w == start) {
        std::vector<std::size_t> cycle;
        for (std::size_t x = u; x != start; x = parent[x]) cycle.push_back(x);
        cycle.push_back(start);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (parent[w] != npos) continue;
      parent[w] = u;
      queue.push_back(w);
    }
  }
  return {};
}

void require_irreducible(const OneBlockCode& code) {
  if (!is_irreducible(code.source)) throw ContractError("source graph is not irreducible");
  if (!is_irreducible(code.target)) throw ContractError("target graph is not irreducible");
}

Verdict compare_traces(const OneBlockCode& code) {
  std::size_t n = std::max(code.source.vertex_count(), code.target.vertex_count());
  auto a = trace_powers(code.source, n);
  auto b = trace_powers(code.target, n);
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return Verdict::failed(Failure::not_surjective, TraceMismatch{i + 1, a[i], b[i]});
  return Verdict::conjugacy();
}

// Verdict plus the id-level data needed to rewrite witnesses.
struct Outcome {
  Verdict verdict;
  std::vector<VertexId> first_cycle, second_cycle;
  std::optional<detail::WalkPair> diamond;
};

Outcome irreducible_outcome(const OneBlockCode& code, const VerifyOptions& options) {
  auto cm = is_injective_cycle_map(code, options);
  if (!cm.injective)
    return {Verdict::failed(Failure::not_injective, cm.witness), cm.first_cycle, cm.second_cycle, {}};
  return {compare_traces(code), {}, {}, {}};
}

std::vector<std::size_t> image_labels(const OneBlockCode& code) {
  return {code.image.begin(), code.image.end()};
}

Word image_word(const OneBlockCode& code, const std::vector<VertexId>& walk) {
  Word w;
  for (VertexId v : walk) w.push_back(code.target.name(code.image[v]));
  return w;
}

// Exact injectivity classification on the original code.
Outcome non_injectivity(const OneBlockCode& code, const VerifyOptions& options) {
  auto cm = is_injective_cycle_map(code, options);
  if (!cm.injective)
    return {Verdict::failed(Failure::not_injective, cm.witness), cm.first_cycle, cm.second_cycle, {}};
  if (auto d = detail::find_diamond(code.source, image_labels(code))) {
    std::vector<std::vector<VertexId>> words;
    for (VertexId v = 0; v < code.source.vertex_count(); ++v) words.push_back({v});
    Diamond dm = detail::make_diamond(code.source, words, *d, image_word(code, d->left));
    return {Verdict::failed(Failure::not_injective, dm), {}, {}, d};
  }
  return {Verdict::conjugacy(), {}, {}, {}};
}

Outcome one_block_outcome(const OneBlockCode& code, const VerifyOptions& options) {
  const auto& g = code.source;
  const auto& h = code.target;
  if (g.empty()) {
    if (h.empty()) return {Verdict::conjugacy(), {}, {}, {}};
    auto tr = trace_powers(h, h.vertex_count());
    for (std::size_t i = 0; i < tr.size(); ++i)
      if (tr[i] != 0)
        return {Verdict::failed(Failure::not_surjective, TraceMismatch{i + 1, 0, tr[i]}), {}, {}, {}};
    return {Verdict::failed(Failure::not_surjective), {}, {}, {}};
  }
  if (auto bad = check_edge_images(code)) return {Verdict::failed(Failure::invalid_code, *bad), {}, {}, {}};

  if (is_irreducible(g) && is_irreducible(h)) return irreducible_outcome(code, options);

  OneBlockCode star = augment(code);
  if (!is_irreducible(star.source) || !is_irreducible(star.target)) {
    // Some component of G cannot be matched to the sink/source structure of H,
    // so the code is not a conjugacy; decide which half fails.
    Outcome o = non_injectivity(code, options);
    if (!o.verdict.is_conjugacy) return o;
    return {Verdict::failed(Failure::not_surjective), {}, {}, {}};
  }
  Outcome o = irreducible_outcome(star, options);
  if (o.verdict.failure != Failure::not_injective) return o;
  const std::size_t n = g.vertex_count();
  bool touches_new = std::any_of(o.first_cycle.begin(), o.first_cycle.end(), [&](VertexId v) { return v >= n; }) ||
                     std::any_of(o.second_cycle.begin(), o.second_cycle.end(), [&](VertexId v) { return v >= n; });
  if (!touches_new) return o;
  Outcome exact = non_injectivity(code, options);
  if (!exact.verdict.is_conjugacy) return exact;
  return {Verdict::failed(Failure::not_injective), {}, {}, {}};
}

// Checks every key is a path of g and looks up each length-k path of core.
LiftedCode lift_on_core(const DirectedGraph& g, const DirectedGraph& core, const BlockMap& phi) {
  for (const auto& [key, value] : phi.table()) {
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (!g.contains(key[i])) throw InvalidCode({key, "symbol " + key[i] + " is not a source vertex"});
      if (i > 0 && !g.has_edge(key[i - 1], key[i])) throw InvalidCode({key, "not a path of the source graph"});
    }
  }
  auto hb = higher_block(core, phi.block_size());
  LiftedCode lifted{hb.graph, BlockMap(1, 0), std::move(hb.words)};
  for (VertexId v = 0; v < lifted.graph.vertex_count(); ++v) {
    Word w = core.word(lifted.words[v]);
    const Symbol* img = phi.find(w);
    if (!img) throw InvalidCode({w, "no entry for this path"});
    lifted.map.set({lifted.graph.name(v)}, *img);
  }
  return lifted;
}

}  // namespace

bool is_valid_block_map(const DirectedGraph& g, const DirectedGraph& h, const BlockMap& phi) {
  LiftedCode lifted;
  try {
    lifted = lift_block_map(g, phi);
  } catch (const InvalidCode&) {
    return false;
  }
  std::vector<std::optional<VertexId>> img(lifted.graph.vertex_count());
  for (VertexId v = 0; v < lifted.graph.vertex_count(); ++v)
    img[v] = h.find(lifted.map.at({lifted.graph.name(v)}));
  for (auto [x, y] : lifted.graph.edges())
    if (!img[x] || !img[y] || !h.has_edge(*img[x], *img[y])) return false;
  // Isolated k-paths still need an image symbol that exists in h.
  for (const auto& i : img)
    if (!i) return false;
  return true;
}

CycleMapResult is_injective_cycle_map(const OneBlockCode& code, const VerifyOptions& options) {
  const std::size_t n = code.source.vertex_count();
  MetaGraph m = build_meta_graph(code, options.threads);
  CycleMapResult r;
  r.meta_vertices = n * n;
  r.meta_edges = m.csr.target.size();
  auto scc = detail::tarjan(m.csr);
  std::vector<std::size_t> comp_size(scc.count, 0);
  std::vector<bool> comp_has_edge(scc.count, false);
  for (std::size_t v = 0; v < m.csr.size(); ++v) {
    ++comp_size[scc.comp[v]];
    for (std::size_t p = m.csr.offset[v]; p < m.csr.offset[v + 1]; ++p)
      if (scc.comp[m.csr.target[p]] == scc.comp[v]) comp_has_edge[scc.comp[v]] = true;
  }
  // Least off-diagonal (x, y) in source-id order lying on a meta-cycle.
  std::size_t start = npos;
  for (VertexId x = 0; x < n && start == npos; ++x)
    for (VertexId y : m.members[m.cls[x]]) {
      if (x == y) continue;
      std::size_t id = m.id(x, y);
      if (comp_has_edge[scc.comp[id]]) {
        start = id;
        break;
      }
    }
  if (start == npos) return r;
  r.injective = false;
  auto cycle = cycle_in_component(m.csr, scc.comp, start);
  for (std::size_t id : cycle) {
    r.first_cycle.push_back(m.pair_of[id].first);
    r.second_cycle.push_back(m.pair_of[id].second);
  }
  r.witness = CyclePair{code.source.word(r.first_cycle), code.source.word(r.second_cycle),
                        image_word(code, r.first_cycle)};
  return r;
}

CycleMapResult is_injective_cycle_map(const DirectedGraph& g, const DirectedGraph& h, const BlockMap& phi) {
  return is_injective_cycle_map(make_one_block(g, h, phi));
}

Verdict is_conjugacy_irreducible(const OneBlockCode& code, const VerifyOptions& options) {
  require_irreducible(code);
  if (auto bad = check_edge_images(code)) return Verdict::failed(Failure::invalid_code, *bad);
  return irreducible_outcome(code, options).verdict;
}

Verdict is_conjugacy_irreducible(const DirectedGraph& g, const DirectedGraph& h, const BlockMap& phi) {
  return is_conjugacy_irreducible(make_one_block(g, h, phi));
}

namespace {

OneBlockCode add_terminal_vertices(const OneBlockCode& code, const std::string& prefix) {
  OneBlockCode out = code;
  const auto& g = code.source;
  const auto& h = code.target;
  std::size_t j = 0;
  for (const auto& t_comp : sink_components(h)) {
    std::vector<bool> in_t(h.vertex_count(), false);
    for (VertexId u : t_comp) in_t[u] = true;
    std::vector<VertexId> pre;
    for (VertexId x = 0; x < g.vertex_count(); ++x)
      if (in_t[code.image[x]]) pre.push_back(x);
    ++j;
    if (t_comp.size() == 1 && pre.size() == 1) continue;

    VertexId v = t_comp.front();
    auto c = shortest_cycle_through(h, v);
    if (!c) throw ContractError("target graph is not essential");
    std::vector<bool> on_c(h.vertex_count(), false);
    for (VertexId u : *c) on_c[u] = true;
    auto c_edge = [&](VertexId a, VertexId b) {
      for (std::size_t i = 0; i < c->size(); ++i)
        if ((*c)[i] == a && (*c)[(i + 1) % c->size()] == b) return true;
      return false;
    };

    // C': preimages of the cycle, with edges lying over cycle edges. Keep the
    // vertices with an infinite forward walk (drop out-degree 0 repeatedly).
    std::vector<bool> in_cp(g.vertex_count(), false);
    for (VertexId x : pre)
      if (on_c[code.image[x]]) in_cp[x] = true;
    std::vector<std::vector<VertexId>> cp_out(g.vertex_count()), cp_in(g.vertex_count());
    for (VertexId x : pre) {
      if (!in_cp[x]) continue;
      for (VertexId y : g.successors(x))
        if (in_cp[y] && c_edge(code.image[x], code.image[y])) {
          cp_out[x].push_back(y);
          cp_in[y].push_back(x);
        }
    }
    std::vector<std::size_t> outdeg(g.vertex_count(), 0);
    std::deque<VertexId> queue;
    std::vector<bool> alive = in_cp;
    for (VertexId x : pre) {
      if (!in_cp[x]) continue;
      outdeg[x] = cp_out[x].size();
      if (outdeg[x] == 0) {
        alive[x] = false;
        queue.push_back(x);
      }
    }
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      for (VertexId p : cp_in[x])
        if (alive[p] && --outdeg[p] == 0) {
          alive[p] = false;
          queue.push_back(p);
        }
    }

    Symbol t_name = fresh_name(out.target, prefix + std::to_string(j));
    VertexId t = out.target.add_vertex(t_name);
    out.target.add_edge(t, t);
    out.target.add_edge(v, t);
    VertexId tp = out.source.add_vertex(fresh_name(out.source, t_name + "'"));
    out.source.add_edge(tp, tp);
    for (VertexId x : pre)
      if (alive[x] && code.image[x] == v) out.source.add_edge(x, tp);
    out.image.push_back(t);
  }
  return out;
}

OneBlockCode reversed(const OneBlockCode& code) {
  return {reverse_edges(code.source), reverse_edges(code.target), code.image};
}

}  // namespace

OneBlockCode add_sink_components(const OneBlockCode& code) { return add_terminal_vertices(code, "t"); }

OneBlockCode add_source_components(const OneBlockCode& code) {
  return reversed(add_terminal_vertices(reversed(code), "s"));
}

OneBlockCode augment_to_irreducible(const OneBlockCode& code) {
  auto singleton_preimage = [&](VertexId u) {
    std::optional<VertexId> found;
    for (VertexId x = 0; x < code.source.vertex_count(); ++x)
      if (code.image[x] == u) {
        if (found) return std::optional<VertexId>{};
        found = x;
      }
    return found;
  };
  auto collect = [&](const std::vector<std::vector<VertexId>>& comps, const char* what) {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (const auto& comp : comps) {
      if (comp.size() != 1) throw ContractError(std::string(what) + " component is not a single vertex");
      auto pre = singleton_preimage(comp.front());
      if (!pre) throw ContractError(std::string(what) + " vertex does not have a single preimage");
      out.emplace_back(comp.front(), *pre);
    }
    return out;
  };
  auto sinks = collect(sink_components(code.target), "sink");
  auto sources = collect(source_components(code.target), "source");

  OneBlockCode out = code;
  VertexId star_h = out.target.add_vertex(fresh_name(out.target, "*"));
  VertexId star_g = out.source.add_vertex(fresh_name(out.source, "*"));
  for (auto [t, tp] : sinks) {
    out.target.add_edge(t, star_h);
    out.source.add_edge(tp, star_g);
  }
  for (auto [s, sp] : sources) {
    out.target.add_edge(star_h, s);
    out.source.add_edge(star_g, sp);
  }
  out.image.push_back(star_h);
  return out;
}

OneBlockCode augment(const OneBlockCode& code) {
  return augment_to_irreducible(add_source_components(add_sink_components(code)));
}

Verdict verify_one_block(const OneBlockCode& code, const VerifyOptions& options) {
  return one_block_outcome(code, options).verdict;
}

Verdict verify(const DirectedGraph& g, const DirectedGraph& h, const BlockMap& phi, const VerifyOptions& options) {
  DirectedGraph core = trim_to_essential(g);
  LiftedCode lifted;
  try {
    lifted = lift_on_core(g, core, phi);
  } catch (const InvalidCode& e) {
    return Verdict::failed(Failure::invalid_code, e.witness());
  }

  // Edge images are checked against h itself so the witness names the
  // offending (k+1)-word of g.
  const auto& lg = lifted.graph;
  std::vector<VertexId> image(lg.vertex_count());
  for (VertexId v = 0; v < lg.vertex_count(); ++v) {
    const Symbol& s = lifted.map.at({lg.name(v)});
    auto u = h.find(s);
    if (!u)
      return Verdict::failed(Failure::invalid_code,
                             InvalidWord{core.word(lifted.words[v]), "image " + s + " is not a target vertex"});
    image[v] = *u;
  }
  for (auto [x, y] : lg.edges()) {
    if (h.has_edge(image[x], image[y])) continue;
    auto w = lifted.words[x];
    w.push_back(lifted.words[y].back());
    return Verdict::failed(Failure::invalid_code,
                           InvalidWord{core.word(w), "image " + h.name(image[x]) + " " + h.name(image[y]) +
                                                         " is not an edge of the target"});
  }

  // Images of bi-infinite walks stay inside the essential part of h.
  DirectedGraph h_core = trim_to_essential(h);
  OneBlockCode code{lg, h_core, {}};
  for (VertexId v = 0; v < lg.vertex_count(); ++v) code.image.push_back(h_core.index(h.name(image[v])));

  Outcome o = one_block_outcome(code, options);
  if (!o.verdict.witness) return o.verdict;
  Verdict v = o.verdict;
  if (std::holds_alternative<CyclePair>(*v.witness) && !o.first_cycle.empty()) {
    auto& cp = std::get<CyclePair>(*v.witness);
    cp.first = core.word(detail::unlift_cycle(lifted.words, o.first_cycle));
    cp.second = core.word(detail::unlift_cycle(lifted.words, o.second_cycle));
  } else if (std::holds_alternative<Diamond>(*v.witness) && o.diamond) {
    auto img = std::get<Diamond>(*v.witness).image;
    v.witness = detail::make_diamond(core, lifted.words, *o.diamond, img);
  }
  return v;
}

Verdict verify_edge_shift(const MultiGraph& g, const MultiGraph& h, const BlockMap& phi,
                          const VerifyOptions& options) {
  return verify(edge_to_vertex(g), edge_to_vertex(h), phi, options);
}

}  // namespace sftconj
