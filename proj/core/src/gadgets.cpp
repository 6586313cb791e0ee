#include "sftconj/gadgets.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "sftconj/errors.hpp"
#include "sftconj/shift.hpp"

namespace sftconj {

VertexId UndirectedGraph::add_vertex(const Symbol& name) {
  if (name.empty()) throw ContractError("vertex name must be non-empty");
  auto [it, inserted] = index_.emplace(name, names_.size());
  if (!inserted) throw ContractError("duplicate vertex: " + name);
  names_.push_back(name);
  return it->second;
}

void UndirectedGraph::add_edge(const Symbol& a, const Symbol& b) {
  auto ia = index_.find(a), ib = index_.find(b);
  if (ia == index_.end() || ib == index_.end()) throw ContractError("unknown vertex in edge " + a + " " + b);
  auto e = std::minmax(ia->second, ib->second);
  if (!has_edge(e.first, e.second)) edges_.emplace_back(e.first, e.second);
}

bool UndirectedGraph::has_edge(VertexId a, VertexId b) const {
  auto e = std::minmax(a, b);
  return std::find(edges_.begin(), edges_.end(), std::make_pair(e.first, e.second)) != edges_.end();
}

bool UndirectedGraph::is_connected() const {
  if (names_.empty()) return false;
  std::vector<std::vector<VertexId>> adj(names_.size());
  for (auto [a, b] : edges_) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(names_.size(), false);
  std::deque<VertexId> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        queue.push_back(w);
      }
  }
  return count == names_.size();
}

DirectedGraph double_edges(const UndirectedGraph& g) {
  DirectedGraph d;
  for (const auto& name : g.names()) d.add_vertex(name);
  for (auto [a, b] : g.edges()) {
    d.add_edge(a, b);
    d.add_edge(b, a);
  }
  return d;
}

std::pair<DirectedGraph, DirectedGraph> gi_to_digraphs(const UndirectedGraph& g1, const UndirectedGraph& g2) {
  if (!g1.is_connected() || !g2.is_connected()) throw ContractError("isomorphism reduction needs connected graphs");
  return {double_edges(g1), double_edges(g2)};
}

namespace {

void require_k(std::size_t k) {
  if (k < 2) throw ContractError("gadgets need k >= 2");
}

std::string idx(std::size_t i) { return std::to_string(i); }

// Role of a vertex inside a source vertex gadget.
struct GadgetRole {
  VertexId origin = 0;
  enum Kind { in, path, top, bottom, out } kind = in;
  std::size_t step = 0;
};

std::vector<Symbol> source_chain(const Symbol& v, std::size_t k) {
  std::vector<Symbol> names{v + "__in"};
  for (std::size_t i = 1; i < k; ++i) names.push_back(v + "__" + idx(i));
  names.push_back(v + "__" + idx(k) + "t");
  names.push_back(v + "__" + idx(k) + "b");
  names.push_back(v + "__out");
  return names;
}

}  // namespace

DirectedGraph source_vertex_gadget(const DirectedGraph& g, std::size_t k) {
  require_k(k);
  DirectedGraph out;
  for (const auto& v : g.names()) {
    auto names = source_chain(v, k);
    for (const auto& n : names) out.add_vertex(n);
    // in, 1..k-1 form a path; the last path vertex forks into top/bottom.
    for (std::size_t i = 0; i + 1 < k; ++i) out.add_edge(names[i], names[i + 1]);
    const Symbol& last = names[k - 1];
    out.add_edge(last, names[k]);
    out.add_edge(last, names[k + 1]);
    out.add_edge(names[k], names[k + 2]);
    out.add_edge(names[k + 1], names[k + 2]);
  }
  for (auto [a, b] : g.edges()) out.add_edge(g.name(a) + "__out", g.name(b) + "__in");
  return out;
}

DirectedGraph target_vertex_gadget(const DirectedGraph& h, std::size_t k) {
  require_k(k);
  DirectedGraph out;
  for (const auto& u : h.names()) {
    out.add_vertex(u + "__in");
    for (std::size_t i = 1; i <= k; ++i) out.add_vertex(u + "__" + idx(i) + "t");
    for (std::size_t i = 1; i <= k; ++i) out.add_vertex(u + "__" + idx(i) + "b");
    out.add_vertex(u + "__out");
    for (const char* side : {"t", "b"}) {
      Symbol prev = u + "__in";
      for (std::size_t i = 1; i <= k; ++i) {
        Symbol cur = u + "__" + idx(i) + side;
        out.add_edge(prev, cur);
        prev = cur;
      }
      out.add_edge(prev, u + "__out");
    }
  }
  for (auto [a, b] : h.edges()) out.add_edge(h.name(a) + "__out", h.name(b) + "__in");
  return out;
}

std::pair<DirectedGraph, DirectedGraph> vertex_gadget_pair(const DirectedGraph& g, const DirectedGraph& h,
                                                          std::size_t k) {
  return {source_vertex_gadget(g, k), target_vertex_gadget(h, k)};
}

namespace {

void copy_vertices(const MultiGraph& from, MultiGraph& to) {
  for (const auto& v : from.names()) to.add_vertex(v);
}

VertexId add_internal(MultiGraph& g, const Symbol& name) {
  if (g.contains(name)) throw ContractError("gadget vertex name collides with an existing vertex: " + name);
  return g.add_vertex(name);
}

}  // namespace

MultiGraph source_edge_gadget(const MultiGraph& g, std::size_t k) {
  require_k(k);
  MultiGraph out;
  copy_vertices(g, out);
  for (const auto& e : g.edges()) {
    // Internal vertices e__n1 .. e__n<k+1>.
    std::vector<VertexId> mid;
    for (std::size_t i = 1; i <= k + 1; ++i) mid.push_back(add_internal(out, e.label + "__n" + idx(i)));
    out.add_edge(e.label + "__in", e.source, mid[0]);
    for (std::size_t i = 1; i < k; ++i) out.add_edge(e.label + "__" + idx(i), mid[i - 1], mid[i]);
    out.add_edge(e.label + "__" + idx(k) + "t", mid[k - 1], mid[k]);
    out.add_edge(e.label + "__" + idx(k) + "b", mid[k - 1], mid[k]);
    out.add_edge(e.label + "__out", mid[k], e.target);
  }
  return out;
}

MultiGraph target_edge_gadget(const MultiGraph& h, std::size_t k) {
  require_k(k);
  MultiGraph out;
  copy_vertices(h, out);
  for (const auto& f : h.edges()) {
    VertexId p = add_internal(out, f.label + "__p");
    VertexId q = add_internal(out, f.label + "__q");
    out.add_edge(f.label + "__in", f.source, p);
    for (const char* side : {"t", "b"}) {
      VertexId prev = p;
      for (std::size_t i = 1; i <= k; ++i) {
        VertexId next = i == k ? q : add_internal(out, f.label + "__" + side + idx(i));
        out.add_edge(f.label + "__" + idx(i) + side, prev, next);
        prev = next;
      }
    }
    out.add_edge(f.label + "__out", q, f.target);
  }
  return out;
}

std::pair<MultiGraph, MultiGraph> edge_gadget_pair(const MultiGraph& g, const MultiGraph& h, std::size_t k) {
  return {source_edge_gadget(g, k), target_edge_gadget(h, k)};
}

BlockMap lift_to_vertex_gadget(const DirectedGraph& g, const BlockMap& phi, std::size_t k) {
  if (phi.block_size() != 1) throw ContractError("expected a 1-block map");
  DirectedGraph gp = source_vertex_gadget(g, k);
  std::vector<GadgetRole> role(gp.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto names = source_chain(g.name(v), k);
    for (std::size_t i = 0; i < names.size(); ++i) {
      GadgetRole r{v, GadgetRole::path, i};
      if (i == 0) r.kind = GadgetRole::in;
      else if (i == k) r.kind = GadgetRole::top;
      else if (i == k + 1) r.kind = GadgetRole::bottom;
      else if (i == k + 2) r.kind = GadgetRole::out;
      role[gp.index(names[i])] = r;
    }
  }
  auto hb = higher_block(gp, k);
  BlockMap out(k, 0);
  for (const auto& w : hb.words) {
    const GadgetRole& r = role[w.front()];
    const Symbol& u = phi.at({g.name(r.origin)});
    Symbol img;
    switch (r.kind) {
      case GadgetRole::in: img = u + "__in"; break;
      case GadgetRole::out: img = u + "__out"; break;
      case GadgetRole::top: img = u + "__" + idx(k) + "t"; break;
      case GadgetRole::bottom: img = u + "__" + idx(k) + "b"; break;
      case GadgetRole::path: {
        // The fork is k - step positions ahead, inside the window.
        const GadgetRole& fork = role[w.at(k - r.step)];
        img = u + "__" + idx(r.step) + (fork.kind == GadgetRole::top ? "t" : "b");
        break;
      }
    }
    out.set(gp.word(w), img);
  }
  return out;
}

namespace {

using NameSet = std::set<Symbol>;

NameSet names_of(const DirectedGraph& g, const std::vector<VertexId>& ids) {
  NameSet s;
  for (VertexId v : ids) s.insert(g.name(v));
  return s;
}

bool subset(const NameSet& a, const NameSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

bool has_structure_property(const DirectedGraph& g, const StructurePartition& p) {
  if (!is_essential(g) || g.empty()) return false;
  NameSet A(p.A.begin(), p.A.end()), B(p.B.begin(), p.B.end()), C(p.C.begin(), p.C.end());
  if (A.size() != p.A.size() || B.size() != p.B.size() || C.size() != p.C.size()) return false;
  NameSet all{p.alpha};
  for (const auto* part : {&A, &B, &C})
    for (const auto& x : *part)
      if (!all.insert(x).second) return false;
  if (all != NameSet(g.names().begin(), g.names().end())) return false;

  VertexId alpha = g.index(p.alpha);
  NameSet around{p.alpha};
  around.insert(A.begin(), A.end());
  around.insert(C.begin(), C.end());
  if (names_of(g, g.successors(alpha)) != around || names_of(g, g.predecessors(alpha)) != around) return false;

  for (const auto& a : A) {
    VertexId v = g.index(a);
    NameSet base{a, p.alpha}, upper = base;
    upper.insert(B.begin(), B.end());
    auto out = names_of(g, g.successors(v));
    if (names_of(g, g.predecessors(v)) != base || !subset(base, out) || !subset(out, upper)) return false;
  }
  for (const auto& c : C) {
    VertexId v = g.index(c);
    NameSet base{c, p.alpha}, upper = base;
    upper.insert(B.begin(), B.end());
    auto in = names_of(g, g.predecessors(v));
    if (names_of(g, g.successors(v)) != base || !subset(base, in) || !subset(in, upper)) return false;
  }
  for (const auto& b : B) {
    VertexId v = g.index(b);
    if (!subset(names_of(g, g.predecessors(v)), A) || !subset(names_of(g, g.successors(v)), C)) return false;
  }
  return true;
}

WidgetAttachment attach_weight_widget(const DirectedGraph& g, const StructurePartition& p,
                                      const std::vector<Symbol>& a_star, const std::vector<Symbol>& c_star,
                                      std::size_t K, const std::string& id) {
  if (K < 2 || K % 2 != 0) throw ContractError("widget size K must be even and at least 2");
  if (a_star.empty() || c_star.empty()) throw ContractError("widget attachment sets must be non-empty");
  NameSet A(p.A.begin(), p.A.end()), C(p.C.begin(), p.C.end());
  for (const auto& a : a_star)
    if (!A.count(a)) throw ContractError("attachment vertex " + a + " is not in A");
  for (const auto& c : c_star)
    if (!C.count(c)) throw ContractError("attachment vertex " + c + " is not in C");
  if (!has_structure_property(g, p)) throw ContractError("host graph does not have the structure property");

  WidgetAttachment out{g, p, {}};
  WeightWidget& w = out.widget;
  w.id = id;
  w.K = K;
  w.a_star = a_star;
  w.c_star = c_star;
  const std::string prefix = "w" + id + "__";
  auto fresh = [&](const Symbol& name) {
    if (out.graph.contains(name)) throw ContractError("widget vertex name already in use: " + name);
    out.graph.add_vertex(name);
    return name;
  };
  for (std::size_t i = 1; i <= K / 2; ++i) w.a.push_back(fresh(prefix + "a" + idx(i)));
  for (std::size_t i = 1; i <= K; ++i) w.b.push_back(fresh(prefix + "b" + idx(i)));
  for (std::size_t i = 1; i <= K / 2; ++i) w.c.push_back(fresh(prefix + "c" + idx(i)));

  auto& G = out.graph;
  for (const auto& x : w.a) {
    G.add_edge(x, x);
    G.add_edge(x, p.alpha);
    G.add_edge(p.alpha, x);
  }
  for (const auto& x : w.c) {
    G.add_edge(x, x);
    G.add_edge(x, p.alpha);
    G.add_edge(p.alpha, x);
  }
  for (std::size_t i = 1; i <= K / 2; ++i) {
    const Symbol& odd = w.b[2 * i - 2];
    const Symbol& even = w.b[2 * i - 1];
    for (const auto& a : a_star) G.add_edge(a, odd);
    for (std::size_t j = 1; j < i; ++j) G.add_edge(w.a[j - 1], odd);
    G.add_edge(odd, w.c[i - 1]);
    G.add_edge(w.a[i - 1], even);
    for (const auto& c : c_star) G.add_edge(even, c);
    for (std::size_t j = 1; j <= i; ++j) G.add_edge(even, w.c[j - 1]);
  }
  out.partition.A.insert(out.partition.A.end(), w.a.begin(), w.a.end());
  out.partition.B.insert(out.partition.B.end(), w.b.begin(), w.b.end());
  out.partition.C.insert(out.partition.C.end(), w.c.begin(), w.c.end());
  return out;
}

bool is_weight_widget(const DirectedGraph& g, const StructurePartition& p, const WeightWidget& w) {
  if (w.K < 2 || w.K % 2 || w.a.size() != w.K / 2 || w.b.size() != w.K || w.c.size() != w.K / 2) return false;
  if (w.a_star.empty() || w.c_star.empty()) return false;
  for (const auto* names : {&w.a, &w.b, &w.c, &w.a_star, &w.c_star})
    for (const auto& x : *names)
      if (!g.contains(x)) return false;
  NameSet a_set(w.a.begin(), w.a.end()), b_set(w.b.begin(), w.b.end()), c_set(w.c.begin(), w.c.end());
  for (const auto& x : w.a_star)
    if (a_set.count(x)) return false;
  for (const auto& x : w.c_star)
    if (c_set.count(x)) return false;
  for (std::size_t i = 1; i <= w.K / 2; ++i) {
    NameSet in_odd(w.a_star.begin(), w.a_star.end());
    for (std::size_t j = 1; j < i; ++j) in_odd.insert(w.a[j - 1]);
    NameSet out_even(w.c_star.begin(), w.c_star.end());
    for (std::size_t j = 1; j <= i; ++j) out_even.insert(w.c[j - 1]);
    VertexId odd = g.index(w.b[2 * i - 2]), even = g.index(w.b[2 * i - 1]);
    if (names_of(g, g.predecessors(odd)) != in_odd || names_of(g, g.successors(odd)) != NameSet{w.c[i - 1]})
      return false;
    if (names_of(g, g.predecessors(even)) != NameSet{w.a[i - 1]} || names_of(g, g.successors(even)) != out_even)
      return false;
  }
  // The widget's b vertices are the only B-neighbours of A_w and C_w.
  NameSet B(p.B.begin(), p.B.end());
  for (const auto& a : w.a)
    for (const auto& x : names_of(g, g.successors(g.index(a))))
      if (B.count(x) && !b_set.count(x)) return false;
  for (const auto& c : w.c)
    for (const auto& x : names_of(g, g.predecessors(g.index(c))))
      if (B.count(x) && !b_set.count(x)) return false;
  return true;
}

Symbol set_vertex(std::size_t i) { return "S" + idx(i); }

Symbol connector_vertex(std::size_t i, const Symbol& s) { return "b_S" + idx(i) + "_" + s; }

HittingSetReduction hitting_set_reduction(const HittingSetInstance& instance, std::optional<std::size_t> K,
                                          bool with_widgets) {
  validate(instance);
  if (instance.sets.empty()) throw ContractError("hitting set instance has no sets");
  std::set<Symbol> used;
  for (const auto& s : instance.sets) used.insert(s.begin(), s.end());
  for (const auto& u : instance.universe)
    if (!used.count(u)) throw ContractError("universe element " + u + " is in no set");

  const std::size_t m = instance.sets.size(), n = instance.universe.size();
  HittingSetReduction r;
  r.instance = instance;
  r.meta.m = m;
  r.meta.n = n;
  r.meta.with_widgets = with_widgets;
  std::size_t default_K = 5 * m * n;
  if (K) {
    if (*K < 2 || *K % 2) throw ContractError("K must be even and at least 2");
    r.meta.K = *K;
  } else {
    r.meta.K = default_K + default_K % 2;
  }
  r.meta.test_scale = r.meta.K < default_K;

  DirectedGraph& G = r.graph;
  StructurePartition& P = r.partition;
  auto add = [&](const Symbol& name) {
    if (G.contains(name)) throw ContractError("reduction vertex name clashes with an element: " + name);
    G.add_vertex(name);
  };
  for (std::size_t i = 1; i <= m; ++i) {
    add(set_vertex(i));
    P.A.push_back(set_vertex(i));
  }
  for (const auto& u : instance.universe) {
    add(u);
    P.C.push_back(u);
  }
  add("beta");
  P.C.push_back("beta");
  for (std::size_t i = 1; i <= m; ++i) {
    for (const auto& s : instance.sets[i - 1]) {
      Symbol b = connector_vertex(i, s);
      add(b);
      P.B.push_back(b);
      G.add_edge(set_vertex(i), b);
      G.add_edge(b, s);
    }
    Symbol b = connector_vertex(i, "beta");
    add(b);
    P.B.push_back(b);
    G.add_edge(set_vertex(i), b);
    G.add_edge(b, "beta");
  }
  add("alpha");
  P.alpha = "alpha";
  G.add_edge("alpha", "alpha");
  for (const auto* part : {&P.A, &P.C})
    for (const auto& x : *part) {
      G.add_edge(x, x);
      G.add_edge(x, "alpha");
      G.add_edge("alpha", x);
    }
  if (!has_structure_property(G, P)) throw ContractError("reduction base graph lost the structure property");

  if (with_widgets) {
    std::size_t next = 1;
    auto attach = [&](const std::vector<Symbol>& a_star, const std::vector<Symbol>& c_star) {
      auto att = attach_weight_widget(G, P, a_star, c_star, r.meta.K, idx(next++));
      G = std::move(att.graph);
      P = std::move(att.partition);
      r.meta.widgets.push_back(att.widget);
      return att.widget.id;
    };
    for (std::size_t i = 1; i <= m; ++i)
      for (const auto& s : instance.sets[i - 1])
        r.meta.incidence_widget[{set_vertex(i), s}] = attach({set_vertex(i)}, {s, "beta"});
    for (const auto& s : instance.universe) {
      std::vector<Symbol> hit;
      for (std::size_t i = 1; i <= m; ++i) {
        const auto& S = instance.sets[i - 1];
        if (std::find(S.begin(), S.end(), s) != S.end()) hit.push_back(set_vertex(i));
      }
      r.meta.element_widget[s] = attach(hit, {s});
    }
  }
  return r;
}

std::vector<AmalgamationStep> activation_schedule(const HittingSetReduction& r,
                                                  const std::vector<Symbol>& hitting_set) {
  const auto& inst = r.instance;
  std::set<Symbol> H(hitting_set.begin(), hitting_set.end());
  for (const auto& s : H)
    if (std::find(inst.universe.begin(), inst.universe.end(), s) == inst.universe.end())
      throw ContractError("hitting set element not in universe: " + s);
  if (!is_hitting_set(inst, hitting_set)) throw ContractError("not a hitting set");

  DirectedGraph cur = r.graph;
  std::vector<AmalgamationStep> steps;
  auto merge = [&](const Symbol& x, const Symbol& y) {
    auto kind = can_amalgamate(cur, x, y);
    if (!kind) throw ContractError("schedule reached a pair that cannot be amalgamated: " + x + ", " + y);
    Symbol name = x + "+" + y;
    cur = amalgamate(cur, x, y, name);
    steps.push_back({*kind, x, y, name});
    return name;
  };
  auto absorb_widget = [&](Symbol x, const std::string& id) {
    if (!r.meta.with_widgets) return;
    auto w = std::find_if(r.meta.widgets.begin(), r.meta.widgets.end(),
                          [&](const WeightWidget& ww) { return ww.id == id; });
    for (const auto& b : w->b) x = merge(x, b);
  };

  for (std::size_t i = 1; i <= inst.sets.size(); ++i) {
    const auto& S = inst.sets[i - 1];
    // Least element of the set (universe order) that is in H.
    Symbol chosen;
    for (const auto& u : inst.universe)
      if (H.count(u) && std::find(S.begin(), S.end(), u) != S.end()) {
        chosen = u;
        break;
      }
    Symbol x = merge(connector_vertex(i, chosen), connector_vertex(i, "beta"));
    if (r.meta.with_widgets) absorb_widget(x, r.meta.incidence_widget.at({set_vertex(i), chosen}));
  }
  for (const auto& s : inst.universe) {
    if (H.count(s)) continue;
    Symbol x;
    for (std::size_t i = 1; i <= inst.sets.size(); ++i) {
      const auto& S = inst.sets[i - 1];
      if (std::find(S.begin(), S.end(), s) == S.end()) continue;
      x = x.empty() ? connector_vertex(i, s) : merge(x, connector_vertex(i, s));
    }
    if (r.meta.with_widgets) absorb_widget(x, r.meta.element_widget.at(s));
  }
  return steps;
}

}  // namespace sftconj
