#include "sftconj/shift.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <unordered_map>

#include "internal.hpp"

namespace sftconj {

namespace {

std::string describe(const InvalidWord& w) {
  return "invalid block code on word '" + join_word(w.word) + "': " + w.reason;
}

}  // namespace

InvalidCode::InvalidCode(InvalidWord w) : Error(describe(w)), witness_(std::move(w)) {}

std::string join_word(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += w[i];
  }
  return s;
}

HigherBlock higher_block(const DirectedGraph& g, std::size_t k) {
  if (k == 0) throw ContractError("higher block needs k >= 1");
  HigherBlock hb;
  if (k == 1) {
    hb.graph = g;
    for (VertexId v = 0; v < g.vertex_count(); ++v) hb.words.push_back({v});
    return hb;
  }
  // Depth-first in ascending successor order gives lexicographic id order.
  std::vector<VertexId> path;
  auto extend = [&](auto&& self) -> void {
    if (path.size() == k) {
      hb.words.push_back(path);
      return;
    }
    for (VertexId w : g.successors(path.back())) {
      path.push_back(w);
      self(self);
      path.pop_back();
    }
  };
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    path.assign(1, v);
    extend(extend);
  }
  std::map<std::vector<VertexId>, VertexId> id_of;
  for (VertexId i = 0; i < hb.words.size(); ++i) {
    hb.graph.add_vertex(join_word(g.word(hb.words[i])));
    id_of.emplace(hb.words[i], i);
  }
  std::vector<VertexId> next(k);
  for (VertexId i = 0; i < hb.words.size(); ++i) {
    const auto& w = hb.words[i];
    std::copy(w.begin() + 1, w.end(), next.begin());
    for (VertexId x : g.successors(w.back())) {
      next.back() = x;
      hb.graph.add_edge(i, id_of.at(next));
    }
  }
  return hb;
}

DirectedGraph higher_block_graph(const DirectedGraph& g, std::size_t k) {
  return higher_block(g, k).graph;
}

LiftedCode lift_block_map(const DirectedGraph& g, const BlockMap& phi) {
  for (const auto& [key, value] : phi.table()) {
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (!g.contains(key[i])) throw InvalidCode({key, "symbol " + key[i] + " is not a source vertex"});
      if (i > 0 && !g.has_edge(key[i - 1], key[i]))
        throw InvalidCode({key, "not a path of the source graph"});
    }
  }
  auto hb = higher_block(g, phi.block_size());
  LiftedCode lifted{hb.graph, BlockMap(1, 0), std::move(hb.words)};
  for (VertexId v = 0; v < lifted.graph.vertex_count(); ++v) {
    Word w = g.word(lifted.words[v]);
    const Symbol* img = phi.find(w);
    if (!img) throw InvalidCode({w, "no entry for this path"});
    lifted.map.set({lifted.graph.name(v)}, *img);
  }
  return lifted;
}

DirectedGraph edge_to_vertex(const MultiGraph& g) {
  DirectedGraph out;
  std::vector<std::vector<std::size_t>> leaving(g.vertex_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    out.add_vertex(g.edges()[i].label);
    leaving[g.edges()[i].source].push_back(i);
  }
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    for (std::size_t j : leaving[g.edges()[i].target]) out.add_edge(i, j);
  return out;
}

std::vector<Word> enumerate_cycles(const DirectedGraph& g, std::size_t n, std::uint64_t max_cycles) {
  if (n == 0) throw ContractError("cycle length must be positive");
  std::vector<Word> cycles;
  std::vector<VertexId> path;
  auto walk = [&](auto&& self) -> void {
    if (path.size() == n) {
      if (g.has_edge(path.back(), path.front())) {
        if (cycles.size() >= max_cycles)
          throw BudgetExceeded("more than " + std::to_string(max_cycles) + " cycles of length " +
                               std::to_string(n));
        cycles.push_back(g.word(path));
      }
      return;
    }
    for (VertexId w : g.successors(path.back())) {
      path.push_back(w);
      self(self);
      path.pop_back();
    }
  };
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    path.assign(1, v);
    walk(walk);
  }
  return cycles;
}

Word cycle_image(const BlockMap& phi, const Word& cycle) {
  const std::size_t n = cycle.size(), k = phi.block_size(), m = phi.memory();
  Word image;
  image.reserve(n);
  Word window(k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) window[j] = cycle[(i + n * k - m + j) % n];
    image.push_back(phi.at(window));
  }
  return image;
}

std::optional<Diamond> collapses_diamond(const DirectedGraph& g, const BlockMap& phi) {
  DirectedGraph t = trim_to_essential(g);
  // Entries on non-essential vertices play no part in the shift.
  BlockMap restricted(phi.block_size(), phi.memory());
  for (const auto& [key, value] : phi.table())
    if (std::all_of(key.begin(), key.end(), [&](const Symbol& s) { return t.contains(s); }))
      restricted.set(key, value);
  auto lifted = lift_block_map(t, restricted);
  std::unordered_map<Symbol, std::size_t> symbol_id;
  std::vector<std::size_t> label(lifted.graph.vertex_count());
  Word images(lifted.graph.vertex_count());
  for (VertexId v = 0; v < lifted.graph.vertex_count(); ++v) {
    images[v] = lifted.map.at({lifted.graph.name(v)});
    label[v] = symbol_id.emplace(images[v], symbol_id.size()).first->second;
  }
  auto pair = detail::find_diamond(lifted.graph, label);
  if (!pair) return std::nullopt;
  Word image;
  for (VertexId v : pair->left) image.push_back(images[v]);
  return detail::make_diamond(t, lifted.words, *pair, image);
}

namespace {

double component_radius(const DirectedGraph& g, const std::vector<VertexId>& comp,
                        const EntropyOptions& opt) {
  const std::size_t n = comp.size();
  std::unordered_map<VertexId, std::size_t> local;
  for (std::size_t i = 0; i < n; ++i) local.emplace(comp[i], i);
  std::vector<std::vector<std::size_t>> rows(n);
  bool has_edge = false;
  for (std::size_t i = 0; i < n; ++i)
    for (VertexId w : g.successors(comp[i]))
      if (auto it = local.find(w); it != local.end()) {
        rows[i].push_back(it->second);
        has_edge = true;
      }
  if (!has_edge) return 0.0;

  // Power iteration on A + I (primitive on an irreducible block) with
  // Collatz-Wielandt bounds on its spectral radius.
  std::vector<double> x(n, 1.0), y(n);
  double lo = 0.0, hi = std::numeric_limits<double>::infinity();
  for (std::size_t it = 0; it < opt.max_iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = x[i];
      for (std::size_t j : rows[i]) s += x[j];
      y[i] = s;
    }
    double cur_lo = std::numeric_limits<double>::infinity(), cur_hi = 0.0, norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double r = y[i] / x[i];
      cur_lo = std::min(cur_lo, r);
      cur_hi = std::max(cur_hi, r);
      norm = std::max(norm, y[i]);
    }
    lo = std::max(lo, cur_lo - 1.0);
    hi = std::min(hi, cur_hi - 1.0);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
    if (lo > 0.0 && (hi - lo) / (lo * std::log(2.0)) < opt.tolerance) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double entropy_estimate(const DirectedGraph& g, const EntropyOptions& options) {
  if (!(options.tolerance > 0.0)) throw ContractError("entropy tolerance must be positive");
  auto core = trim_to_essential(g);
  if (core.empty()) throw UndefinedEntropy();
  double radius = 0.0;
  for (const auto& comp : strongly_connected_components(core))
    radius = std::max(radius, component_radius(core, comp, options));
  return std::log2(radius);
}

double entropy_estimate(const DirectedGraph& g, double tolerance) {
  EntropyOptions o;
  o.tolerance = tolerance;
  return entropy_estimate(g, o);
}

namespace detail {

std::optional<WalkPair> find_diamond(const DirectedGraph& g, const std::vector<std::size_t>& label) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  // parent[x*n+y] = previous pair on the BFS tree; roots point to their diagonal start.
  std::vector<std::size_t> parent(n * n, none);
  std::deque<std::size_t> queue;
  auto visit = [&](std::size_t from, VertexId a, VertexId b) {
    std::size_t id = a * n + b;
    if (parent[id] != none) return;
    parent[id] = from;
    queue.push_back(id);
  };
  for (VertexId d = 0; d < n; ++d) {
    const auto& s = g.successors(d);
    for (VertexId a : s)
      for (VertexId b : s)
        if (a != b && label[a] == label[b]) visit(d * n + d, a, b);
  }
  while (!queue.empty()) {
    std::size_t id = queue.front();
    queue.pop_front();
    VertexId a = id / n, b = id % n;
    const auto& sa = g.successors(a);
    const auto& sb = g.successors(b);
    // Closing on the diagonal?
    for (VertexId z : sa) {
      if (!std::binary_search(sb.begin(), sb.end(), z)) continue;
      WalkPair p;
      p.left.push_back(z);
      p.right.push_back(z);
      std::size_t cur = id;
      while (true) {
        VertexId x = cur / n, y = cur % n;
        p.left.push_back(x);
        p.right.push_back(y);
        if (x == y) break;
        cur = parent[cur];
      }
      std::reverse(p.left.begin(), p.left.end());
      std::reverse(p.right.begin(), p.right.end());
      return p;
    }
    for (VertexId x : sa)
      for (VertexId y : sb)
        if (x != y && label[x] == label[y]) visit(id, x, y);
  }
  return std::nullopt;
}

std::vector<VertexId> unlift_walk(const std::vector<std::vector<VertexId>>& words,
                                  const std::vector<VertexId>& walk) {
  std::vector<VertexId> out;
  if (walk.empty()) return out;
  out = words.at(walk.front());
  for (std::size_t i = 1; i < walk.size(); ++i) out.push_back(words.at(walk[i]).back());
  return out;
}

std::vector<VertexId> unlift_cycle(const std::vector<std::vector<VertexId>>& words,
                                   const std::vector<VertexId>& cycle) {
  std::vector<VertexId> out;
  out.reserve(cycle.size());
  for (VertexId v : cycle) out.push_back(words.at(v).front());
  return out;
}

Diamond make_diamond(const DirectedGraph& base, const std::vector<std::vector<VertexId>>& words,
                     const WalkPair& pair, const Word& image) {
  const std::size_t k = words.empty() ? 1 : words.front().size();
  auto left = base.word(unlift_walk(words, pair.left));
  auto right = base.word(unlift_walk(words, pair.right));
  Diamond d;
  d.prefix.assign(left.begin(), left.begin() + k);
  d.suffix.assign(left.end() - k, left.end());
  d.left.assign(left.begin() + k, left.end() - k);
  d.right.assign(right.begin() + k, right.end() - k);
  d.image = image;
  return d;
}

}  // namespace detail

}  // namespace sftconj
