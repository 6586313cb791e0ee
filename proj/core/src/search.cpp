#include "sftconj/search.hpp"

#include <string>

#include "parallel.hpp"
#include "sftconj/errors.hpp"
#include "sftconj/shift.hpp"
#include "sftconj/verifier.hpp"

namespace sftconj {

namespace {

constexpr std::size_t batch_size = 256;

}  // namespace

std::optional<BlockMap> decide_k_block_conjugacy(const DirectedGraph& g, const DirectedGraph& h, std::size_t k,
                                                 const SearchOptions& options) {
  if (k == 0) throw ContractError("block size must be at least 1");
  DirectedGraph gt = trim_to_essential(g);
  DirectedGraph ht = trim_to_essential(h);
  if (gt.empty() || ht.empty()) {
    if (gt.empty() && ht.empty()) return BlockMap(k, 0);
    return std::nullopt;
  }
  // Conjugate shifts have equal periodic-point counts; this skips the
  // enumeration without changing the answer.
  std::size_t horizon = std::max(gt.vertex_count(), ht.vertex_count());
  if (trace_powers(gt, horizon) != trace_powers(ht, horizon)) return std::nullopt;

  auto hb = higher_block(gt, k);
  const DirectedGraph& lg = hb.graph;
  const std::size_t n = lg.vertex_count(), m = ht.vertex_count();

  std::vector<VertexId> value(n, 0);
  std::vector<std::size_t> hits(m, 0);
  std::size_t unhit = m;
  std::uint64_t nodes = 0;
  std::vector<std::vector<VertexId>> batch;
  std::optional<std::vector<VertexId>> found;

  auto flush = [&] {
    auto i = detail::first_success(batch.size(), options.threads, [&](std::size_t idx) {
      return verify_one_block(OneBlockCode{lg, ht, batch[idx]}).is_conjugacy;
    });
    if (i) found = batch[*i];
    batch.clear();
  };

  // Edge consistency against every already-assigned neighbour; a surjective
  // code must also hit every target vertex.
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) {
      batch.push_back(value);
      if (batch.size() >= batch_size) flush();
      return !found;
    }
    for (VertexId y = 0; y < m; ++y) {
      if (++nodes > options.budget)
        throw BudgetExceeded("decide: more than " + std::to_string(options.budget) + " search nodes");
      bool ok = true;
      for (VertexId p : lg.predecessors(i))
        if (p < i && !ht.has_edge(value[p], y)) ok = false;
      for (VertexId s : lg.successors(i))
        if (s < i && !ht.has_edge(y, value[s])) ok = false;
      if (ok && lg.has_edge(i, i) && !ht.has_edge(y, y)) ok = false;
      if (!ok) continue;
      value[i] = y;
      if (hits[y]++ == 0) --unhit;
      bool go_on = unhit <= n - i - 1 ? self(self, i + 1) : true;
      if (--hits[y] == 0) ++unhit;
      if (!go_on) return false;
    }
    return true;
  };
  rec(rec, 0);
  if (!found && !batch.empty()) flush();
  if (!found) return std::nullopt;

  BlockMap phi(k, 0);
  for (VertexId v = 0; v < n; ++v) phi.set(gt.word(hb.words[v]), ht.name((*found)[v]));
  return phi;
}

Quotient minimal_image_graph(const DirectedGraph& g, const std::vector<std::size_t>& block_of) {
  if (block_of.size() != g.vertex_count()) throw ContractError("block assignment has the wrong length");
  Quotient q;
  std::size_t count = 0;
  for (std::size_t b : block_of) count = std::max(count, b + 1);
  q.blocks.resize(count);
  for (VertexId v = 0; v < g.vertex_count(); ++v) q.blocks[block_of[v]].push_back(v);
  std::vector<Symbol> names;
  for (const auto& block : q.blocks) {
    if (block.empty()) throw ContractError("block assignment leaves a block empty");
    Symbol name;
    for (VertexId v : block) name += (name.empty() ? "" : "+") + g.name(v);
    q.image.add_vertex(name);
    names.push_back(name);
  }
  for (auto [a, b] : g.edges()) q.image.add_edge(block_of[a], block_of[b]);
  q.map = BlockMap(1, 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) q.map.set({g.name(v)}, names[block_of[v]]);
  return q;
}

std::optional<Quotient> search_one_block_reduction(const DirectedGraph& g, std::size_t ell,
                                                   const SearchOptions& options) {
  const std::size_t n = g.vertex_count();
  if (ell > n) return std::nullopt;
  const std::size_t blocks = n - ell;
  std::uint64_t tried = 0;
  std::vector<std::vector<std::size_t>> batch;
  std::optional<Quotient> found;

  auto flush = [&] {
    std::vector<Quotient> qs;
    qs.reserve(batch.size());
    for (const auto& rgs : batch) qs.push_back(minimal_image_graph(g, rgs));
    auto i = detail::first_success(qs.size(), options.threads, [&](std::size_t idx) {
      return verify(g, qs[idx].image, qs[idx].map).is_conjugacy;
    });
    if (i) found = std::move(qs[*i]);
    batch.clear();
  };

  for_each_partition(n, blocks, [&](const std::vector<std::size_t>& rgs) {
    if (++tried > options.budget)
      throw BudgetExceeded("reduce: more than " + std::to_string(options.budget) + " partitions");
    batch.push_back(rgs);
    if (batch.size() >= batch_size) flush();
    return !found;
  });
  if (!found && !batch.empty()) flush();
  return found;
}

}  // namespace sftconj
