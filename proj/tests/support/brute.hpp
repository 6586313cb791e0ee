#pragma once

// Deliberately naive reference computations used as test oracles.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "generators.hpp"
#include "sftconj/sftconj.hpp"

namespace sftconj::testing {

// All closed walks of length n, as vertex words starting anywhere.
inline std::set<Word> closed_walks(const DirectedGraph& g, std::size_t n) {
  std::set<Word> out;
  std::vector<VertexId> walk;
  auto rec = [&](auto&& self) -> void {
    if (walk.size() == n) {
      if (g.has_edge(walk.back(), walk.front())) out.insert(g.word(walk));
      return;
    }
    for (VertexId w : g.successors(walk.back())) {
      walk.push_back(w);
      self(self);
      walk.pop_back();
    }
  };
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    walk = {v};
    rec(rec);
  }
  return out;
}

inline std::uint64_t closed_walk_count(const MultiGraph& g, std::size_t n) {
  std::uint64_t count = 0;
  const auto& edges = g.edges();
  std::vector<std::size_t> walk;
  auto rec = [&](auto&& self) -> void {
    if (walk.size() == n) {
      if (edges[walk.back()].target == edges[walk.front()].source) ++count;
      return;
    }
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (edges[e].source == edges[walk.back()].target) {
        walk.push_back(e);
        self(self);
        walk.pop_back();
      }
  };
  for (std::size_t e = 0; e < edges.size(); ++e) {
    walk = {e};
    rec(rec);
  }
  return count;
}

// Scans every path of the essential part with L vertices, 3 <= L <= max_len,
// for two distinct paths sharing first and last vertex and image (1-block).
inline bool brute_has_diamond(const DirectedGraph& g0, const BlockMap& phi, std::size_t max_len) {
  DirectedGraph g = trim_to_essential(g0);
  std::vector<Symbol> img(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) img[v] = phi.at({g.name(v)});
  for (std::size_t L = 3; L <= max_len; ++L) {
    std::map<std::tuple<VertexId, VertexId, Word>, std::vector<VertexId>> seen;
    std::vector<VertexId> path;
    bool found = false;
    auto rec = [&](auto&& self) -> void {
      if (found) return;
      if (path.size() == L) {
        Word image;
        for (VertexId v : path) image.push_back(img[v]);
        auto key = std::make_tuple(path.front(), path.back(), image);
        auto [it, inserted] = seen.emplace(key, path);
        if (!inserted && it->second != path) found = true;
        return;
      }
      for (VertexId w : g.successors(path.back())) {
        path.push_back(w);
        self(self);
        path.pop_back();
      }
    };
    for (VertexId v = 0; v < g.vertex_count() && !found; ++v) {
      path = {v};
      rec(rec);
    }
    if (found) return true;
  }
  return false;
}

// Is there any 1-block conjugacy g -> h? Checked with the oracle.
inline bool brute_one_block_conjugate(const DirectedGraph& g, const DirectedGraph& h) {
  for (const auto& phi : all_one_block_maps(g, h))
    if (oracle_is_conjugacy(g, h, phi).is_conjugacy) return true;
  return false;
}

inline bool undirected_isomorphic(const UndirectedGraph& a, const UndirectedGraph& b) {
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count() || a.edges().size() != b.edges().size()) return false;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [x, y] : a.edges())
      if (!b.has_edge(perm[x], perm[y])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace sftconj::testing
