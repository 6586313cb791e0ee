#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sftconj/sftconj.hpp"

namespace sftconj::testing {

using EdgeList = std::vector<std::pair<std::string, std::string>>;

inline DirectedGraph make_graph(const std::vector<std::string>& vertices, const EdgeList& edges) {
  DirectedGraph g;
  for (const auto& v : vertices) g.add_vertex(v);
  for (const auto& [a, b] : edges) g.add_edge(a, b);
  return g;
}

inline BlockMap make_map(const std::vector<std::pair<std::string, std::string>>& pairs) {
  BlockMap phi(1, 0);
  for (const auto& [a, b] : pairs) phi.set({a}, b);
  return phi;
}

inline DirectedGraph two_cycle(const std::string& a = "a", const std::string& b = "b") {
  return make_graph({a, b}, {{a, b}, {b, a}});
}

inline DirectedGraph self_loop(const std::string& v = "v") { return make_graph({v}, {{v, v}}); }

// Five-vertex presentation of the golden mean shift, its 1-block image and the collapsing map.
inline DirectedGraph golden_left() {
  return make_graph({"a", "b", "c", "d", "e"}, {{"a", "b"},
                                                {"b", "a"},
                                                {"a", "c"},
                                                {"c", "d"},
                                                {"d", "e"},
                                                {"e", "a"},
                                                {"c", "b"},
                                                {"e", "e"}});
}

inline DirectedGraph golden_mean() { return make_graph({"a", "b"}, {{"a", "b"}, {"b", "a"}, {"b", "b"}}); }

inline BlockMap golden_map() { return make_map({{"a", "a"}, {"b", "b"}, {"c", "b"}, {"d", "b"}, {"e", "b"}}); }

// A non-surjective 1-block code.
inline DirectedGraph nonsurj_left() {
  return make_graph({"a", "b", "c", "d", "e", "f", "g"}, {{"b", "a"},
                                                          {"c", "b"},
                                                          {"f", "c"},
                                                          {"d", "a"},
                                                          {"e", "d"},
                                                          {"f", "e"},
                                                          {"a", "f"},
                                                          {"g", "g"},
                                                          {"d", "g"}});
}

inline DirectedGraph nonsurj_right() {
  return make_graph({"a", "bd", "c", "e", "f", "g"}, {{"bd", "a"},
                                                      {"c", "bd"},
                                                      {"f", "c"},
                                                      {"e", "bd"},
                                                      {"f", "e"},
                                                      {"a", "f"},
                                                      {"g", "g"},
                                                      {"bd", "g"}});
}

inline BlockMap nonsurj_map() {
  return make_map({{"a", "a"}, {"b", "bd"}, {"c", "c"}, {"d", "bd"}, {"e", "e"}, {"f", "f"}, {"g", "g"}});
}

// A 1-block code that collapses a diamond.
inline DirectedGraph diamond_left() {
  return make_graph({"a", "b", "c", "d", "e", "f", "g"}, {{"b", "a"},
                                                          {"c", "b"},
                                                          {"f", "c"},
                                                          {"d", "a"},
                                                          {"e", "d"},
                                                          {"f", "e"},
                                                          {"a", "f"},
                                                          {"g", "g"},
                                                          {"c", "g"},
                                                          {"e", "g"}});
}

inline DirectedGraph diamond_right() {
  return make_graph({"a", "b", "ce", "d", "f", "g"}, {{"b", "a"},
                                                      {"ce", "b"},
                                                      {"f", "ce"},
                                                      {"d", "a"},
                                                      {"ce", "d"},
                                                      {"a", "f"},
                                                      {"g", "g"},
                                                      {"ce", "g"}});
}

inline BlockMap diamond_map() {
  return make_map({{"a", "a"}, {"b", "b"}, {"c", "ce"}, {"d", "d"}, {"e", "ce"}, {"f", "f"}, {"g", "g"}});
}

inline HittingSetInstance two_set_instance() { return {{{"u1", "u2"}, {"u2", "u3"}}, {"u1", "u2", "u3"}, 1}; }

}  // namespace sftconj::testing
