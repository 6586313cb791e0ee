#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sftconj/graph.hpp"

namespace sftconj {

struct HittingSetInstance {
  std::vector<std::vector<Symbol>> sets;
  std::vector<Symbol> universe;
  std::size_t t = 0;
};

// Throws ContractError on empty sets, duplicates or elements outside the universe.
void validate(const HittingSetInstance& instance);

bool is_hitting_set(const HittingSetInstance& instance, const std::vector<Symbol>& candidate);

// Smallest hitting set of size <= t, scanning subsets by size then
// lexicographically in universe order.
std::optional<std::vector<Symbol>> hitting_set_brute(const HittingSetInstance& instance);

}  // namespace sftconj
