#include "sftconj/hitting_set.hpp"

#include <algorithm>
#include <set>

#include "sftconj/errors.hpp"

namespace sftconj {

void validate(const HittingSetInstance& instance) {
  std::set<Symbol> universe;
  for (const auto& u : instance.universe) {
    if (u.empty()) throw ContractError("universe element must be non-empty");
    if (!universe.insert(u).second) throw ContractError("duplicate universe element: " + u);
  }
  for (const auto& s : instance.sets) {
    if (s.empty()) throw ContractError("hitting set instance contains an empty set");
    std::set<Symbol> seen;
    for (const auto& x : s) {
      if (!universe.count(x)) throw ContractError("set element not in universe: " + x);
      if (!seen.insert(x).second) throw ContractError("duplicate element in set: " + x);
    }
  }
}

bool is_hitting_set(const HittingSetInstance& instance, const std::vector<Symbol>& candidate) {
  std::set<Symbol> chosen(candidate.begin(), candidate.end());
  for (const auto& s : instance.sets)
    if (std::none_of(s.begin(), s.end(), [&](const Symbol& x) { return chosen.count(x) != 0; })) return false;
  return true;
}

std::optional<std::vector<Symbol>> hitting_set_brute(const HittingSetInstance& instance) {
  validate(instance);
  const std::size_t n = instance.universe.size();
  const std::size_t limit = std::min(instance.t, n);
  for (std::size_t size = 0; size <= limit; ++size) {
    // Combinations in lexicographic order of universe positions.
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::vector<Symbol> candidate;
      for (std::size_t i : pick) candidate.push_back(instance.universe[i]);
      if (is_hitting_set(instance, candidate)) return candidate;
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace sftconj
