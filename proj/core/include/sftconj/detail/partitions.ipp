#pragma once

namespace sftconj {

template <class Visit>
void for_each_partition(std::size_t n, std::size_t blocks, Visit&& visit) {
  if (blocks > n || (n > 0 && blocks == 0)) return;
  std::vector<std::size_t> rgs(n, 0);
  if (n == 0) {
    visit(rgs);
    return;
  }
  // used = number of blocks opened by rgs[0..i)
  auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> bool {
    if (i == n) return used == blocks ? visit(static_cast<const std::vector<std::size_t>&>(rgs)) : true;
    std::size_t top = std::min(used, blocks - 1);
    for (std::size_t v = 0; v <= top; ++v) {
      std::size_t now = v == used ? used + 1 : used;
      if (n - i - 1 < blocks - now) continue;
      rgs[i] = v;
      if (!self(self, i + 1, now)) return false;
    }
    return true;
  };
  rec(rec, 0, 0);
}

}  // namespace sftconj
