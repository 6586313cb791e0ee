#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace sftconj::detail {

// Least i in [0, count) with pred(i) true; independent of scheduling.
template <class Pred>
std::optional<std::size_t> first_success(std::size_t count, unsigned threads, Pred&& pred) {
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }
  std::atomic<std::size_t> next{0}, best{none};
  std::exception_ptr error;
  std::mutex error_lock;
  auto work = [&] {
    try {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= count || i > best.load()) return;
        if (pred(i)) {
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_lock);
      if (!error) error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  unsigned n = std::min<std::size_t>(threads, count);
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  if (best.load() == none) return std::nullopt;
  return best.load();
}

}  // namespace sftconj::detail
