// parallel.hpp -- deterministic fan-out helpers. Results never depend on the
// worker schedule: searches always report the least index that matches.

#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

namespace crs {

// Least i in [0, count) with pred(i) true, or nullopt. Workers grab chunks
// from an atomic counter and skip chunks that start past the current best;
// such chunks can only contain larger indices, so the minimum is exact.
template <class Pred>
std::optional<std::uint64_t> first_index_where(std::uint64_t count, unsigned jobs, Pred&& pred) {
  constexpr std::uint64_t kNone = UINT64_MAX;
  if (jobs <= 1 || count < 128) {
    for (std::uint64_t i = 0; i < count; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }
  std::uint64_t chunk = count / (static_cast<std::uint64_t>(jobs) * 16);
  if (chunk < 16) chunk = 16;
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{kNone};
  auto worker = [&] {
    for (;;) {
      std::uint64_t lo = next.fetch_add(chunk);
      if (lo >= count || lo >= best.load()) return;
      std::uint64_t hi = lo + chunk < count ? lo + chunk : count;
      for (std::uint64_t i = lo; i < hi; ++i) {
        if (i >= best.load()) break;
        if (pred(i)) {
          std::uint64_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          break;
        }
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  std::uint64_t found = best.load();
  if (found == kNone) return std::nullopt;
  return found;
}

// Apply fn(i) for every i in [0, count); fn writes into its own slot, so the
// schedule cannot change the result.
template <class Fn>
void for_each_index(std::uint64_t count, unsigned jobs, Fn&& fn) {
  if (jobs <= 1 || count < 64) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::uint64_t chunk = count / (static_cast<std::uint64_t>(jobs) * 16);
  if (chunk < 8) chunk = 8;
  auto worker = [&] {
    for (;;) {
      std::uint64_t lo = next.fetch_add(chunk);
      if (lo >= count) return;
      std::uint64_t hi = lo + chunk < count ? lo + chunk : count;
      for (std::uint64_t i = lo; i < hi; ++i) fn(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace crs
