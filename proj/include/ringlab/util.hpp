#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <thread>
#include <vector>

namespace ringlab {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Deterministic 64-bit generator (splitmix64). Used wherever the library
/// samples: results must not depend on platform RNG details.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound). bound == 0 yields 0.
  std::uint64_t below(std::uint64_t bound) {
    return bound == 0 ? 0 : next() % bound;
  }

 private:
  std::uint64_t state_;
};

/// Run fn(worker_id, begin, end) over a partition of [0, n) on `workers`
/// threads. workers <= 1 runs inline. Caller merges worker results in
/// worker-id order, which keeps outcomes independent of scheduling.
template <typename Fn>
void parallel_chunks(std::uint64_t n, unsigned workers, Fn&& fn) {
  if (workers <= 1 || n < 2) {
    fn(0u, std::uint64_t{0}, n);
    return;
  }
  if (workers > n) workers = static_cast<unsigned>(n);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::uint64_t chunk = n / workers;
  const std::uint64_t rem = n % workers;
  std::uint64_t begin = 0;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t len = chunk + (w < rem ? 1 : 0);
    const std::uint64_t end = begin + len;
    threads.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
    begin = end;
  }
  for (auto& t : threads) t.join();
}

}  // namespace ringlab
