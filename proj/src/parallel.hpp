#ifndef REFLINV_PARALLEL_HPP
#define REFLINV_PARALLEL_HPP

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace reflinv {

// Worker count: hardware concurrency capped by REFLINV_THREADS.
inline unsigned thread_budget() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("REFLINV_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && unsigned(v) < hw) hw = unsigned(v);
  }
  return hw;
}

// Runs fn(i) for i in [0, n); partial results are folded per block and the
// blocks are combined in index order, so the reduction is deterministic for
// exact (associative, commutative) addition.
template <typename Acc, typename Fn, typename Combine>
Acc parallel_block_reduce(size_t n, Acc init, Fn fn, Combine combine) {
  unsigned workers = thread_budget();
  if (workers <= 1 || n < 2) {
    Acc acc = std::move(init);
    for (size_t i = 0; i < n; ++i) fn(acc, i);
    return acc;
  }
  if (size_t(workers) > n) workers = unsigned(n);
  std::vector<Acc> partial(workers, init);
  std::vector<std::thread> threads;
  size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    size_t lo = size_t(w) * chunk;
    size_t hi = std::min(n, lo + chunk);
    threads.emplace_back([&, w, lo, hi] {
      for (size_t i = lo; i < hi; ++i) fn(partial[w], i);
    });
  }
  for (auto& t : threads) t.join();
  Acc acc = std::move(init);
  for (unsigned w = 0; w < workers; ++w) combine(acc, partial[w]);
  return acc;
}

}  // namespace reflinv

#endif
