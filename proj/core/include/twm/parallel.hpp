// Deterministic parallel map over a fixed chunking.
//
// Work is split into chunks of a fixed size that does not depend on the
// thread count; workers pull chunk indices from an atomic counter and write
// results into per-chunk slots.  Reductions over the slots (pairwise_fold)
// are therefore bit-identical for any number of threads.
#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace twm {

struct ExecPolicy {
  int threads = 0;           // 0 = hardware concurrency
  std::size_t chunk = 64;    // items per chunk; fixed => deterministic

  int resolved_threads() const {
    if (threads > 0) return threads;
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
  }
};

// fn(chunk_begin, chunk_end) -> R; returns per-chunk results in chunk order.
template <class R, class Fn>
std::vector<R> parallel_chunk_map(std::size_t n_items, const ExecPolicy& pol, Fn&& fn) {
  const std::size_t chunk = pol.chunk ? pol.chunk : 1;
  const std::size_t n_chunks = (n_items + chunk - 1) / chunk;
  std::vector<R> out(n_chunks);
  if (n_chunks == 0) return out;

  int nthreads = pol.resolved_threads();
  if (static_cast<std::size_t>(nthreads) > n_chunks)
    nthreads = static_cast<int>(n_chunks);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t c = next.fetch_add(1);
      if (c >= n_chunks) return;
      std::size_t b = c * chunk;
      std::size_t e = b + chunk < n_items ? b + chunk : n_items;
      out[c] = fn(b, e);
    }
  };

  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

}  // namespace twm
