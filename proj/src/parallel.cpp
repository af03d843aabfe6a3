#include "cubelab/parallel.hpp"

#include <algorithm>

namespace clab {

namespace {
std::atomic<int> g_threads{0};

int hardware_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}
}  // namespace

int thread_count() {
  int t = g_threads.load();
  return t > 0 ? t : hardware_threads();
}

void set_thread_count(int n) { g_threads.store(n); }

void parallel_chunks(std::int64_t total,
                     const std::function<void(std::size_t, std::int64_t,
                                              std::int64_t)>& fn) {
  if (total <= 0) return;
  // Chunk layout depends only on `total`, never on the thread count.
  const std::int64_t chunk = std::max<std::int64_t>(1, total / 128);
  const std::size_t nchunks =
      static_cast<std::size_t>((total + chunk - 1) / chunk);
  const int nthreads = std::min<int>(thread_count(),
                                     static_cast<int>(nchunks));
  if (nthreads <= 1) {
    for (std::size_t c = 0; c < nchunks; ++c) {
      std::int64_t b = static_cast<std::int64_t>(c) * chunk;
      fn(c, b, std::min(total, b + chunk));
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t c = next.fetch_add(1);
      if (c >= nchunks) break;
      std::int64_t b = static_cast<std::int64_t>(c) * chunk;
      fn(c, b, std::min(total, b + chunk));
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(nthreads) - 1);
  for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

double parallel_sum(std::int64_t total,
                    const std::function<double(std::int64_t, std::int64_t)>&
                        chunk_sum) {
  if (total <= 0) return 0.0;
  const std::int64_t chunk = std::max<std::int64_t>(1, total / 128);
  const std::size_t nchunks =
      static_cast<std::size_t>((total + chunk - 1) / chunk);
  std::vector<double> partial(nchunks, 0.0);
  parallel_chunks(total, [&](std::size_t c, std::int64_t b, std::int64_t e) {
    partial[c] = chunk_sum(b, e);
  });
  KahanSum acc;
  for (double v : partial) acc.add(v);
  return acc.value();
}

std::complex<double> parallel_sum_complex(
    std::int64_t total,
    const std::function<std::complex<double>(std::int64_t, std::int64_t)>&
        chunk_sum) {
  if (total <= 0) return {0.0, 0.0};
  const std::int64_t chunk = std::max<std::int64_t>(1, total / 128);
  const std::size_t nchunks =
      static_cast<std::size_t>((total + chunk - 1) / chunk);
  std::vector<std::complex<double>> partial(nchunks);
  parallel_chunks(total, [&](std::size_t c, std::int64_t b, std::int64_t e) {
    partial[c] = chunk_sum(b, e);
  });
  KahanComplex acc;
  for (auto v : partial) acc.add(v);
  return acc.value();
}

std::int64_t parallel_sum_i64(
    std::int64_t total,
    const std::function<std::int64_t(std::int64_t, std::int64_t)>& chunk_sum) {
  if (total <= 0) return 0;
  const std::int64_t chunk = std::max<std::int64_t>(1, total / 128);
  const std::size_t nchunks =
      static_cast<std::size_t>((total + chunk - 1) / chunk);
  std::vector<std::int64_t> partial(nchunks, 0);
  parallel_chunks(total, [&](std::size_t c, std::int64_t b, std::int64_t e) {
    partial[c] = chunk_sum(b, e);
  });
  std::int64_t acc = 0;
  for (auto v : partial) acc += v;
  return acc;
}

}  // namespace clab
