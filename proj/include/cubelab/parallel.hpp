#ifndef CUBELAB_PARALLEL_HPP
#define CUBELAB_PARALLEL_HPP

// Worker pool with deterministic reduction.  Work is cut into chunks whose
// boundaries depend only on the problem size, each chunk produces a partial
// result, and partials are combined in chunk order.  Numeric output is
// therefore bit-identical for every thread count.

#include <atomic>
#include <complex>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace clab {

int thread_count();
void set_thread_count(int n);  // n <= 0 restores the hardware default

// Runs fn(chunk_index, begin, end) over [0, total) split into fixed chunks.
void parallel_chunks(std::int64_t total,
                     const std::function<void(std::size_t, std::int64_t,
                                              std::int64_t)>& fn);

// Compensated (Kahan) accumulator for ordered float reductions.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double v) {
    double y = v - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

struct KahanComplex {
  KahanSum re, im;
  void add(std::complex<double> v) {
    re.add(v.real());
    im.add(v.imag());
  }
  std::complex<double> value() const { return {re.value(), im.value()}; }
};

// Ordered parallel reduction of doubles: each chunk accumulates its own
// Kahan sum; chunk sums are folded in index order.
double parallel_sum(std::int64_t total,
                    const std::function<double(std::int64_t, std::int64_t)>&
                        chunk_sum);

std::complex<double> parallel_sum_complex(
    std::int64_t total,
    const std::function<std::complex<double>(std::int64_t, std::int64_t)>&
        chunk_sum);

std::int64_t parallel_sum_i64(
    std::int64_t total,
    const std::function<std::int64_t(std::int64_t, std::int64_t)>& chunk_sum);

}  // namespace clab

#endif
