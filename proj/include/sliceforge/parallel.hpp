#pragma once

#include <cstddef>
#include <cstdlib>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sliceforge::par {

// Thread budget: SLICEFORGE_THREADS wins over the OpenMP default. Resolved once.
inline int max_threads() {
  static const int n = [] {
    if (const char* env = std::getenv("SLICEFORGE_THREADS")) {
      const int k = std::atoi(env);
      if (k >= 1) return k;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
  }();
  return n;
}

struct MaxResult {
  double value;
  std::size_t index;
};

// Serial reference: first occurrence of the maximum wins.
template <class F>
MaxResult max_over_serial(std::size_t n, F&& value) {
  MaxResult best{-1.0 / 0.0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    const double v = value(i);
    if (v > best.value) best = {v, i};
  }
  return best;
}

// Parallel max with the same result as the serial scan: per-thread candidates
// are combined by (value, then smaller index), and max is order-exact, so the
// winner is identical for any thread count.
template <class F>
MaxResult max_over(std::size_t n, F&& value) {
#ifdef _OPENMP
  if (n >= 2 && max_threads() > 1) {
    std::vector<MaxResult> local(static_cast<std::size_t>(max_threads()),
                                 MaxResult{-1.0 / 0.0, 0});
#pragma omp parallel num_threads(max_threads())
    {
      const int tid = omp_get_thread_num();
      MaxResult mine{-1.0 / 0.0, 0};
#pragma omp for schedule(static)
      for (long long i = 0; i < static_cast<long long>(n); ++i) {
        const double v = value(static_cast<std::size_t>(i));
        if (v > mine.value ||
            (v == mine.value && static_cast<std::size_t>(i) < mine.index)) {
          mine = {v, static_cast<std::size_t>(i)};
        }
      }
      local[static_cast<std::size_t>(tid)] = mine;
    }
    MaxResult best = local[0];
    for (std::size_t k = 1; k < local.size(); ++k) {
      const MaxResult& m = local[k];
      if (m.value > best.value ||
          (m.value == best.value && m.index < best.index)) {
        best = m;
      }
    }
    return best;
  }
#endif
  return max_over_serial(n, std::forward<F>(value));
}

inline constexpr std::size_t kSumBlocks = 256;

// Serial reference: plain left-to-right accumulation.
template <class T, class F>
T accumulate_serial(std::size_t n, T zero, F&& term) {
  T acc = std::move(zero);
  for (std::size_t i = 0; i < n; ++i) acc += term(i);
  return acc;
}

// Deterministic parallel sum: the index range is cut into a fixed number of
// blocks (independent of the thread count), block partials are accumulated
// left-to-right within each block, and the partials are combined in block
// order. The result is byte-identical for any thread count.
template <class T, class F>
T accumulate(std::size_t n, T zero, F&& term) {
  if (n == 0) return zero;
  const std::size_t blocks = n < kSumBlocks ? n : kSumBlocks;
  std::vector<T> partial(blocks, zero);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(max_threads())
#endif
  for (long long b = 0; b < static_cast<long long>(blocks); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * n / blocks;
    const std::size_t hi = (static_cast<std::size_t>(b) + 1) * n / blocks;
    T acc = zero;
    for (std::size_t i = lo; i < hi; ++i) acc += term(i);
    partial[static_cast<std::size_t>(b)] = acc;
  }
  T total = zero;
  for (const T& p : partial) total += p;
  return total;
}

}  // namespace sliceforge::par
