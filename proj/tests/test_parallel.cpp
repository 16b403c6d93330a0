#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <vector>

#include "sliceforge/clifford.hpp"
#include "sliceforge/parallel.hpp"
#include "sliceforge/rng.hpp"

using namespace sliceforge;

TEST_SUITE("parallel") {

TEST_CASE("max_over matches the serial scan, index included") {
  Rng rng(91);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng.bits() % 5000;
    std::vector<double> v(n);
    for (double& x : v) x = rng.uniform(-1.0, 1.0);
    auto value = [&](std::size_t i) { return v[i]; };
    const par::MaxResult s = par::max_over_serial(n, value);
    const par::MaxResult p = par::max_over(n, value);
    CHECK(p.value == s.value);
    CHECK(p.index == s.index);
  }
}

TEST_CASE("ties resolve to the smallest index") {
  // three equal maxima; both scans must report the first one
  std::vector<double> v = {0.0, 3.0, 1.0, 3.0, 3.0, -2.0};
  auto value = [&](std::size_t i) { return v[i]; };
  CHECK(par::max_over_serial(v.size(), value).index == 1);
  CHECK(par::max_over(v.size(), value).index == 1);
}

TEST_CASE("max_over handles the empty and singleton ranges") {
  auto value = [](std::size_t) { return 7.0; };
  const par::MaxResult empty = par::max_over(0, value);
  CHECK(empty.value == -std::numeric_limits<double>::infinity());
  const par::MaxResult one = par::max_over(1, value);
  CHECK(one.value == 7.0);
  CHECK(one.index == 0);
}

TEST_CASE("accumulate is deterministic and near the serial sum") {
  // the block decomposition is fixed, so the result is a function of n
  // alone, not of the thread count; it may round differently from the
  // straight left fold
  Rng rng(17);
  for (std::size_t n : {std::size_t{1}, std::size_t{255}, std::size_t{256},
                        std::size_t{257}, std::size_t{10000}}) {
    std::vector<double> v(n);
    for (double& x : v) x = rng.uniform(-10.0, 10.0);
    auto term = [&](std::size_t i) { return v[i]; };
    const double s = par::accumulate_serial(n, 0.0, term);
    const double p = par::accumulate(n, 0.0, term);
    CHECK(std::fabs(p - s) <= 1e-10 * (1.0 + std::fabs(s)));
    const double again = par::accumulate(n, 0.0, term);
    CHECK(std::memcmp(&p, &again, sizeof p) == 0);
  }
}

TEST_CASE("accumulate works on Clifford values") {
  const int n = 2;
  auto term = [&](std::size_t i) {
    CliffordNumber a(n);
    a[i % a.size()] = static_cast<double>(i + 1);
    return a;
  };
  const CliffordNumber s = par::accumulate_serial(100, CliffordNumber(n), term);
  const CliffordNumber p = par::accumulate(100, CliffordNumber(n), term);
  for (std::size_t k = 0; k < s.size(); ++k) CHECK(p[k] == s[k]);
}

TEST_CASE("max_threads is resolved and positive") {
  CHECK(par::max_threads() >= 1);
  // resolved once; a second call must agree
  CHECK(par::max_threads() == par::max_threads());
}

}  // TEST_SUITE
