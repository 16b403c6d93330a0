#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "sliceforge/cauchy.hpp"
#include "sliceforge/rng.hpp"

using namespace sliceforge;

namespace {

SliceSeries random_series(Rng& rng, int n, long deg) {
  SliceSeries f(n, deg);
  for (long l = 0; l <= deg; ++l) {
    CliffordNumber a(n);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = rng.uniform(-1.0, 1.0);
    f.set_coeff(l, a);
  }
  return f;
}

}  // namespace

TEST_SUITE("cauchy") {

TEST_CASE("kernel reduces to 1/(s - x) inside a single slice") {
  // with s and x in the same plane C_j the kernel is the complex reciprocal
  const ImaginaryUnit j = ImaginaryUnit::axis(2, 2);
  const Paravector s = Paravector::from_slice(0.9, 1.1, j);
  const Paravector x = Paravector::from_slice(0.2, 0.4, j);
  const std::complex<double> inv =
      1.0 / (std::complex<double>(0.9, 1.1) - std::complex<double>(0.2, 0.4));
  const CliffordNumber k = cauchy_kernel(s, x);
  CHECK(k[0] == doctest::Approx(inv.real()).epsilon(1e-12));
  CHECK(k[2] == doctest::Approx(inv.imag()).epsilon(1e-12));
  CHECK(std::fabs(k[1]) <= 1e-13);
  CHECK(std::fabs(k[3]) <= 1e-13);
}

TEST_CASE("kernel blows up near the sphere of s") {
  const ImaginaryUnit j = ImaginaryUnit::axis(2, 1);
  const Paravector s = Paravector::from_slice(1.0, 0.5, j);
  for (double eps : {1e-1, 1e-2, 1e-3}) {
    const Paravector x = Paravector::from_slice(1.0, 0.5 - eps, j);
    CHECK(cauchy_kernel(s, x).norm() >= 0.1 / eps);
  }
  // and throws once x reaches it
  CHECK_THROWS_AS(
      cauchy_kernel(s, Paravector::from_slice(1.0, 0.5, j.negated())),
      std::domain_error);
}

TEST_CASE("kernel derivative matches finite differences") {
  Rng rng(41);
  const int n = 2;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> sv(n), xv(n);
    for (double& c : sv) c = rng.uniform(-1.0, 1.0) * 2.0;
    for (double& c : xv) c = rng.uniform(-1.0, 1.0) * 0.5;
    const Paravector s(rng.uniform(-2.0, 2.0), sv);
    if (s.norm() < 1.2) continue;  // stay clear of the singular sphere
    const Paravector x(rng.uniform(-0.5, 0.5), xv);
    const int i = static_cast<int>(rng.bits() % (n + 1));
    const double h = 1e-5;
    auto shift = [&](double d) {
      double t = x.scalar_part();
      std::vector<double> v = x.vector_part();
      if (i == 0)
        t += d;
      else
        v[static_cast<std::size_t>(i - 1)] += d;
      return Paravector(t, v);
    };
    const CliffordNumber fd =
        (cauchy_kernel(s, shift(h)) - cauchy_kernel(s, shift(-h))) *
        (0.5 / h);
    CHECK((fd - kernel_derivative(s, x, i)).norm() <= 1e-6);
  }
}

TEST_CASE("contour measure of a circle is the point itself") {
  const ContourSpec c(1.3, ImaginaryUnit::axis(2, 2), 64);
  for (double theta : {0.0, 0.7, 2.0, 4.5}) {
    const CliffordNumber m = contour_measure(c, theta);
    CHECK(m[0] == doctest::Approx(1.3 * std::cos(theta)).epsilon(1e-13));
    CHECK(m[2] == doctest::Approx(1.3 * std::sin(theta)).epsilon(1e-13));
  }
}

TEST_CASE("coefficients of a polynomial are recovered exactly") {
  Rng rng(42);
  const SliceSeries f = random_series(rng, 2, 5);
  const ContourSpec c(1.0, ImaginaryUnit::axis(2, 1), 64);
  for (long l = 0; l <= 5; ++l)
    CHECK((coeff_extract(f, l, c) - f.coeff(l)).norm() <= 1e-12);
  // indices beyond the degree integrate to zero
  CHECK(coeff_extract(f, 7, c).norm() <= 1e-12);
}

TEST_CASE("extraction is radius independent") {
  Rng rng(43);
  const SliceSeries f = random_series(rng, 2, 6);
  const ImaginaryUnit j = ImaginaryUnit::axis(2, 1);
  for (long l : {0L, 2L, 6L}) {
    const CliffordNumber a = coeff_extract(f, l, ContourSpec(0.7, j, 96));
    const CliffordNumber b = coeff_extract(f, l, ContourSpec(1.3, j, 96));
    CHECK((a - b).norm() <= 1e-11);
  }
}

TEST_CASE("undersampling folds the aliased coefficient on top") {
  // at 8 nodes on the unit circle, x^l and x^{l+8} are indistinguishable
  SliceSeries f(2, 9);
  const CliffordNumber a1 = CliffordNumber::scalar(2, 0.8);
  CliffordNumber a9(2);
  a9[1] = -0.6;
  f.set_coeff(1, a1);
  f.set_coeff(9, a9);
  const ImaginaryUnit j = ImaginaryUnit::axis(2, 1);
  const CliffordNumber folded = coeff_extract(f, 1, ContourSpec(1.0, j, 8));
  CHECK((folded - (a1 + a9)).norm() <= 1e-12);
  // enough nodes separates them again
  const CliffordNumber clean = coeff_extract(f, 1, ContourSpec(1.0, j, 64));
  CHECK((clean - a1).norm() <= 1e-12);
}

TEST_CASE("cauchy_eval reproduces the series inside the contour") {
  Rng rng(44);
  const SliceSeries f = random_series(rng, 2, 8);
  const ContourSpec c(1.0, ImaginaryUnit::axis(2, 2), 256);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> xv(2);
    for (double& t : xv) t = rng.uniform(-1.0, 1.0) * 0.3;
    const Paravector x(rng.uniform(-0.3, 0.3), xv);
    CHECK((cauchy_eval(f, x, c) - evaluate(f, x)).norm() <= 1e-10);
  }
}

TEST_CASE("the evaluator closure agrees with direct evaluation") {
  Rng rng(45);
  const SliceSeries f = random_series(rng, 3, 5);
  const SliceEvaluator ev = make_evaluator(f);
  const ImaginaryUnit j = sphere_sample(3, 7, 2)[6];
  const CliffordNumber a = ev(0.3, 0.8, j);
  const CliffordNumber b = evaluate_in_slice(f, 0.3, 0.8, j);
  CHECK((a - b).norm() == 0.0);
}

}  // TEST_SUITE
