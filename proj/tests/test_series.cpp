#include <doctest.h>

#include <cmath>

#include "sliceforge/clifford.hpp"
#include "sliceforge/rng.hpp"
#include "sliceforge/series.hpp"

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

TEST_SUITE("series") {

TEST_CASE("monomials evaluate as powers on the real axis") {
  const SliceSeries x3 = SliceSeries::monomial(2, 3, 1.0);
  for (double t : {-2.0, -0.5, 0.0, 1.0, 1.7}) {
    const CliffordNumber v = evaluate(x3, Paravector::real(2, t));
    CHECK(v[0] == doctest::Approx(t * t * t).epsilon(1e-14));
    for (std::size_t k = 1; k < v.size(); ++k) CHECK(v[k] == 0.0);
  }
}

TEST_CASE("evaluation is slice independent at real points") {
  Rng rng(21);
  const SliceSeries f = random_series(rng, 3, 8);
  const auto dirs = sphere_sample(3, 6, 4);
  const CliffordNumber ref = evaluate_in_slice(f, 0.8, 0.0, dirs[0]);
  for (const ImaginaryUnit& j : dirs) {
    const CliffordNumber v = evaluate_in_slice(f, 0.8, 0.0, j);
    CHECK((v - ref).norm() <= 1e-13);
  }
}

TEST_CASE("star product reduces to the pointwise product on the real axis") {
  Rng rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    const SliceSeries f = random_series(rng, 2, 5);
    const SliceSeries g = random_series(rng, 2, 4);
    const SliceSeries fg = star_product(f, g);
    const double t = rng.uniform(-0.9, 0.9);
    const Paravector x = Paravector::real(2, t);
    const CliffordNumber direct =
        clifford_mul(evaluate(f, x), evaluate(g, x));
    CHECK((evaluate(fg, x) - direct).norm() <= 1e-12);
  }
}

TEST_CASE("star product is associative") {
  Rng rng(23);
  const SliceSeries f = random_series(rng, 2, 4);
  const SliceSeries g = random_series(rng, 2, 3);
  const SliceSeries h = random_series(rng, 2, 5);
  const SliceSeries lhs = star_product(star_product(f, g), h);
  const SliceSeries rhs = star_product(f, star_product(g, h));
  REQUIRE(lhs.truncation() == rhs.truncation());
  for (long l = 0; l <= lhs.truncation(); ++l)
    CHECK((lhs.coeff(l) - rhs.coeff(l)).norm() <= 1e-13);
}

TEST_CASE("slice derivative acts degree by degree") {
  const SliceSeries x5 = SliceSeries::monomial(2, 5, 2.0);
  const SliceSeries d = slice_derivative(x5);
  CHECK(d.coeff(4)[0] == doctest::Approx(10.0).epsilon(1e-15));
  CHECK(d.degree() == 4);
  // iterated form
  const SliceSeries d3 = slice_derivative(x5, 3);
  CHECK(d3.coeff(2)[0] == doctest::Approx(2.0 * 5 * 4 * 3).epsilon(1e-15));
  // derivative obeys the Leibniz rule under the star product
  Rng rng(24);
  const SliceSeries f = random_series(rng, 2, 4);
  const SliceSeries g = random_series(rng, 2, 4);
  const SliceSeries lhs = slice_derivative(star_product(f, g));
  const SliceSeries rhs =
      star_product(slice_derivative(f), g) + star_product(f, slice_derivative(g));
  for (long l = 0; l <= lhs.degree(); ++l)
    CHECK((lhs.coeff(l) - rhs.coeff(l)).norm() <= 1e-13);
}

TEST_CASE("derivative matches a difference quotient in a slice") {
  Rng rng(25);
  const SliceSeries f = random_series(rng, 2, 7);
  const SliceSeries df = slice_derivative(f);
  const ImaginaryUnit j = ImaginaryUnit::axis(2, 2);
  const double u = 0.4, v = 0.3, h = 1e-6;
  // complex difference quotient along the real direction of the slice
  const CliffordNumber fd =
      (evaluate_in_slice(f, u + h, v, j) - evaluate_in_slice(f, u - h, v, j)) *
      (0.5 / h);
  CHECK((fd - evaluate_in_slice(df, u, v, j)).norm() <= 1e-7);
}

TEST_CASE("component split has the even/odd symmetry") {
  Rng rng(26);
  const SliceSeries f = random_series(rng, 3, 6);
  const ImaginaryUnit j = sphere_sample(3, 3, 8)[2];
  const double u = 0.37, v = 0.61;
  // the split itself never depends on the slice direction
  const auto [f0p, f1p] = components(f, u, v, j);
  const auto [f0m, f1m] = components(f, u, v, j.negated());
  CHECK((f0p - f0m).norm() <= 1e-13);
  CHECK((f1p - f1m).norm() <= 1e-13);
  // f = f0 + j f1 reconstructs the slice value; the mirror point
  // u + (-j) v picks up the sign on the odd part
  const CliffordNumber whole = f0p + clifford_mul(j.as_clifford(), f1p);
  CHECK((whole - evaluate_in_slice(f, u, v, j)).norm() <= 1e-12);
  const CliffordNumber mirror = f0p - clifford_mul(j.as_clifford(), f1p);
  CHECK((mirror - evaluate_in_slice(f, u, v, j.negated())).norm() <= 1e-12);
}

TEST_CASE("recentering is exact on polynomials") {
  Rng rng(27);
  const SliceSeries f = random_series(rng, 2, 6);
  for (double a : {0.5, -1.0, 2.0}) {
    const SliceSeries g = taylor_recenter(f, a);
    for (double t : {-0.4, 0.0, 0.8}) {
      const CliffordNumber lhs = evaluate(g, Paravector::real(2, t));
      const CliffordNumber rhs = evaluate(f, Paravector::real(2, t + a));
      CHECK((lhs - rhs).norm() <= 1e-9);
    }
  }
}

TEST_CASE("right coefficient multiplication acts coefficientwise") {
  Rng rng(28);
  const SliceSeries f = random_series(rng, 2, 4);
  CliffordNumber c(2);
  c[0] = 0.5;
  c[1] = -1.25;
  const SliceSeries fc = f.coeff_right_mul(c);
  for (long l = 0; l <= 4; ++l)
    CHECK((fc.coeff(l) - clifford_mul(f.coeff(l), c)).norm() <= 1e-14);
}

TEST_CASE("trim drops explicit zero tails") {
  SliceSeries f(2, 9);
  f.set_coeff(3, CliffordNumber::scalar(2, 2.0));
  CHECK(f.truncation() == 9);
  CHECK(f.degree() == 3);
  const SliceSeries g = f.trimmed();
  CHECK(g.truncation() == 3);
  CHECK(g.coeff(3)[0] == 2.0);
}

}  // TEST_SUITE
