#include <doctest.h>

#include <cmath>

#include "sliceforge/growth.hpp"
#include "sliceforge/rng.hpp"

using namespace sliceforge;

namespace {

// e^{sigma0 x} truncated at degree N
SliceSeries trunc_exp(int n, double sigma0, long N) {
  SliceSeries f(n, N);
  CliffordNumber c = CliffordNumber::scalar(n, 1.0);
  f.set_coeff(0, c);
  for (long l = 1; l <= N; ++l) {
    c *= sigma0 / static_cast<double>(l);
    f.set_coeff(l, c);
  }
  return f;
}

}  // namespace

TEST_SUITE("growth") {

TEST_CASE("monomial norm has the constant-order closed form") {
  // sup_r r^l e^{-sigma r^rho} = exp((l/rho)(ln(l/(sigma rho)) - 1))
  for (double rho : {1.0, 2.0}) {
    const ProximateOrder po = ProximateOrder::constant(rho);
    for (double sigma : {0.5, 1.0, 2.0}) {
      for (long l : {1L, 3L, 10L, 50L}) {
        const double expect =
            (l / rho) * (std::log(l / (sigma * rho)) - 1.0);
        CHECK(log_monomial_norm(po, sigma, l) ==
              doctest::Approx(expect).epsilon(1e-10));
        const double r_star = std::pow(l / (sigma * rho), 1.0 / rho);
        CHECK(monomial_norm_radius(po, sigma, l) ==
              doctest::Approx(r_star).epsilon(1e-6));
      }
      CHECK(log_monomial_norm(po, sigma, 0) == 0.0);
    }
    CHECK(log_monomial_norm(po, 0.0, 2) ==
          std::numeric_limits<double>::infinity());
  }
}

TEST_CASE("norm estimate is exact on a single monomial") {
  const ProximateOrder po = ProximateOrder::constant(1.0);
  const GrowthParams gp(po, 1.0);
  const SliceSeries f = SliceSeries::monomial(2, 7, 3.0);
  const NormEstimate est = norm_estimate(f, gp);
  const double expect = std::log(3.0) + log_monomial_norm(po, 1.0, 7);
  CHECK(est.log_value == doctest::Approx(expect).epsilon(1e-12));
  CHECK_FALSE(est.diverged);
}

TEST_CASE("norm decreases as the weight sharpens") {
  const ProximateOrder po = ProximateOrder::constant(1.0);
  Rng rng(31);
  SliceSeries f(2, 8);
  for (long l = 0; l <= 8; ++l) {
    CliffordNumber a(2);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = rng.uniform(-1.0, 1.0);
    f.set_coeff(l, a);
  }
  // non-increasing in sigma, with a real drop across the whole range; the
  // chain flattens once the supremum sits at r = 0 where the weight is 1
  double first = 0.0, prev = std::numeric_limits<double>::infinity();
  for (double sigma : {0.5, 1.0, 2.0, 4.0}) {
    const double cur = norm_estimate(f, GrowthParams(po, sigma)).log_value;
    CHECK(cur <= prev);
    if (sigma == 0.5) first = cur;
    prev = cur;
  }
  CHECK(prev < first);
}

TEST_CASE("scan agrees with a dense reference on a small polynomial") {
  const ProximateOrder po = ProximateOrder::constant(1.0);
  const GrowthParams gp(po, 1.0);
  SliceSeries f(1, 5);
  f.set_coeff(3, CliffordNumber::scalar(1, 1.0));
  f.set_coeff(5, CliffordNumber::scalar(1, 0.25));
  const NormEstimate est = norm_estimate(f, gp);
  // reference: dense radial scan of |f(r)| e^{-r} on the real axis; the
  // supremum of this particular f is attained there
  double best = -1e300;
  for (double r = 1e-3; r < 40.0; r += 1e-4) {
    const double v = std::log(r * r * r + 0.25 * std::pow(r, 5.0)) - r;
    best = std::max(best, v);
  }
  CHECK(est.log_value == doctest::Approx(best).epsilon(1e-6));
}

TEST_CASE("coefficient estimator recovers the type of a truncated exponential") {
  const ProximateOrder po = ProximateOrder::constant(1.0);
  for (double sigma0 : {0.5, 1.0, 2.0}) {
    const TypeEstimate est = coeff_type_estimate(trunc_exp(1, sigma0, 200), po);
    CHECK(est.implied_type == doctest::Approx(sigma0).epsilon(0.03));
    CHECK(est.window_lo == 100);
    CHECK(est.window_hi == 200);
  }
}

TEST_CASE("growth estimator agrees on the same family") {
  const ProximateOrder po = ProximateOrder::constant(1.0);
  const GrowthTypeEstimate est =
      growth_type_estimate(trunc_exp(1, 1.0, 200), po);
  CHECK(est.type == doctest::Approx(1.0).epsilon(0.05));
  CHECK(est.validity.has_value());
}

TEST_CASE("polynomials read as type zero") {
  const ProximateOrder po = ProximateOrder::constant(1.0);
  SliceSeries f(1, 40);
  for (long l = 0; l <= 6; ++l)
    f.set_coeff(l, CliffordNumber::scalar(1, 1.0 / (1.0 + l)));
  CHECK_FALSE(validity_radius(f).has_value());  // seven nonzero coefficients
  const TypeEstimate ce = coeff_type_estimate(f, po);
  CHECK(ce.implied_type == 0.0);  // all-zero tail window
  const GrowthTypeEstimate ge = growth_type_estimate(f, po);
  CHECK(ge.type <= 0.01);
  // a long truncated series does produce a shelf
  CHECK(validity_radius(trunc_exp(1, 1.0, 30)).has_value());
}

TEST_CASE("tail norm telescopes and empties") {
  const ProximateOrder po = ProximateOrder::constant(1.0);
  const GrowthParams gp(po, 2.0);
  const SliceSeries f = trunc_exp(1, 1.0, 30);
  double prev = taylor_tail_norm(f, gp, 0);
  for (long from : {5L, 10L, 20L, 30L}) {
    const double cur = taylor_tail_norm(f, gp, from);
    CHECK(cur <= prev * (1.0 + 1e-12));
    CHECK(cur >= 0.0);
    prev = cur;
  }
  CHECK(log_taylor_tail_norm(f, gp, 31) ==
        -std::numeric_limits<double>::infinity());
}

TEST_CASE("refined grids keep the estimate stable") {
  const ProximateOrder po = ProximateOrder::constant(1.0);
  const GrowthParams gp(po, 1.0);
  const SliceSeries f = trunc_exp(2, 0.5, 25);
  NormGrid grid;
  const double coarse = norm_estimate(f, gp, grid).log_value;
  const double fine = norm_estimate(f, gp, grid.refined(2)).log_value;
  CHECK(fine >= coarse - 1e-12);  // refinement only finds more
  CHECK(fine - coarse < 0.05);
}

}  // TEST_SUITE
