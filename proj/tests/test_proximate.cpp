#include <doctest.h>

#include <cmath>

#include "sliceforge/proximate.hpp"

using namespace sliceforge;

TEST_SUITE("proximate") {

TEST_CASE("constant family is the plain power") {
  const ProximateOrder po = ProximateOrder::constant(1.5);
  CHECK(po.value(0.1) == 1.5);
  CHECK(po.value(100.0) == 1.5);
  CHECK(po.derivative(3.0) == 0.0);
  CHECK(po.power(2.0) == doctest::Approx(std::pow(2.0, 1.5)).epsilon(1e-15));
  CHECK(po.normalized());
}

TEST_CASE("phi inverts the scale function") {
  // constant rho = 1: r^rho = r, so phi is the identity
  const ProximateOrder lin = ProximateOrder::constant(1.0);
  for (double t : {0.3, 1.0, 7.0, 250.0})
    CHECK(phi(lin, t) == doctest::Approx(t).epsilon(1e-12));

  const ProximateOrder quad = ProximateOrder::constant(2.0);
  CHECK(phi(quad, 9.0) == doctest::Approx(3.0).epsilon(1e-12));

  // round trip through a normalized log-shift order
  const ProximateOrder ls =
      normalize(ProximateOrder::log_shift(1.0, 0.3, std::exp(2.0)), 7.389);
  for (double r : {0.05, 0.9, 4.0, 1e3}) {
    const double t = ls.power(r);
    CHECK(phi(ls, t) == doctest::Approx(r).epsilon(1e-12));
  }
}

TEST_CASE("log_G closed forms at integer arguments") {
  // rho = 1: ln G_l = l ln l - l
  const ProximateOrder one = ProximateOrder::constant(1.0);
  CHECK(log_G(one, 2) == doctest::Approx(2.0 * (std::log(2.0) - 1.0))
                             .epsilon(1e-12));
  CHECK(log_G(one, 0) == 0.0);
  // rho = 2: phi(4) = 2, ln G_4 = 4 ln 2 - 2 (1 + ln 2) = 2 ln 2 - 2
  const ProximateOrder two = ProximateOrder::constant(2.0);
  CHECK(log_G(two, 4) == doctest::Approx(2.0 * std::log(2.0) - 2.0)
                             .epsilon(1e-12));
}

TEST_CASE("g sequence caches log_G") {
  const ProximateOrder po = ProximateOrder::constant(1.0);
  const GSequence g = make_g_sequence(po, 50);
  CHECK(g.max_index() == 50);
  for (long l : {0L, 1L, 7L, 50L})
    CHECK(g.at(l) == doctest::Approx(log_G(po, l)).epsilon(1e-13));
}

TEST_CASE("log-shift tends to its order from above") {
  const ProximateOrder po = ProximateOrder::log_shift(1.0, 0.5, std::exp(2.0));
  // rho(r) -> rho and the defining slope r rho'(r) ln r -> 0; both limits
  // are logarithmic, so check decay along decades rather than smallness
  CHECK(po.value(1e8) == doctest::Approx(1.0).epsilon(0.05));
  CHECK(po.value(1e12) - 1.0 < po.value(1e6) - 1.0);
  double prev = 1e300;
  for (double r : {1e6, 1e9, 1e12, 1e15}) {
    const double slope = std::fabs(r * po.derivative(r) * std::log(r));
    CHECK(slope < prev);
    prev = slope;
  }
  CHECK(prev < 0.02);
}

TEST_CASE("derivative matches a difference quotient") {
  const ProximateOrder po =
      normalize(ProximateOrder::log_shift(1.0, 0.3, std::exp(2.0)), 7.389);
  for (double r : {12.0, 55.0, 400.0}) {
    const double h = r * 1e-6;
    const double fd = (po.value(r + h) - po.value(r - h)) / (2.0 * h);
    CHECK(po.derivative(r) == doctest::Approx(fd).epsilon(1e-5));
  }
}

TEST_CASE("normalization glues a sine ramp below r0") {
  const ProximateOrder raw = ProximateOrder::log_shift(1.0, 0.4, std::exp(2.0));
  const ProximateOrder po = normalize(raw, 10.0);
  CHECK(po.normalized());
  CHECK(po.glued());
  CHECK(po.glue_radius() == 10.0);
  // above the glue radius nothing changed
  CHECK(po.value(25.0) == doctest::Approx(raw.value(25.0)).epsilon(1e-14));
  // continuous at the seam
  CHECK(po.value(10.0 - 1e-9) ==
        doctest::Approx(po.value(10.0 + 1e-9)).epsilon(1e-6));
  // r^{rho(r)} strictly increasing: a bijection of (0, infinity)
  double prev = 0.0;
  for (double r = 0.05; r < 50.0; r *= 1.3) {
    const double cur = po.power(r);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("table family interpolates its knots") {
  const ProximateOrder po = ProximateOrder::table(
      {{{1.0, 1.0}}, {{1e2, 1.04}}, {{1e4, 1.0}}}, 1.0);
  CHECK(po.value(1e2) == doctest::Approx(1.04).epsilon(1e-12));
  CHECK(po.value(1e4) == doctest::Approx(1.0).epsilon(1e-12));
  // beyond the last knot the order is flat at rho
  CHECK(po.value(1e6) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("log_power handles tiny and large radii") {
  const ProximateOrder po = ProximateOrder::constant(2.0);
  CHECK(po.log_power(1e-150) ==
        doctest::Approx(2.0 * std::log(1e-150)).epsilon(1e-12));
  CHECK(std::exp(po.log_power(3.0)) ==
        doctest::Approx(po.power(3.0)).epsilon(1e-12));
}

}  // TEST_SUITE
