#include <doctest.h>

#include <cmath>

#include "sliceforge/operators.hpp"
#include "sliceforge/rng.hpp"

using namespace sliceforge;

namespace {

// u_l = a^l / l!, the coefficient family whose action is f(x + a)
InfOrderOperator translation(int n, double a, long L) {
  std::vector<SliceSeries> u;
  double c = 1.0;
  for (long l = 0; l <= L; ++l) {
    u.push_back(SliceSeries::constant(n, CliffordNumber::scalar(n, c)));
    c *= a / static_cast<double>(l + 1);
  }
  const ProximateOrder one = ProximateOrder::constant(1.0);
  return InfOrderOperator(std::move(u), one, one);
}

// u_l = l!: grows too fast for any lambda below the g-sequence peak
InfOrderOperator factorial_family(int n, long L) {
  std::vector<SliceSeries> u;
  double c = 1.0;
  for (long l = 0; l <= L; ++l) {
    u.push_back(SliceSeries::constant(n, CliffordNumber::scalar(n, c)));
    c *= static_cast<double>(l + 1);
  }
  const ProximateOrder one = ProximateOrder::constant(1.0);
  return InfOrderOperator(std::move(u), one, one);
}

}  // namespace

TEST_SUITE("operators") {

TEST_CASE("application of a translation shifts polynomials") {
  const InfOrderOperator P = translation(2, 0.7, 12);
  const SliceSeries x2 = SliceSeries::monomial(2, 2, 1.0);
  const SliceSeries shifted = apply(P, x2);
  // (x + 0.7)^2 = x^2 + 1.4 x + 0.49
  CHECK(shifted.coeff(0)[0] == doctest::Approx(0.49).epsilon(1e-14));
  CHECK(shifted.coeff(1)[0] == doctest::Approx(1.4).epsilon(1e-14));
  CHECK(shifted.coeff(2)[0] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("abstract actions compose") {
  const AbstractOperator T = abstract_translation(2, 0.5, 16);
  const AbstractOperator D = abstract_derivative(2, 16);
  const AbstractOperator TD = abstract_compose(T, D);
  const SliceSeries x3 = SliceSeries::monomial(2, 3, 1.0);
  const SliceSeries lhs = apply_abstract(TD, x3);
  const SliceSeries rhs = apply_abstract(T, apply_abstract(D, x3));
  REQUIRE(lhs.truncation() == rhs.truncation());
  for (long l = 0; l <= lhs.truncation(); ++l)
    CHECK((lhs.coeff(l) - rhs.coeff(l)).norm() <= 1e-14);
}

TEST_CASE("coefficients recovered from the abstract action are exact") {
  const double a = 0.7;
  const long L = 20;
  const ProximateOrder one = ProximateOrder::constant(1.0);
  const InfOrderOperator P = coefficients_from_operator(
      abstract_translation(2, a, 2 * L), L, one, one);
  double expect = 1.0;
  for (long l = 0; l <= L; ++l) {
    CHECK(P.coeffs[static_cast<std::size_t>(l)].coeff(0)[0] ==
          doctest::Approx(expect).epsilon(1e-12));
    expect *= a / static_cast<double>(l + 1);
  }
  // identity and derivative reduce to delta coefficients
  const InfOrderOperator I =
      coefficients_from_operator(abstract_identity(2, 10), 5, one, one);
  CHECK(I.coeffs[0].coeff(0)[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::fabs(I.coeffs[1].coeff(0)[0]) <= 1e-14);
  const InfOrderOperator D =
      coefficients_from_operator(abstract_derivative(2, 10), 5, one, one);
  CHECK(std::fabs(D.coeffs[0].coeff(0)[0]) <= 1e-14);
  CHECK(D.coeffs[1].coeff(0)[0] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("representation identity holds for the recovered operator") {
  const CheckResult c =
      representation_identity_check(abstract_translation(2, 0.5, 16), 16, 12);
  CHECK(c.pass);
  CHECK(c.empirical_constant <= 1e-10);
}

TEST_CASE("round trip through coefficients is the identity") {
  Rng rng(51);
  const InfOrderOperator P = translation(2, -0.4, 8);
  const AbstractOperator T = abstract_from_operator(P, 8);
  const ProximateOrder one = ProximateOrder::constant(1.0);
  const InfOrderOperator Q = coefficients_from_operator(T, 8, one, one);
  for (long l = 0; l <= 8; ++l)
    CHECK((P.coeffs[static_cast<std::size_t>(l)].coeff(0) -
           Q.coeffs[static_cast<std::size_t>(l)].coeff(0))
              .norm() <= 1e-11);
}

TEST_CASE("order domination accepts equality and rejects inversion") {
  const ProximateOrder lo = ProximateOrder::constant(1.0);
  const ProximateOrder hi = ProximateOrder::constant(1.2);
  CHECK(order_domination_check(lo, lo).pass);
  CHECK(order_domination_check(lo, hi).pass);
  CHECK_FALSE(order_domination_check(hi, lo).pass);
}

TEST_CASE("translation certifies into both classes") {
  const InfOrderOperator P = translation(1, 0.5, 20);
  for (const BoundCertificate& c : certify_class_D(P)) {
    CHECK(c.pass);
    CHECK(c.C() == doctest::Approx(std::exp(c.log_C)).epsilon(1e-15));
  }
  for (const BoundCertificate& c : certify_class_D0(P)) CHECK(c.pass);
}

TEST_CASE("the factorial family fails small scales and passes large ones") {
  const InfOrderOperator P = factorial_family(1, 40);
  const auto small = certify_class_D(P, {0.5});
  REQUIRE(small.size() == 1);
  CHECK_FALSE(small.front().pass);
  const auto large = certify_class_D(P, {30.0});
  REQUIRE(large.size() == 1);
  CHECK(large.front().pass);
}

TEST_CASE("certificates are stable under grid refinement") {
  const InfOrderOperator P = translation(1, 0.5, 20);
  CertifyOptions fine;
  fine.grid = fine.grid.refined(2);
  const auto base = certify_class_D(P);
  const auto refined = certify_class_D(P, default_scale_grid(),
                                       default_scale_grid(), fine);
  REQUIRE(base.size() == refined.size());
  for (std::size_t k = 0; k < base.size(); ++k) {
    CHECK(base[k].pass == refined[k].pass);
    CHECK(base[k].sigma == refined[k].sigma);
  }
}

TEST_CASE("the continuity budget covers the measured norm") {
  const InfOrderOperator P = translation(1, 0.5, 12);
  SliceSeries f(1, 20);
  double c = 1.0;
  for (long l = 0; l <= 20; ++l) {
    f.set_coeff(l, CliffordNumber::scalar(1, c));
    c *= 0.02 / static_cast<double>(l + 1);
  }
  const auto certs = certify_class_D(P, {1.0});
  REQUIRE_FALSE(certs.empty());
  REQUIRE(certs.front().pass);
  const CheckResult chk = continuity_estimate_check(P, f, certs.front(), 0.05);
  CHECK(chk.pass);
  CHECK(chk.max_violation <= 0.0);
}

}  // TEST_SUITE
