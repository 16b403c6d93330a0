#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "sliceforge/growth.hpp"

namespace sliceforge {

// P = sum_{l=0}^{L} u_l * d^l/dx_0^l with slice series coefficients, stored
// truncated. Application to polynomials is exact: high derivatives vanish.
// The source and target orders ride along (normalized; certificates use them).
struct InfOrderOperator {
  std::vector<SliceSeries> coeffs;
  ProximateOrder rho1;
  ProximateOrder rho2;

  InfOrderOperator(std::vector<SliceSeries> u, ProximateOrder r1,
                   ProximateOrder r2);

  int n() const { return coeffs.front().n(); }
  long truncation() const { return static_cast<long>(coeffs.size()) - 1; }
};

SliceSeries apply(const InfOrderOperator& P, const SliceSeries& f);

enum class OperatorClass { kD, kD0 };

// Witness for the coefficient growth condition at one (lambda, sigma):
// ||u_l||_{rho2,sigma} <= C G_{rho1,l} lambda^l / l! for every l <= L, with
// C = exp(log_C) the smallest such constant and max_ratio_index its argmax.
// pass reflects the tail judgment, not mere finiteness at truncation.
struct BoundCertificate {
  OperatorClass cls = OperatorClass::kD;
  double lambda = 0.0;
  double sigma = 0.0;
  double log_C = 0.0;
  long max_ratio_index = 0;
  bool pass = false;

  double C() const { return std::exp(log_C); }
};

// 16 log-spaced scale values in [1e-3, 1e3]
std::vector<double> default_scale_grid();

// r^{rho1(r)} = O(r^{rho2(r)}): the log ratio must not be climbing at the far
// end of [1, 1e8]. Certificates require this to pass.
CheckResult order_domination_check(const ProximateOrder& rho1,
                                   const ProximateOrder& rho2);

struct CertifyOptions {
  NormGrid grid{200, 8, 16, 1e-3, {}, 2026};
  long min_tail = 3;  // tail-window entries used for the growth judgment
};

// For each lambda: the smallest sigma on the grid whose coefficient norms
// satisfy the growth condition; a pass=false certificate (at the largest
// sigma) when none does.
std::vector<BoundCertificate> certify_class_D(
    const InfOrderOperator& P,
    const std::vector<double>& lambda_grid = default_scale_grid(),
    const std::vector<double>& sigma_grid = default_scale_grid(),
    const CertifyOptions& opt = {});

// Quantifiers swapped: for each sigma, the smallest workable lambda.
std::vector<BoundCertificate> certify_class_D0(
    const InfOrderOperator& P,
    const std::vector<double>& sigma_grid = default_scale_grid(),
    const std::vector<double>& lambda_grid = default_scale_grid(),
    const CertifyOptions& opt = {});

// An operator known only through its action on monomials; linearity gives
// everything else. action must be deterministic.
struct AbstractOperator {
  int n = 1;
  long max_degree = 0;
  std::function<SliceSeries(long)> action;
};

AbstractOperator abstract_identity(int n, long max_degree);
AbstractOperator abstract_translation(int n, double a, long max_degree);
AbstractOperator abstract_derivative(int n, long max_degree);
// T(x^k) = outer(inner(x^k))
AbstractOperator abstract_compose(const AbstractOperator& outer,
                                  const AbstractOperator& inner);
AbstractOperator abstract_from_operator(const InfOrderOperator& P,
                                        long max_degree);

// T(sum x^m a_m) = sum T(x^m) a_m, coefficients acting on the right
SliceSeries apply_abstract(const AbstractOperator& T, const SliceSeries& f);

// u_l = (1/l!) sum_k C(l,k) T(x^k) * (-x)^{l-k}; binomials are exact
// integers in double up to l = 56
InfOrderOperator coefficients_from_operator(const AbstractOperator& T, long L,
                                            ProximateOrder rho1,
                                            ProximateOrder rho2);

// apply(coefficients_from_operator(T, L), f) must reproduce T(f) coefficient
// by coefficient (within 1e-10) on random Clifford polynomials of degree <= M
CheckResult representation_identity_check(const AbstractOperator& T, long L,
                                          long M, int trials = 20,
                                          std::uint64_t seed = 7);

// ||P f||_{rho2, sigma + 2^{rho1+1} tau} against
// 4 C C(tau) ||f||_{rho1,tau} sum_l (lambda (2^{rho1+2} tau)^{1/rho1})^l
// with the certificate's (lambda, sigma, C) and the empirical derivative
// bound constant C(tau)
CheckResult continuity_estimate_check(const InfOrderOperator& P,
                                      const SliceSeries& f,
                                      const BoundCertificate& cert, double tau,
                                      const NormGrid& grid = NormGrid{
                                          200, 8, 16, 1e-3, {}, 2026});

}  // namespace sliceforge
