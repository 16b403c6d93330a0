#pragma once

#include <array>
#include <vector>

#include "sliceforge/report.hpp"

namespace sliceforge {

// A proximate order rho(r): rho(r) -> rho > 0 and rho'(r) r ln r -> 0 as
// r -> infinity. Families: constant; log-shift rho + b/ln r active from r0
// (so r^{rho(r)} = e^b r^rho there); tabulated (linear in ln r between knots,
// flat outside). normalize() glues a sine arc below a chosen radius so that
// r -> r^{rho(r)} becomes a strictly increasing bijection of (0, infinity)
// with limit 0 at 0; most consumers require a normalized order.
class ProximateOrder {
 public:
  enum class Family { kConstant, kLogShift, kTable };

  static ProximateOrder constant(double rho);
  static ProximateOrder log_shift(double rho, double b, double r0);
  static ProximateOrder table(std::vector<std::array<double, 2>> knots, double rho);

  Family family() const { return family_; }
  double rho() const { return rho_; }
  double b() const { return b_; }
  double r0() const { return r0_; }
  const std::vector<std::array<double, 2>>& knots() const { return knots_; }
  bool normalized() const { return normalized_; }
  bool glued() const { return glued_; }
  double glue_radius() const { return glue_r0_; }

  // rho(r); requires r > 0
  double value(double r) const;

  // central difference with step h = r * 1e-6
  double derivative(double r) const;

  // rho(r) * ln r, the log of r^{rho(r)}; -infinity as r -> 0 for normalized
  // orders (ln 0 = -infinity convention)
  double log_power(double r) const;

  double power(double r) const;

  friend ProximateOrder normalize(const ProximateOrder& po, double r0);

 private:
  ProximateOrder() = default;
  double base_value(double r) const;

  Family family_ = Family::kConstant;
  double rho_ = 1.0;
  double b_ = 0.0;
  double r0_ = 0.0;
  std::vector<std::array<double, 2>> knots_;
  bool normalized_ = false;
  bool glued_ = false;
  double glue_r0_ = 0.0;
  double glue_value_ = 0.0;
  double glue_slope_ = 0.0;
};

// Sine gluing below r0: rho(r0) - (rho/4) sin(4 (rho'(r0)/rho)(r0 - r)) on
// [0, r0], the original order above. Idempotent for an order already glued at
// the same radius. The result is scanned for strict monotonicity of r^{rho(r)}
// on a log grid; failure throws std::domain_error.
ProximateOrder normalize(const ProximateOrder& po, double r0);

// Inverse of t = r^{rho(r)} by bracketed bisection (bracket [min(t,1),
// max(t,1)], expanded by doubling/halving, at most 200 expansions). Requires a
// normalized order and t > 0. Round trip power(phi(t)) = t within 1e-12
// relative.
double phi(const ProximateOrder& po, double t);

// ln G_l with G_0 = 1 and G_l = phi(l)^l / (e rho)^{l/rho}
double log_G(const ProximateOrder& po, long l);

// Precomputed ln G_0 .. ln G_L; G_l G_k <= G_{l+k}
struct GSequence {
  double rho = 1.0;
  std::vector<double> log_values;

  double at(long l) const { return log_values.at(static_cast<std::size_t>(l)); }
  long max_index() const { return static_cast<long>(log_values.size()) - 1; }
};

GSequence make_g_sequence(const ProximateOrder& po, long max_index);

struct LemmaSuiteParams {
  double eps = 0.1;                 // slack in the splitting inequalities
  double grid_lo = 1e-3;            // 2-d grids for the splitting inequalities
  double grid_hi = 1e5;
  int grid_points = 200;
  double s = 2.0;                   // scale factor probed by the limits
  double tail_T = 1e8;              // limits sampled on [T/2, T]
  int tail_points = 32;
  double tail_tolerance = 0.02;
  long g_max_index = 300;           // G sub-multiplicativity range
  double g_tolerance = 1e-9;
  double sigma = 1.0;               // ratio bound sigma' < sigma
  double sigma_prime = 0.5;
  double ratio_grid_lo = 1.0;       // t-grid searching for the ratio bound t0
  double ratio_grid_hi = 1e8;
  int ratio_grid_points = 48;
};

// Empirical verification of the growth-scale toolbox on one proximate order:
// the additive and multiplicative splitting inequalities with their smallest
// grid constants, G sub-multiplicativity, the four asymptotic limits of the
// inverse function, and the two-variable ratio bound with its smallest grid
// threshold t0. Requires a normalized order.
std::vector<CheckResult> verify_lemma_suite(const ProximateOrder& po,
                                            const LemmaSuiteParams& params = {});

}  // namespace sliceforge
