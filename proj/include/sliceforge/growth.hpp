#pragma once

#include <cstdint>
#include <optional>

#include "sliceforge/proximate.hpp"
#include "sliceforge/report.hpp"
#include "sliceforge/series.hpp"

namespace sliceforge {

// Weighted sup norm sup_x |f(x)| e^{-sigma |x|^{rho(|x|)}} and the scale shared
// by everything downstream. The order must be normalized.
struct GrowthParams {
  ProximateOrder po;
  double sigma;

  GrowthParams(ProximateOrder order, double s);
};

// Scan resolution for the supremum: log-spaced radii x sphere directions x
// angles in the slice, plus the point x = 0 and one golden-section refinement
// along the best ray. r_max absent: the cap is taken from the truncation
// validity radius when the series has one, otherwise from the turnover of the
// top-degree coefficient profile (exact-polynomial reading).
struct NormGrid {
  int radii = 400;
  int directions = 32;
  int angles = 64;
  double r_min = 1e-3;
  std::optional<double> r_max;
  std::uint64_t direction_seed = 2026;

  NormGrid refined(int factor) const;
};

struct NormEstimate {
  double log_value = -1.0 / 0.0;  // ln of the best weighted value found
  double best_radius = 0.0;
  bool diverged = false;  // profile still rising at the scan cap
  NormGrid grid;

  double value() const;
};

// ln sup_{r>0} r^l e^{-sigma r^{rho(r)}}, the norm of the monomial x^l with
// unit coefficient (it is radial). l = 0 gives 0; sigma = 0 with l >= 1 has
// no finite supremum and returns +infinity.
double log_monomial_norm(const ProximateOrder& po, double sigma, long l);

// radius attaining the monomial supremum (1D calculus maximum)
double monomial_norm_radius(const ProximateOrder& po, double sigma, long l);

NormEstimate norm_estimate(const SliceSeries& f, const GrowthParams& gp,
                           const NormGrid& grid = {});

// ln max |f| over |x| = r (where the max over the closed ball lives for these
// series), scanned over directions x angles with a golden refinement in the
// angle. Log domain: r^N overflows double well inside the ranges used.
double log_max_modulus(const SliceSeries& f, double r, int directions = 32,
                       int angles = 64, std::uint64_t seed = 2026);

double max_modulus(const SliceSeries& f, double r, int directions = 32,
                   int angles = 64, std::uint64_t seed = 2026);

// Coefficient-side type estimate: s = max over the tail window [N/2, N] of
// |a_l|^{1/l} phi(l) (zero coefficients skipped), implied type s^rho/(e rho).
// An all-zero window (polynomial tail) gives type 0.
struct TypeEstimate {
  double coefficient_limsup = 0.0;
  double implied_type = 0.0;
  long window_lo = 0;
  long window_hi = 0;
};

TypeEstimate coeff_type_estimate(const SliceSeries& f, const ProximateOrder& po);

// Largest radius at which the last five nonzero coefficients still contribute
// less than 1e-6 of the coefficient bound sum_l |a_l| r^l. Beyond it the
// truncation no longer represents its entire counterpart. Series with fewer
// than eight nonzero coefficients (or a shelf outside [1e-3, 1e9]) have no
// meaningful shelf and report nothing: they are read as exact polynomials.
std::optional<double> validity_radius(const SliceSeries& f);

// Growth-side type estimate: max of ln M(r) / r^{rho(r)} over a decade of
// radii below the validity radius (a default decade near 1e6 when there is
// none; polynomials give ~0 there).
struct GrowthTypeEstimate {
  double type = 0.0;
  double r_lo = 0.0;
  double r_hi = 0.0;
  std::optional<double> validity;
};

GrowthTypeEstimate growth_type_estimate(const SliceSeries& f,
                                        const ProximateOrder& po,
                                        int radii = 40, int directions = 32,
                                        int angles = 64);

// ln sum_{l >= from_index} |a_l| * ||x^l||_{rho,sigma} (log-domain summation);
// -infinity for an empty tail. Finite only when sigma exceeds the type.
double log_taylor_tail_norm(const SliceSeries& f, const GrowthParams& gp,
                            long from_index);

double taylor_tail_norm(const SliceSeries& f, const GrowthParams& gp,
                        long from_index);

// Empirical constant in ||x^l|| sigma'^{l/rho} / G_l <= C for 0 < sigma' <
// sigma: C as the max over l <= l_max, plus the index l0 past which the ratio
// is non-increasing. Fails if the ratio is still rising at l_max.
CheckResult verify_monomial_norm_bound(const ProximateOrder& po, double sigma,
                                       double sigma_prime, long l_max);

// Ratio (1/l!) ||d^l f||_{kappa sigma} G_l / (||f||_sigma (2 kappa sigma)^{l/rho})
// with kappa = 2^{rho+1}; asserts the sequence is bounded, reports its max.
CheckResult verify_derivative_norm_bound(const SliceSeries& f,
                                         const ProximateOrder& po, double sigma,
                                         long l_max,
                                         const NormGrid& grid = NormGrid{200, 8, 16, 1e-3, {}, 2026});

// ||f * g||_{sigma+tau} <= 2^{(n+4)/2} ||f||_sigma ||g||_tau, all three norms
// by norm_estimate; reports the observed constant and the slack.
CheckResult verify_star_norm_bound(const SliceSeries& f, const SliceSeries& g,
                                   const ProximateOrder& po, double sigma,
                                   double tau,
                                   const NormGrid& grid = NormGrid{100, 8, 16, 1e-3, {}, 2026});

}  // namespace sliceforge
