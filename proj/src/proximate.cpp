#include "sliceforge/proximate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sliceforge/parallel.hpp"

namespace sliceforge {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> log_space(double lo, double hi, int count) {
  std::vector<double> out(static_cast<std::size_t>(count));
  const double llo = std::log(lo);
  const double lhi = std::log(hi);
  for (int i = 0; i < count; ++i) {
    const double f = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    out[static_cast<std::size_t>(i)] = std::exp(llo + f * (lhi - llo));
  }
  return out;
}
}  // namespace

ProximateOrder ProximateOrder::constant(double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");
  ProximateOrder po;
  po.family_ = Family::kConstant;
  po.rho_ = rho;
  po.normalized_ = true;  // r^rho is already a strictly increasing bijection
  return po;
}

ProximateOrder ProximateOrder::log_shift(double rho, double b, double r0) {
  if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");
  if (!(r0 > 1.0)) throw std::invalid_argument("log-shift needs r0 > 1");
  if (!(rho + b / std::log(r0) > 0.0))
    throw std::invalid_argument("log-shift value at r0 must stay positive");
  ProximateOrder po;
  po.family_ = Family::kLogShift;
  po.rho_ = rho;
  po.b_ = b;
  po.r0_ = r0;
  return po;
}

ProximateOrder ProximateOrder::table(std::vector<std::array<double, 2>> knots,
                                     double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");
  if (knots.size() < 2) throw std::invalid_argument("table needs >= 2 knots");
  std::sort(knots.begin(), knots.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (!(knots[i][0] > 0.0)) throw std::invalid_argument("knot radii must be positive");
    if (!(knots[i][1] > 0.0)) throw std::invalid_argument("knot values must be positive");
    if (i > 0 && knots[i][0] == knots[i - 1][0])
      throw std::invalid_argument("duplicate knot radius");
  }
  ProximateOrder po;
  po.family_ = Family::kTable;
  po.rho_ = rho;
  po.knots_ = std::move(knots);
  return po;
}

double ProximateOrder::base_value(double r) const {
  switch (family_) {
    case Family::kConstant:
      return rho_;
    case Family::kLogShift: {
      // analytic branch kept slightly below r0 so that the gluing slope is
      // probed on the smooth family; normalize() replaces everything below r0
      const double floor_r = std::max(r0_ / 2.0, 1.0 + 1e-6);
      const double rr = std::max(r, floor_r);
      return rho_ + b_ / std::log(rr);
    }
    case Family::kTable: {
      const double lr = std::log(r);
      if (r <= knots_.front()[0]) return knots_.front()[1];
      if (r >= knots_.back()[0]) return knots_.back()[1];
      for (std::size_t i = 1; i < knots_.size(); ++i) {
        if (r <= knots_[i][0]) {
          const double l0 = std::log(knots_[i - 1][0]);
          const double l1 = std::log(knots_[i][0]);
          const double f = (lr - l0) / (l1 - l0);
          return knots_[i - 1][1] + f * (knots_[i][1] - knots_[i - 1][1]);
        }
      }
      return knots_.back()[1];
    }
  }
  return rho_;
}

double ProximateOrder::value(double r) const {
  if (!(r > 0.0)) throw std::domain_error("proximate order evaluated at r <= 0");
  if (glued_ && r < glue_r0_) {
    const double arg = 4.0 * (glue_slope_ / rho_) * (glue_r0_ - r);
    return glue_value_ - (rho_ / 4.0) * std::sin(arg);
  }
  return base_value(r);
}

double ProximateOrder::derivative(double r) const {
  const double h = r * 1e-6;
  return (value(r + h) - value(r - h)) / (2.0 * h);
}

double ProximateOrder::log_power(double r) const {
  if (r == 0.0) return -kInf;
  return value(r) * std::log(r);
}

double ProximateOrder::power(double r) const {
  if (r == 0.0) return 0.0;
  return std::exp(log_power(r));
}

ProximateOrder normalize(const ProximateOrder& po, double r0) {
  if (!(r0 > 0.0)) throw std::invalid_argument("gluing radius must be positive");
  if (po.family_ == ProximateOrder::Family::kConstant) return po;
  if (po.normalized_ && po.glued_ && po.glue_r0_ == r0) return po;

  ProximateOrder out = po;
  out.glue_r0_ = r0;
  out.glue_value_ = po.value(r0);
  out.glue_slope_ = po.derivative(r0);
  out.glued_ = true;
  out.normalized_ = true;

  // the glued map r -> r^{rho(r)} must be strictly increasing and positive
  const auto grid = log_space(1e-9, 1e9, 400);
  double prev = -kInf;
  for (double r : grid) {
    if (!(out.value(r) > 0.0))
      throw std::domain_error("glued order is not positive on the grid");
    const double lp = out.log_power(r);
    if (!(lp > prev))
      throw std::domain_error("glued order is not strictly increasing on the grid");
    prev = lp;
  }
  return out;
}

double phi(const ProximateOrder& po, double t) {
  if (!po.normalized()) throw std::invalid_argument("phi needs a normalized order");
  if (!(t > 0.0)) throw std::domain_error("phi needs t > 0");
  const double target = std::log(t);
  double lo = std::min(t, 1.0);
  double hi = std::max(t, 1.0);
  int guard = 0;
  while (po.log_power(hi) < target) {
    hi *= 2.0;
    if (++guard > 200) throw std::runtime_error("phi bracket expansion failed");
  }
  guard = 0;
  while (po.log_power(lo) > target) {
    lo *= 0.5;
    if (++guard > 200) throw std::runtime_error("phi bracket expansion failed");
  }
  for (int it = 0; it < 200 && (hi - lo) > 5e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (po.log_power(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double log_G(const ProximateOrder& po, long l) {
  if (l < 0) throw std::invalid_argument("G index must be >= 0");
  if (l == 0) return 0.0;
  const double rho = po.rho();
  const double ld = static_cast<double>(l);
  return ld * std::log(phi(po, ld)) - (ld / rho) * (1.0 + std::log(rho));
}

GSequence make_g_sequence(const ProximateOrder& po, long max_index) {
  if (max_index < 0) throw std::invalid_argument("G index must be >= 0");
  GSequence g;
  g.rho = po.rho();
  g.log_values.resize(static_cast<std::size_t>(max_index) + 1);
  g.log_values[0] = 0.0;
  for (long l = 1; l <= max_index; ++l)
    g.log_values[static_cast<std::size_t>(l)] = log_G(po, l);
  return g;
}

namespace {

CheckResult splitting_check(const ProximateOrder& po, const LemmaSuiteParams& p,
                            bool additive) {
  const auto grid = log_space(p.grid_lo, p.grid_hi, p.grid_points);
  const std::size_t m = grid.size();
  const double rho = po.rho();
  const double factor = additive ? std::pow(2.0, rho + p.eps) : (1.0 + p.eps);
  const auto excess = [&](std::size_t idx) {
    const double r = grid[idx % m];
    const double s = grid[idx / m];
    if (additive) {
      return po.power(r + s) - factor * (po.power(r) + po.power(s));
    }
    return po.power(s * r) - factor * std::pow(s, rho) * po.power(r);
  };
  const par::MaxResult worst = par::max_over(m * m, excess);
  CheckResult c;
  c.name = additive ? "sum-splitting-bound" : "product-splitting-bound";
  c.params = {{"eps", p.eps}, {"rho", rho}};
  c.grid = {{"lo", p.grid_lo}, {"hi", p.grid_hi},
            {"points", static_cast<double>(p.grid_points)}};
  c.empirical_constant = std::max(0.0, worst.value);
  c.max_violation = worst.value;
  c.pass = std::isfinite(c.empirical_constant);
  return c;
}

}  // namespace

std::vector<CheckResult> verify_lemma_suite(const ProximateOrder& po,
                                            const LemmaSuiteParams& p) {
  if (!po.normalized())
    throw std::invalid_argument("lemma suite needs a normalized order");
  const double rho = po.rho();
  std::vector<CheckResult> out;

  out.push_back(splitting_check(po, p, true));
  out.push_back(splitting_check(po, p, false));

  {
    const GSequence g = make_g_sequence(po, 2 * p.g_max_index);
    const long L = p.g_max_index;
    const auto viol = [&](std::size_t idx) {
      const long l = static_cast<long>(idx) % (L + 1);
      const long k = static_cast<long>(idx) / (L + 1);
      return g.at(l) + g.at(k) - g.at(l + k);
    };
    const par::MaxResult worst =
        par::max_over(static_cast<std::size_t>((L + 1) * (L + 1)), viol);
    CheckResult c;
    c.name = "g-submultiplicativity";
    c.params = {{"rho", rho}, {"max_index", static_cast<double>(L)},
                {"tolerance", p.g_tolerance}};
    c.empirical_constant = worst.value;
    c.max_violation = worst.value;
    c.pass = worst.value <= p.g_tolerance;
    out.push_back(c);
  }

  const auto tail = log_space(p.tail_T / 2.0, p.tail_T, p.tail_points);

  {
    // t phi'(t)/phi(t) -> 1/rho
    double worst = 0.0;
    for (double t : tail) {
      const double h = t * 1e-6;
      const double d = (phi(po, t + h) - phi(po, t - h)) / (2.0 * h);
      const double q = t * d / phi(po, t);
      worst = std::max(worst, std::fabs(q - 1.0 / rho) * rho);
    }
    CheckResult c;
    c.name = "inverse-slope-limit";
    c.params = {{"rho", rho}, {"expected", 1.0 / rho}};
    c.grid = {{"tail_lo", p.tail_T / 2.0}, {"tail_hi", p.tail_T},
              {"points", static_cast<double>(p.tail_points)}};
    c.empirical_constant = worst;
    c.max_violation = worst - p.tail_tolerance;
    c.pass = worst <= p.tail_tolerance;
    out.push_back(c);
  }

  {
    // phi(s t)/phi(t) -> s^{1/rho}
    const double expected = std::pow(p.s, 1.0 / rho);
    double worst = 0.0;
    for (double t : tail) {
      const double q = phi(po, p.s * t) / phi(po, t);
      worst = std::max(worst, std::fabs(q - expected) / expected);
    }
    CheckResult c;
    c.name = "inverse-scaling-limit";
    c.params = {{"rho", rho}, {"s", p.s}, {"expected", expected}};
    c.grid = {{"tail_lo", p.tail_T / 2.0}, {"tail_hi", p.tail_T},
              {"points", static_cast<double>(p.tail_points)}};
    c.empirical_constant = worst;
    c.max_violation = worst - p.tail_tolerance;
    c.pass = worst <= p.tail_tolerance;
    out.push_back(c);
  }

  {
    // (s r)^{rho(s r)} / r^{rho(r)} -> s^rho
    const double expected = std::pow(p.s, rho);
    double worst = 0.0;
    for (double r : tail) {
      const double q = std::exp(po.log_power(p.s * r) - po.log_power(r));
      worst = std::max(worst, std::fabs(q - expected) / expected);
    }
    CheckResult c;
    c.name = "power-scaling-limit";
    c.params = {{"rho", rho}, {"s", p.s}, {"expected", expected}};
    c.grid = {{"tail_lo", p.tail_T / 2.0}, {"tail_hi", p.tail_T},
              {"points", static_cast<double>(p.tail_points)}};
    c.empirical_constant = worst;
    c.max_violation = worst - p.tail_tolerance;
    c.pass = worst <= p.tail_tolerance;
    out.push_back(c);
  }

  {
    // smallest grid t0 with phi(t)/phi(t') <= e^{sigma t/t'} / (e sigma' rho)^{1/rho}
    // for all grid t, t' >= t0
    const auto ts = log_space(p.ratio_grid_lo, p.ratio_grid_hi, p.ratio_grid_points);
    std::vector<double> lphi(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) lphi[i] = std::log(phi(po, ts[i]));
    const double offset =
        (1.0 / rho) * (1.0 + std::log(p.sigma_prime * rho));
    long first_ok = -1;
    for (std::size_t i0 = 0; i0 < ts.size() && first_ok < 0; ++i0) {
      bool ok = true;
      for (std::size_t a = i0; a < ts.size() && ok; ++a) {
        for (std::size_t b = i0; b < ts.size() && ok; ++b) {
          const double lhs = lphi[a] - lphi[b];
          const double rhs = p.sigma * ts[a] / ts[b] - offset;
          if (lhs > rhs) ok = false;
        }
      }
      if (ok) first_ok = static_cast<long>(i0);
    }
    CheckResult c;
    c.name = "inverse-ratio-bound";
    c.params = {{"rho", rho}, {"sigma", p.sigma}, {"sigma_prime", p.sigma_prime}};
    c.grid = {{"lo", p.ratio_grid_lo}, {"hi", p.ratio_grid_hi},
              {"points", static_cast<double>(p.ratio_grid_points)}};
    c.pass = first_ok >= 0;
    c.empirical_constant =
        first_ok >= 0 ? ts[static_cast<std::size_t>(first_ok)] : kInf;
    c.max_violation = c.pass ? 0.0 : kInf;
    out.push_back(c);
  }

  {
    // power(phi(t)) = t round trip
    const auto ts = log_space(1e-6, 1e10, 100);
    double worst = 0.0;
    for (double t : ts)
      worst = std::max(worst, std::fabs(po.power(phi(po, t)) - t) / t);
    CheckResult c;
    c.name = "inverse-round-trip";
    c.params = {{"rho", rho}, {"tolerance", 1e-12}};
    c.grid = {{"lo", 1e-6}, {"hi", 1e10}, {"points", 100.0}};
    c.empirical_constant = worst;
    c.max_violation = worst - 1e-12;
    c.pass = worst <= 1e-12;
    out.push_back(c);
  }

  return out;
}

}  // namespace sliceforge
