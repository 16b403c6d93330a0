#include "sliceforge/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sliceforge/parallel.hpp"

namespace sliceforge {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPosInf = std::numeric_limits<double>::infinity();
constexpr double kTau = 6.283185307179586476925286766559;

std::vector<double> geometric_grid(double lo, double hi, int count) {
  if (count < 2 || !(lo > 0.0) || !(hi > lo))
    throw std::invalid_argument("bad radius grid");
  std::vector<double> r(static_cast<std::size_t>(count));
  const double la = std::log(lo), lb = std::log(hi);
  for (int i = 0; i < count; ++i)
    r[static_cast<std::size_t>(i)] =
        std::exp(la + (lb - la) * i / (count - 1.0));
  r.front() = lo;
  r.back() = hi;
  return r;
}

// golden-section maximum of val(r) with r swept geometrically in [rlo, rhi]
template <class F>
std::pair<double, double> golden_max(double rlo, double rhi, F&& val,
                                     int iters = 72) {
  const double invphi = 0.6180339887498948882;
  double a = std::log(rlo), b = std::log(rhi);
  double c = b - invphi * (b - a), d = a + invphi * (b - a);
  double fc = val(std::exp(c)), fd = val(std::exp(d));
  for (int it = 0; it < iters; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = val(std::exp(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = val(std::exp(d));
    }
  }
  return fc >= fd ? std::make_pair(fc, std::exp(c))
                  : std::make_pair(fd, std::exp(d));
}

struct Support {
  std::vector<long> deg;
  std::vector<const CliffordNumber*> coeff;
  std::vector<double> log_norm;

  bool empty() const { return deg.empty(); }
  std::size_t size() const { return deg.size(); }
};

Support collect_support(const SliceSeries& f) {
  Support s;
  for (long l = 0; l <= f.truncation(); ++l) {
    const CliffordNumber& a = f.coeff(l);
    if (a.is_zero()) continue;
    s.deg.push_back(l);
    s.coeff.push_back(&a);
    s.log_norm.push_back(a.log_norm());
  }
  return s;
}

struct RingBest {
  double log_modulus = kNegInf;
  int dir = 0;
  double theta = 0.0;
};

// max ln|f| over the sampled ring |x| = r. All coefficients are rescaled by
// the dominant term e^m so the accumulation stays in range; the inner loop is
// a plane rotation per degree with no transcendentals.
RingBest ring_scan(const Support& s, int n, double r,
                   const std::vector<ImaginaryUnit>& dirs, int angles) {
  const double lnr = std::log(r);
  const std::size_t comps = std::size_t{1} << n;
  double m = kNegInf;
  for (std::size_t i = 0; i < s.size(); ++i)
    m = std::max(m, static_cast<double>(s.deg[i]) * lnr + s.log_norm[i]);

  std::vector<long> deg;
  std::vector<CliffordNumber> scaled;
  std::vector<double> sa;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double t = static_cast<double>(s.deg[i]) * lnr - m;
    if (t + s.log_norm[i] < -40.0) continue;  // below the dominant term's eps
    // scale in two steps: e^t alone can overflow while a * e^t cannot,
    // since t <= -ln||a|| by construction of m
    const double h = std::exp(0.5 * t);
    CliffordNumber a(n);
    for (std::size_t k = 0; k < comps; ++k) a[k] = ((*s.coeff[i])[k] * h) * h;
    deg.push_back(s.deg[i]);
    scaled.push_back(a);
    for (std::size_t k = 0; k < comps; ++k) sa.push_back(a[k]);
  }
  const std::size_t cnt = deg.size();
  const long top = deg.back();

  RingBest best;
  std::vector<double> sb(cnt * comps);
  std::vector<double> acc(comps);
  for (std::size_t d = 0; d < dirs.size(); ++d) {
    const CliffordNumber jc = dirs[d].as_clifford();
    for (std::size_t i = 0; i < cnt; ++i) {
      const CliffordNumber b = clifford_mul(jc, scaled[i]);
      for (std::size_t k = 0; k < comps; ++k) sb[i * comps + k] = b[k];
    }
    for (int ai = 0; ai < angles; ++ai) {
      const double theta = kTau * ai / angles;
      const double ct = std::cos(theta), st = std::sin(theta);
      double c = 1.0, sn = 0.0;  // (cos, sin) of l*theta
      std::fill(acc.begin(), acc.end(), 0.0);
      std::size_t p = 0;
      for (long l = 0; l <= top; ++l) {
        if (p < cnt && deg[p] == l) {
          const double* A = sa.data() + p * comps;
          const double* B = sb.data() + p * comps;
          for (std::size_t k = 0; k < comps; ++k) acc[k] += c * A[k] + sn * B[k];
          ++p;
        }
        const double cn = c * ct - sn * st;
        sn = sn * ct + c * st;
        c = cn;
      }
      double norm2 = 0.0;
      for (std::size_t k = 0; k < comps; ++k) norm2 += acc[k] * acc[k];
      const double lv = norm2 > 0.0 ? m + 0.5 * std::log(norm2) : kNegInf;
      if (lv > best.log_modulus) best = {lv, static_cast<int>(d), theta};
    }
  }
  return best;
}

// single-point ln|f(r cos(theta) + j r sin(theta))|, same scaling
double log_abs_at(const Support& s, int n, double r, double theta,
                  const CliffordNumber& jc) {
  const double lnr = std::log(r);
  const std::size_t comps = std::size_t{1} << n;
  double m = kNegInf;
  for (std::size_t i = 0; i < s.size(); ++i)
    m = std::max(m, static_cast<double>(s.deg[i]) * lnr + s.log_norm[i]);
  std::vector<double> acc(comps, 0.0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double t = static_cast<double>(s.deg[i]) * lnr - m;
    if (t + s.log_norm[i] < -60.0) continue;
    const double h = std::exp(0.5 * t);
    CliffordNumber a(n);
    for (std::size_t k = 0; k < comps; ++k) a[k] = ((*s.coeff[i])[k] * h) * h;
    const CliffordNumber b = clifford_mul(jc, a);
    const double lt = static_cast<double>(s.deg[i]) * theta;
    const double ct = std::cos(lt), st = std::sin(lt);
    for (std::size_t k = 0; k < comps; ++k) acc[k] += ct * a[k] + st * b[k];
  }
  double norm2 = 0.0;
  for (std::size_t k = 0; k < comps; ++k) norm2 += acc[k] * acc[k];
  return norm2 > 0.0 ? m + 0.5 * std::log(norm2) : kNegInf;
}

struct Profile1D {
  double log_value = kNegInf;
  double radius = 0.0;
  bool rising = false;
};

// maximum of l ln r - sigma r^{rho(r)} over (0, cap]
Profile1D monomial_profile_max(const ProximateOrder& po, double sigma, long l,
                               std::optional<double> cap) {
  if (l == 0) return {0.0, 0.0, false};
  if (sigma == 0.0) return {kPosInf, kPosInf, true};
  const double hi = cap.value_or(1e15);
  const double lo = std::min(1e-9, hi / 1e3);
  auto g = [&](double r) {
    return static_cast<double>(l) * std::log(r) - sigma * po.power(r);
  };
  const int pts = 800;
  const std::vector<double> grid = geometric_grid(lo, hi, pts);
  std::size_t best = 0;
  double gbest = kNegInf;
  std::vector<double> vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    vals[i] = g(grid[i]);
    if (vals[i] > gbest) {
      gbest = vals[i];
      best = i;
    }
  }
  if (best + 1 == grid.size() && vals[best] > vals[best - 1])
    return {vals[best], grid[best], true};
  const double rlo = grid[best > 0 ? best - 1 : 0];
  const double rhi = grid[std::min(best + 1, grid.size() - 1)];
  auto [v, r] = golden_max(rlo, rhi, g);
  if (gbest > v) return {gbest, grid[best], false};
  return {v, r, false};
}

}  // namespace

GrowthParams::GrowthParams(ProximateOrder order, double s)
    : po(std::move(order)), sigma(s) {
  if (!po.normalized())
    throw std::invalid_argument("growth scale needs a normalized order");
  if (!(sigma >= 0.0)) throw std::invalid_argument("sigma must be >= 0");
}

NormGrid NormGrid::refined(int factor) const {
  NormGrid g = *this;
  g.radii *= factor;
  g.directions *= factor;
  g.angles *= factor;
  return g;
}

double NormEstimate::value() const { return std::exp(log_value); }

double log_monomial_norm(const ProximateOrder& po, double sigma, long l) {
  if (!po.normalized()) throw std::invalid_argument("order must be normalized");
  if (l < 0) throw std::invalid_argument("negative degree");
  if (!(sigma >= 0.0)) throw std::invalid_argument("sigma must be >= 0");
  return monomial_profile_max(po, sigma, l, std::nullopt).log_value;
}

double monomial_norm_radius(const ProximateOrder& po, double sigma, long l) {
  if (!po.normalized()) throw std::invalid_argument("order must be normalized");
  return monomial_profile_max(po, sigma, l, std::nullopt).radius;
}

std::optional<double> validity_radius(const SliceSeries& f) {
  const Support s = collect_support(f);
  const std::size_t cnt = s.size();
  if (cnt < 8) return std::nullopt;
  const double threshold = std::log(1e-6);
  // share of the last five nonzero coefficients in sum |a_l| r^l; strictly
  // increasing in r (every lower/upper term ratio decreases), so bisect
  auto log_share = [&](double r) {
    const double lnr = std::log(r);
    double m = kNegInf;
    for (std::size_t i = 0; i < cnt; ++i)
      m = std::max(m, static_cast<double>(s.deg[i]) * lnr + s.log_norm[i]);
    double total = 0.0, tail = 0.0;
    for (std::size_t i = 0; i < cnt; ++i) {
      const double e =
          std::exp(static_cast<double>(s.deg[i]) * lnr + s.log_norm[i] - m);
      total += e;
      if (i + 5 >= cnt) tail += e;
    }
    return std::log(tail) - std::log(total);
  };
  if (log_share(1e-3) >= threshold) return std::nullopt;
  if (log_share(1e9) < threshold) return std::nullopt;
  double lo = 1e-3, hi = 1e9;
  for (int it = 0; it < 80; ++it) {
    const double mid = std::sqrt(lo * hi);
    (log_share(mid) < threshold ? lo : hi) = mid;
  }
  return lo;
}

NormEstimate norm_estimate(const SliceSeries& f, const GrowthParams& gp,
                           const NormGrid& grid) {
  NormEstimate out;
  out.grid = grid;
  const Support s = collect_support(f);
  if (s.empty()) return out;

  if (s.size() == 1) {
    const Profile1D p = monomial_profile_max(gp.po, gp.sigma, s.deg[0], grid.r_max);
    out.log_value = s.log_norm[0] + p.log_value;
    out.best_radius = p.radius;
    out.diverged = p.rising;
    return out;
  }
  if (f.n() < 1)
    throw std::invalid_argument("direction scan needs at least one generator");

  double cap;
  bool hard_cap;
  if (grid.r_max) {
    cap = *grid.r_max;
    hard_cap = true;
  } else if (auto rv = validity_radius(f)) {
    cap = *rv;
    hard_cap = true;
  } else {
    // exact-polynomial reading: every monomial profile has turned over past
    // ten times the top-degree optimum
    const Profile1D top =
        monomial_profile_max(gp.po, gp.sigma, s.deg.back(), std::nullopt);
    cap = top.rising ? 1e12
                     : std::clamp(10.0 * top.radius, 10.0 * grid.r_min, 1e12);
    hard_cap = top.rising;
  }
  double scan_lo = grid.r_min;
  if (scan_lo >= cap) scan_lo = cap / 1e3;

  const auto dirs = sphere_sample(f.n(), grid.directions, grid.direction_seed);
  std::vector<double> radii;
  std::vector<RingBest> ring;
  std::vector<double> h;
  bool rising = false;
  bool extended = false;
  for (;;) {
    radii = geometric_grid(scan_lo, cap, grid.radii);
    ring.assign(radii.size(), RingBest{});
    h.assign(radii.size(), kNegInf);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(par::max_threads())
#endif
    for (long long i = 0; i < static_cast<long long>(radii.size()); ++i) {
      const std::size_t u = static_cast<std::size_t>(i);
      ring[u] = ring_scan(s, f.n(), radii[u], dirs, grid.angles);
      h[u] = ring[u].log_modulus - gp.sigma * gp.po.power(radii[u]);
    }
    rising = h.back() > h[h.size() - 2];
    std::size_t best = 0;
    for (std::size_t i = 1; i < h.size(); ++i)
      if (h[i] > h[best]) best = i;
    rising = rising && best + 1 == h.size();
    if (rising && !hard_cap && !extended && cap < 1e12) {
      cap = std::min(cap * 100.0, 1e12);
      extended = true;
      continue;
    }

    // one golden refinement along the winning ray
    const CliffordNumber jc =
        dirs[static_cast<std::size_t>(ring[best].dir)].as_clifford();
    const double theta = ring[best].theta;
    auto q = [&](double r) {
      return log_abs_at(s, f.n(), r, theta, jc) - gp.sigma * gp.po.power(r);
    };
    const double rlo = radii[best > 0 ? best - 1 : 0];
    const double rhi = radii[std::min(best + 1, radii.size() - 1)];
    auto [qv, qr] = golden_max(rlo, rhi, q);
    out.log_value = h[best];
    out.best_radius = radii[best];
    if (qv > out.log_value) {
      out.log_value = qv;
      out.best_radius = qr;
    }
    break;
  }
  // the point x = 0 (weight 1: r^{rho(r)} -> 0)
  if (s.deg.front() == 0 && s.log_norm.front() > out.log_value) {
    out.log_value = s.log_norm.front();
    out.best_radius = 0.0;
  }
  out.diverged = rising;
  out.grid.r_max = cap;
  return out;
}

double log_max_modulus(const SliceSeries& f, double r, int directions,
                       int angles, std::uint64_t seed) {
  if (!(r > 0.0)) throw std::invalid_argument("radius must be positive");
  const Support s = collect_support(f);
  if (s.empty()) return kNegInf;
  if (s.size() == 1)  // |x^l a| = r^l ||a||: radial
    return s.log_norm[0] + static_cast<double>(s.deg[0]) * std::log(r);
  const auto dirs = sphere_sample(f.n(), directions, seed);
  const RingBest best = ring_scan(s, f.n(), r, dirs, angles);
  const CliffordNumber jc =
      dirs[static_cast<std::size_t>(best.dir)].as_clifford();
  const double dtheta = kTau / angles;
  double lo = best.theta - dtheta, hi = best.theta + dtheta;
  const double invphi = 0.6180339887498948882;
  double c = hi - invphi * (hi - lo), d = lo + invphi * (hi - lo);
  double fc = log_abs_at(s, f.n(), r, c, jc);
  double fd = log_abs_at(s, f.n(), r, d, jc);
  for (int it = 0; it < 60; ++it) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - invphi * (hi - lo);
      fc = log_abs_at(s, f.n(), r, c, jc);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + invphi * (hi - lo);
      fd = log_abs_at(s, f.n(), r, d, jc);
    }
  }
  return std::max(best.log_modulus, std::max(fc, fd));
}

double max_modulus(const SliceSeries& f, double r, int directions, int angles,
                   std::uint64_t seed) {
  return std::exp(log_max_modulus(f, r, directions, angles, seed));
}

TypeEstimate coeff_type_estimate(const SliceSeries& f,
                                 const ProximateOrder& po) {
  if (!po.normalized()) throw std::invalid_argument("order must be normalized");
  const long N = f.truncation();
  if (N < 20) throw std::invalid_argument("need truncation >= 20");
  TypeEstimate te;
  te.window_lo = N / 2;
  te.window_hi = N;
  double best = kNegInf;  // ln of |a_l|^{1/l} phi(l)
  for (long l = te.window_lo; l <= N; ++l) {
    const CliffordNumber& a = f.coeff(l);
    if (a.is_zero()) continue;
    const double ln_s = a.log_norm() / static_cast<double>(l) +
                        std::log(phi(po, static_cast<double>(l)));
    best = std::max(best, ln_s);
  }
  if (best == kNegInf) return te;  // polynomial tail: type 0
  te.coefficient_limsup = std::exp(best);
  te.implied_type = std::exp(po.rho() * best - 1.0 - std::log(po.rho()));
  return te;
}

GrowthTypeEstimate growth_type_estimate(const SliceSeries& f,
                                        const ProximateOrder& po, int radii,
                                        int directions, int angles) {
  if (!po.normalized()) throw std::invalid_argument("order must be normalized");
  GrowthTypeEstimate out;
  out.validity = validity_radius(f);
  out.r_hi = out.validity.value_or(1e6);
  out.r_lo = out.r_hi / 10.0;
  if (f.degree() < 0) return out;
  const std::vector<double> rs = geometric_grid(out.r_lo, out.r_hi, radii);
  std::vector<double> q(rs.size(), kNegInf);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(par::max_threads())
#endif
  for (long long i = 0; i < static_cast<long long>(rs.size()); ++i) {
    const std::size_t u = static_cast<std::size_t>(i);
    q[u] = log_max_modulus(f, rs[u], directions, angles) / po.power(rs[u]);
  }
  double m = kNegInf;
  for (double v : q) m = std::max(m, v);
  out.type = std::max(0.0, m);
  return out;
}

double log_taylor_tail_norm(const SliceSeries& f, const GrowthParams& gp,
                            long from_index) {
  std::vector<double> terms;
  for (long l = std::max(from_index, 0L); l <= f.truncation(); ++l) {
    const CliffordNumber& a = f.coeff(l);
    if (a.is_zero()) continue;
    terms.push_back(a.log_norm() +
                    log_monomial_norm(gp.po, gp.sigma, l));
  }
  if (terms.empty()) return kNegInf;
  const double m = *std::max_element(terms.begin(), terms.end());
  if (m == kPosInf) return kPosInf;
  double acc = 0.0;
  for (double t : terms) acc += std::exp(t - m);
  return m + std::log(acc);
}

double taylor_tail_norm(const SliceSeries& f, const GrowthParams& gp,
                        long from_index) {
  return std::exp(log_taylor_tail_norm(f, gp, from_index));
}

CheckResult verify_monomial_norm_bound(const ProximateOrder& po, double sigma,
                                       double sigma_prime, long l_max) {
  if (!(0.0 < sigma_prime && sigma_prime < sigma))
    throw std::invalid_argument("need 0 < sigma' < sigma");
  if (l_max < 2) throw std::invalid_argument("l_max too small");
  CheckResult c;
  c.name = "monomial-norm-bound";
  c.params["sigma"] = sigma;
  c.params["sigma_prime"] = sigma_prime;
  c.params["rho"] = po.rho();
  c.grid["l_max"] = static_cast<double>(l_max);

  const double slope = std::log(sigma_prime) / po.rho();
  std::vector<double> lr(static_cast<std::size_t>(l_max) + 1);
  bool finite = true;
  for (long l = 0; l <= l_max; ++l) {
    lr[static_cast<std::size_t>(l)] =
        log_monomial_norm(po, sigma, l) + static_cast<double>(l) * slope -
        log_G(po, l);
    if (!std::isfinite(lr[static_cast<std::size_t>(l)])) finite = false;
  }
  std::size_t argmax = 0;
  long l_zero = 0;
  for (std::size_t i = 1; i < lr.size(); ++i) {
    if (lr[i] > lr[argmax]) argmax = i;
    if (lr[i] > lr[i - 1] + 1e-12) l_zero = static_cast<long>(i);
  }
  c.empirical_constant = std::exp(lr[argmax]);
  c.params["l_zero"] = static_cast<double>(l_zero);
  c.params["argmax_l"] = static_cast<double>(argmax);
  c.pass = finite && l_zero < l_max;
  c.max_violation = c.pass ? 0.0 : lr.back() - lr[lr.size() - 2];
  c.notes = "ratio ||x^l|| sigma'^{l/rho} / G_l; non-increasing beyond l_zero";
  return c;
}

CheckResult verify_derivative_norm_bound(const SliceSeries& f,
                                         const ProximateOrder& po,
                                         double sigma, long l_max,
                                         const NormGrid& grid) {
  CheckResult c;
  c.name = "derivative-norm-bound";
  const double kappa = std::pow(2.0, po.rho() + 1.0);
  c.params["sigma"] = sigma;
  c.params["kappa"] = kappa;
  c.params["rho"] = po.rho();
  c.grid["l_max"] = static_cast<double>(l_max);
  c.grid["radii"] = grid.radii;
  c.grid["directions"] = grid.directions;
  c.grid["angles"] = grid.angles;

  const GrowthParams base_gp(po, sigma);
  const GrowthParams deriv_gp(po, kappa * sigma);
  const NormEstimate base = norm_estimate(f, base_gp, grid);
  if (!std::isfinite(base.log_value) || base.diverged) {
    c.notes = "base norm unusable";
    return c;
  }
  const GSequence G = make_g_sequence(po, l_max);
  const double log2k = std::log(2.0 * kappa * sigma);
  SliceSeries df = f;
  double best = kNegInf;
  long arg = 0;
  bool ok = true;
  for (long l = 0; l <= l_max; ++l) {
    const NormEstimate est = norm_estimate(df, deriv_gp, grid);
    if (est.diverged) ok = false;
    if (std::isfinite(est.log_value)) {
      const double ratio = est.log_value - std::lgamma(l + 1.0) + G.at(l) -
                           base.log_value -
                           static_cast<double>(l) / po.rho() * log2k;
      if (ratio > best) {
        best = ratio;
        arg = l;
      }
    }
    df = slice_derivative(df);
  }
  c.empirical_constant = std::exp(best);
  c.params["argmax_l"] = static_cast<double>(arg);
  c.pass = ok && best < kPosInf;
  c.max_violation = 0.0;
  c.notes = "ratio (1/l!) ||d^l f|| G_l / (||f|| (2 kappa sigma)^{l/rho}) bounded";
  return c;
}

CheckResult verify_star_norm_bound(const SliceSeries& f, const SliceSeries& g,
                                   const ProximateOrder& po, double sigma,
                                   double tau, const NormGrid& grid) {
  CheckResult c;
  c.name = "star-norm-bound";
  const int n = f.n();
  const double log_bound = 0.5 * (n + 4) * std::log(2.0);
  c.params["sigma"] = sigma;
  c.params["tau"] = tau;
  c.params["n"] = n;
  c.params["bound_constant"] = std::exp(log_bound);
  c.grid["radii"] = grid.radii;
  c.grid["directions"] = grid.directions;
  c.grid["angles"] = grid.angles;

  if (f.degree() < 0 || g.degree() < 0) {
    c.pass = true;
    c.notes = "zero factor: both sides vanish";
    return c;
  }
  const NormEstimate nf = norm_estimate(f, GrowthParams(po, sigma), grid);
  const NormEstimate ng = norm_estimate(g, GrowthParams(po, tau), grid);
  const NormEstimate nh =
      norm_estimate(star_product(f, g), GrowthParams(po, sigma + tau), grid);
  const double excess = nh.log_value - (log_bound + nf.log_value + ng.log_value);
  c.empirical_constant = std::exp(nh.log_value - nf.log_value - ng.log_value);
  c.max_violation = excess;  // log-domain signed excess over the bound
  c.pass = excess <= 1e-9;
  c.notes = "log-domain comparison; empirical_constant = observed norm ratio";
  return c;
}

}  // namespace sliceforge
