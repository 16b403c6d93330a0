#include "sliceforge/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sliceforge/parallel.hpp"
#include "sliceforge/rng.hpp"

namespace sliceforge {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPosInf = std::numeric_limits<double>::infinity();

// per-sigma coefficient data: log h_l = ln(||u_l|| l! / G_l), divergence
// flags, and the nonzero index set
struct CoeffNorms {
  std::vector<double> log_h;
  std::vector<bool> bad;
  std::vector<long> nonzero;
};

CoeffNorms coeff_norms(const InfOrderOperator& P, double sigma,
                       const NormGrid& grid) {
  const long L = P.truncation();
  CoeffNorms cn;
  cn.log_h.assign(static_cast<std::size_t>(L) + 1, kNegInf);
  cn.bad.assign(static_cast<std::size_t>(L) + 1, false);
  const GSequence G = make_g_sequence(P.rho1, L);
  const GrowthParams gp(P.rho2, sigma);
  for (long l = 0; l <= L; ++l) {
    const SliceSeries& u = P.coeffs[static_cast<std::size_t>(l)];
    if (u.degree() < 0) continue;
    cn.nonzero.push_back(l);
    const NormEstimate est = norm_estimate(u, gp, grid);
    cn.bad[static_cast<std::size_t>(l)] = est.diverged;
    cn.log_h[static_cast<std::size_t>(l)] =
        est.log_value + std::lgamma(l + 1.0) - G.at(l);
  }
  return cn;
}

struct Decision {
  bool pass = false;
  double log_C = kNegInf;
  long argmax = 0;
};

// The membership judgment at one (lambda, sigma). C is always the exact max
// over the truncation; pass asks whether the tail behaves: either the
// per-degree growth rate g_l = h_l^{1/l} stays at or below lambda on the tail
// window, or it is non-increasing there (the family is still shrinking).
Decision decide(const CoeffNorms& cn, long L, double lambda, long min_tail) {
  Decision d;
  const double log_lambda = std::log(lambda);
  bool diverged = false;
  for (long l : cn.nonzero) {
    if (cn.bad[static_cast<std::size_t>(l)]) diverged = true;
    const double r =
        cn.log_h[static_cast<std::size_t>(l)] - static_cast<double>(l) * log_lambda;
    if (r > d.log_C) {
      d.log_C = r;
      d.argmax = l;
    }
  }
  if (diverged) {
    d.log_C = kPosInf;
    return d;  // a norm is unbounded: no constant exists
  }

  std::vector<long> cand;
  for (long l : cn.nonzero)
    if (l >= 1) cand.push_back(l);
  std::vector<long> window;
  for (long l : cand)
    if (l >= (L + 1) / 2) window.push_back(l);
  if (static_cast<long>(window.size()) < min_tail) {
    window.clear();
    const long take = std::min<long>(min_tail, static_cast<long>(cand.size()));
    window.assign(cand.end() - take, cand.end());
  }
  if (window.empty()) {
    d.pass = true;  // finite order: no coefficients past degree zero
    return d;
  }
  std::vector<double> g(window.size());
  double gmax = 0.0;
  for (std::size_t i = 0; i < window.size(); ++i) {
    g[i] = std::exp(cn.log_h[static_cast<std::size_t>(window[i])] /
                    static_cast<double>(window[i]));
    gmax = std::max(gmax, g[i]);
  }
  if (gmax <= lambda * (1.0 + 1e-12)) {
    d.pass = true;
    return d;
  }
  bool nonincreasing = true;
  for (std::size_t i = 1; i < g.size(); ++i)
    if (g[i] > g[i - 1] * (1.0 + 1e-9)) nonincreasing = false;
  d.pass = nonincreasing;
  return d;
}

void require_domination(const InfOrderOperator& P) {
  const CheckResult c = order_domination_check(P.rho1, P.rho2);
  if (!c.pass)
    throw std::invalid_argument(
        "source power scale is not dominated by the target scale");
}

double inv_factorial(long l) { return std::exp(-std::lgamma(l + 1.0)); }

}  // namespace

InfOrderOperator::InfOrderOperator(std::vector<SliceSeries> u,
                                   ProximateOrder r1, ProximateOrder r2)
    : coeffs(std::move(u)), rho1(std::move(r1)), rho2(std::move(r2)) {
  if (coeffs.empty())
    throw std::invalid_argument("operator needs at least u_0");
  for (const SliceSeries& s : coeffs)
    if (s.n() != coeffs.front().n())
      throw std::invalid_argument("coefficient dimension mismatch");
  if (!rho1.normalized() || !rho2.normalized())
    throw std::invalid_argument("operator orders must be normalized");
}

SliceSeries apply(const InfOrderOperator& P, const SliceSeries& f) {
  if (P.n() != f.n()) throw std::invalid_argument("dimension mismatch");
  SliceSeries acc(f.n(), 0);
  SliceSeries df = f;
  const long top = std::min(P.truncation(), f.truncation());
  for (long l = 0; l <= top; ++l) {
    if (l > 0) df = slice_derivative(df);
    const SliceSeries& u = P.coeffs[static_cast<std::size_t>(l)];
    if (u.degree() >= 0 && df.degree() >= 0) acc += star_product(u, df);
  }
  return acc;
}

std::vector<double> default_scale_grid() {
  std::vector<double> g(16);
  for (int i = 0; i < 16; ++i)
    g[static_cast<std::size_t>(i)] =
        std::pow(10.0, -3.0 + 6.0 * i / 15.0);
  return g;
}

CheckResult order_domination_check(const ProximateOrder& rho1,
                                   const ProximateOrder& rho2) {
  CheckResult c;
  c.name = "order-domination";
  c.params["rho1"] = rho1.rho();
  c.params["rho2"] = rho2.rho();
  const int points = 200;
  c.grid["points"] = points;
  c.grid["r_lo"] = 1.0;
  c.grid["r_hi"] = 1e8;
  std::vector<double> d(points);
  std::size_t argmax = 0;
  for (int i = 0; i < points; ++i) {
    const double r = std::pow(10.0, 8.0 * i / (points - 1.0));
    d[static_cast<std::size_t>(i)] =
        (rho1.value(r) - rho2.value(r)) * std::log(r);
    if (d[static_cast<std::size_t>(i)] > d[argmax])
      argmax = static_cast<std::size_t>(i);
  }
  // climbing into the far edge means the ratio r^{rho1}/r^{rho2} is unbounded
  const std::size_t decade = static_cast<std::size_t>(points * 7 / 8);
  const bool climbing =
      argmax + 1 == d.size() && d.back() - d[decade] > 1e-6;
  c.pass = !climbing;
  c.params["log_sup_ratio"] = d[argmax];
  c.empirical_constant = std::exp(std::min(d[argmax], 700.0));
  c.max_violation = climbing ? d.back() - d[decade] : 0.0;
  c.notes = "log of r^{rho1(r)}/r^{rho2(r)} scanned on [1, 1e8]";
  return c;
}

std::vector<BoundCertificate> certify_class_D(
    const InfOrderOperator& P, const std::vector<double>& lambda_grid,
    const std::vector<double>& sigma_grid, const CertifyOptions& opt) {
  require_domination(P);
  std::vector<double> sigmas = sigma_grid;
  std::sort(sigmas.begin(), sigmas.end());
  std::vector<CoeffNorms> norms(sigmas.size());
  for (std::size_t i = 0; i < sigmas.size(); ++i)
    norms[i] = coeff_norms(P, sigmas[i], opt.grid);

  std::vector<BoundCertificate> out;
  for (double lambda : lambda_grid) {
    BoundCertificate best;
    best.cls = OperatorClass::kD;
    best.lambda = lambda;
    bool found = false;
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
      const Decision d = decide(norms[i], P.truncation(), lambda, opt.min_tail);
      best.sigma = sigmas[i];
      best.log_C = d.log_C;
      best.max_ratio_index = d.argmax;
      best.pass = d.pass;
      if (d.pass) {
        found = true;
        break;
      }
    }
    (void)found;
    out.push_back(best);
  }
  return out;
}

std::vector<BoundCertificate> certify_class_D0(
    const InfOrderOperator& P, const std::vector<double>& sigma_grid,
    const std::vector<double>& lambda_grid, const CertifyOptions& opt) {
  require_domination(P);
  std::vector<double> lambdas = lambda_grid;
  std::sort(lambdas.begin(), lambdas.end());
  std::vector<BoundCertificate> out;
  for (double sigma : sigma_grid) {
    const CoeffNorms cn = coeff_norms(P, sigma, opt.grid);
    BoundCertificate best;
    best.cls = OperatorClass::kD0;
    best.sigma = sigma;
    for (double lambda : lambdas) {
      const Decision d = decide(cn, P.truncation(), lambda, opt.min_tail);
      best.lambda = lambda;
      best.log_C = d.log_C;
      best.max_ratio_index = d.argmax;
      best.pass = d.pass;
      if (d.pass) break;
    }
    out.push_back(best);
  }
  return out;
}

AbstractOperator abstract_identity(int n, long max_degree) {
  return {n, max_degree,
          [n](long k) { return SliceSeries::monomial(n, k, 1.0); }};
}

AbstractOperator abstract_translation(int n, double a, long max_degree) {
  return {n, max_degree, [n, a](long k) {
            // (x + a)^k expanded with a running Pascal row
            SliceSeries out(n, k);
            double binom = 1.0;
            double apow = 1.0;  // a^{k-i} filled from the top degree down
            for (long i = k; i >= 0; --i) {
              out.set_coeff(i, CliffordNumber::scalar(n, binom * apow));
              binom = binom * static_cast<double>(i) /
                      static_cast<double>(k - i + 1);
              apow *= a;
            }
            return out;
          }};
}

AbstractOperator abstract_derivative(int n, long max_degree) {
  return {n, max_degree, [n](long k) {
            if (k == 0) return SliceSeries(n, 0);
            return SliceSeries::monomial(n, k - 1, static_cast<double>(k));
          }};
}

AbstractOperator abstract_compose(const AbstractOperator& outer,
                                  const AbstractOperator& inner) {
  if (outer.n != inner.n) throw std::invalid_argument("dimension mismatch");
  AbstractOperator t;
  t.n = inner.n;
  t.max_degree = std::min(outer.max_degree, inner.max_degree);
  t.action = [outer, inner](long k) {
    return apply_abstract(outer, inner.action(k));
  };
  return t;
}

AbstractOperator abstract_from_operator(const InfOrderOperator& P,
                                        long max_degree) {
  const int n = P.n();
  return {n, max_degree, [P, n](long k) {
            return apply(P, SliceSeries::monomial(n, k, 1.0));
          }};
}

SliceSeries apply_abstract(const AbstractOperator& T, const SliceSeries& f) {
  if (T.n != f.n()) throw std::invalid_argument("dimension mismatch");
  if (f.degree() > T.max_degree)
    throw std::invalid_argument("degree beyond the operator's declared range");
  SliceSeries acc(f.n(), 0);
  for (long m = 0; m <= f.truncation(); ++m) {
    const CliffordNumber& a = f.coeff(m);
    if (a.is_zero()) continue;
    acc += T.action(m).coeff_right_mul(a);
  }
  return acc;
}

InfOrderOperator coefficients_from_operator(const AbstractOperator& T, long L,
                                            ProximateOrder rho1,
                                            ProximateOrder rho2) {
  if (T.max_degree < L)
    throw std::invalid_argument("operator does not cover the requested degree");
  const int n = T.n;
  std::vector<SliceSeries> tx;
  tx.reserve(static_cast<std::size_t>(L) + 1);
  for (long k = 0; k <= L; ++k) tx.push_back(T.action(k));

  std::vector<SliceSeries> u;
  u.reserve(static_cast<std::size_t>(L) + 1);
  for (long l = 0; l <= L; ++l) {
    SliceSeries acc(n, 0);
    double binom = 1.0;  // C(l, k), exact in double through l = 56
    for (long k = 0; k <= l; ++k) {
      const double sign = (l - k) % 2 == 0 ? 1.0 : -1.0;
      const SliceSeries mono =
          SliceSeries::monomial(n, l - k, sign * binom);
      acc += star_product(tx[static_cast<std::size_t>(k)], mono);
      binom = binom * static_cast<double>(l - k) / static_cast<double>(k + 1);
    }
    acc *= inv_factorial(l);
    u.push_back(acc.trimmed());
  }
  return InfOrderOperator(std::move(u), std::move(rho1), std::move(rho2));
}

CheckResult representation_identity_check(const AbstractOperator& T, long L,
                                          long M, int trials,
                                          std::uint64_t seed) {
  if (M > T.max_degree || L < M)
    throw std::invalid_argument("need M <= max degree and L >= M");
  CheckResult c;
  c.name = "operator-representation";
  c.params["L"] = static_cast<double>(L);
  c.params["M"] = static_cast<double>(M);
  c.params["trials"] = trials;
  c.grid["seed"] = static_cast<double>(seed);

  const ProximateOrder one = ProximateOrder::constant(1.0);
  const InfOrderOperator P = coefficients_from_operator(T, L, one, one);
  Rng rng(seed);
  const int n = T.n;
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    SliceSeries f(n, M);
    for (long m = 0; m <= M; ++m) {
      CliffordNumber a(n);
      for (std::size_t k = 0; k < a.size(); ++k) a[k] = rng.uniform(-1.0, 1.0);
      f.set_coeff(m, a);
    }
    const SliceSeries lhs = apply(P, f);
    const SliceSeries rhs = apply_abstract(T, f);
    const long top = std::max(lhs.truncation(), rhs.truncation());
    for (long m = 0; m <= top; ++m) {
      const CliffordNumber a =
          m <= lhs.truncation() ? lhs.coeff(m) : CliffordNumber(n);
      const CliffordNumber b =
          m <= rhs.truncation() ? rhs.coeff(m) : CliffordNumber(n);
      worst = std::max(worst, (a - b).norm());
    }
  }
  c.empirical_constant = worst;
  c.max_violation = worst - 1e-10;
  c.pass = worst < 1e-10;
  c.notes = "max coefficient deviation between the rebuilt operator and T";
  return c;
}

CheckResult continuity_estimate_check(const InfOrderOperator& P,
                                      const SliceSeries& f,
                                      const BoundCertificate& cert, double tau,
                                      const NormGrid& grid) {
  CheckResult c;
  c.name = "continuity-estimate";
  const double rho = P.rho1.rho();
  c.params["lambda"] = cert.lambda;
  c.params["sigma"] = cert.sigma;
  c.params["tau"] = tau;
  c.params["rho1"] = rho;
  c.grid["radii"] = grid.radii;
  c.grid["directions"] = grid.directions;
  c.grid["angles"] = grid.angles;

  const double shift = std::pow(2.0, rho + 1.0) * tau;
  const NormEstimate lhs =
      norm_estimate(apply(P, f), GrowthParams(P.rho2, cert.sigma + shift), grid);
  const NormEstimate base = norm_estimate(f, GrowthParams(P.rho1, tau), grid);
  const CheckResult deriv =
      verify_derivative_norm_bound(f, P.rho1, tau, std::max(f.degree(), 1L), grid);
  const double q =
      cert.lambda * std::pow(std::pow(2.0, rho + 2.0) * tau, 1.0 / rho);
  double geo = 0.0;
  double qp = 1.0;
  for (long l = 0; l <= P.truncation(); ++l) {
    geo += qp;
    qp *= q;
  }
  const double log_rhs = std::log(4.0) + cert.log_C +
                         std::log(deriv.empirical_constant) + base.log_value +
                         std::log(geo);
  c.params["q"] = q;
  c.params["C_tau"] = deriv.empirical_constant;
  c.empirical_constant = 4.0 * std::exp(lhs.log_value - log_rhs);
  c.max_violation = lhs.log_value - log_rhs;
  c.pass = deriv.pass && lhs.log_value <= log_rhs + 1e-9;
  c.notes = "log-domain comparison of ||Pf|| against the certified chain";
  return c;
}

}  // namespace sliceforge
