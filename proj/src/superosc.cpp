#include "sliceforge/superosc.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "sliceforge/dd.hpp"

namespace sliceforge {
namespace {

// (alpha + beta e1)(re + im e1) within the e1 slice; e1^2 = -1
CliffordNumber slice_mul(const CliffordNumber& c, double re, double im) {
  CliffordNumber out(1);
  out[0] = c[0] * re - c[1] * im;
  out[1] = c[0] * im + c[1] * re;
  return out;
}

CliffordNumber slice_number(double re, double im) {
  CliffordNumber out(1);
  out[0] = re;
  out[1] = im;
  return out;
}

// binomial weights and frequencies of the superposition, in dd arithmetic;
// the weights near the center reach ~2^n and must cancel exactly
struct DdTerms {
  std::vector<dd::Complex> amp;
  std::vector<dd::Dd> freq;
};

DdTerms dd_terms(int n, double a, double t) {
  DdTerms out;
  out.amp.resize(static_cast<std::size_t>(n) + 1);
  out.freq.resize(static_cast<std::size_t>(n) + 1);
  const dd::Dd p = dd::mul(dd::from(1.0 + a), 0.5);
  const dd::Dd q = dd::mul(dd::from(1.0 - a), 0.5);
  // A_0 = p^n, then A_{k+1} = A_k (n - k) q / ((k + 1) p)
  dd::Dd w = dd::from(1.0);
  for (int i = 0; i < n; ++i) w = dd::mul(w, p);
  for (int k = 0; k <= n; ++k) {
    const dd::Dd f =
        dd::sub(dd::from(1.0), dd::div(dd::from(2.0 * k), dd::from(double(n))));
    out.freq[static_cast<std::size_t>(k)] = f;
    // phase from free evolution: e^{-i f^2 t}
    const dd::Dd phase = dd::mul(dd::mul(f, f), -t);
    out.amp[static_cast<std::size_t>(k)] = dd::mul(dd::cis(phase), w);
    if (k < n)
      w = dd::div(dd::mul(dd::mul(w, q), double(n - k)),
                  dd::mul(p, double(k + 1)));
  }
  return out;
}

// psi(z) = sum_k A_k e^{i f_k (x + i y)} = sum_k A_k e^{-f_k y} e^{i f_k x}
dd::Complex dd_eval(const DdTerms& terms, double x, double y) {
  dd::Complex acc{dd::from(0.0), dd::from(0.0)};
  for (std::size_t k = 0; k < terms.amp.size(); ++k) {
    const dd::Dd& f = terms.freq[k];
    dd::Complex term = dd::mul(dd::cis(dd::mul(f, x)), terms.amp[k]);
    if (y != 0.0) term = dd::mul(term, dd::exp(dd::mul(f, -y)));
    acc = dd::add(acc, term);
  }
  return acc;
}

// e^{i(a z - a^2 t)} at z = x + i y
dd::Complex dd_limit(double a, double t, double x, double y) {
  const dd::Dd theta =
      dd::sub(dd::mul(dd::from(a), x), dd::mul(dd::from(a * a), t));
  dd::Complex out = dd::cis(theta);
  if (y != 0.0) out = dd::mul(out, dd::exp(dd::from(-a * y)));
  return out;
}

std::vector<double> real_axis(const ConvergenceGrid& g) {
  std::vector<double> xs;
  const long count = std::lround((g.x_max - g.x_min) / g.x_step);
  for (long i = 0; i <= count; ++i) xs.push_back(g.x_min + g.x_step * i);
  return xs;
}

// ln of the exponential-series tail bound sum_{j>J} y^j/j! <= y^{J+1}/(J+1)! e^y;
// J < 0 means the whole series, i.e. e^y itself
double log_exp_tail(long J, double y) {
  if (y <= 0.0) return J < 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  if (J < 0) return y;
  return (J + 1.0) * std::log(y) - std::lgamma(J + 2.0) + y;
}

}  // namespace

WaveCombo build_Fn(int n, double a) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (!(a >= 1.0)) throw std::invalid_argument("need a >= 1");
  WaveCombo w;
  w.n_param = n;
  w.a_param = a;
  w.terms.resize(static_cast<std::size_t>(n) + 1);
  const double p = (1.0 + a) / 2.0;
  const double q = (1.0 - a) / 2.0;
  double amp = std::pow(p, n);
  for (int k = 0; k <= n; ++k) {
    w.terms[static_cast<std::size_t>(k)].amplitude = slice_number(amp, 0.0);
    w.terms[static_cast<std::size_t>(k)].frequency = 1.0 - 2.0 * k / n;
    if (k < n) amp = amp * (n - k) * q / ((k + 1) * p);
  }
  return w;
}

WaveCombo evolve(const WaveCombo& w, double t) {
  WaveCombo out = w;
  for (WaveTerm& term : out.terms) {
    const double phase = -term.frequency * term.frequency * t;
    term.amplitude =
        slice_mul(term.amplitude, std::cos(phase), std::sin(phase));
  }
  return out;
}

CliffordNumber wave_eval(const WaveCombo& w, double x) {
  CliffordNumber acc(1);
  for (const WaveTerm& term : w.terms) {
    const double th = term.frequency * x;
    acc += slice_mul(term.amplitude, std::cos(th), std::sin(th));
  }
  return acc;
}

CliffordNumber wave_sum_amplitudes(const WaveCombo& w) {
  CliffordNumber acc(1);
  for (const WaveTerm& term : w.terms) acc += term.amplitude;
  return acc;
}

SliceSeries to_taylor(const WaveCombo& w, long N) {
  if (N < 0) throw std::invalid_argument("need N >= 0");
  SliceSeries f(1, N);
  for (const WaveTerm& term : w.terms) {
    // running c = A (i k)^l / l!
    CliffordNumber c = term.amplitude;
    for (long l = 0; l <= N; ++l) {
      CliffordNumber a = f.coeff(l);
      a += c;
      f.set_coeff(l, a);
      c = slice_mul(c, 0.0, term.frequency);
      c *= 1.0 / static_cast<double>(l + 1);
    }
  }
  return f.trimmed();
}

InfOrderOperator evolution_operator(long M, double t) {
  if (M < 0) throw std::invalid_argument("need M >= 0");
  std::vector<SliceSeries> u(static_cast<std::size_t>(2 * M) + 1,
                             SliceSeries(1, 0));
  // (it)^m/m! by running multiplication; i^m cycles through the slice units
  CliffordNumber c = slice_number(1.0, 0.0);
  for (long m = 0; m <= M; ++m) {
    u[static_cast<std::size_t>(2 * m)].set_coeff(0, c);
    c = slice_mul(c, 0.0, t / static_cast<double>(m + 1));
  }
  return InfOrderOperator(std::move(u), ProximateOrder::constant(1.0),
                          ProximateOrder::constant(1.0));
}

SliceSeries evolve_via_operator(const WaveCombo& w, double t, long M, long N) {
  return apply(evolution_operator(M, t), to_taylor(w, N));
}

double evolve_truncation_bound(const WaveCombo& w, double t, long M, long N,
                               double x_max) {
  const double at = std::fabs(t);
  double bound = 0.0;
  for (const WaveTerm& term : w.terms) {
    const double A = term.amplitude.norm();
    const double k = std::fabs(term.frequency);
    // kept operator terms acting on the dropped Taylor tail; each d^{2m}
    // shifts the tail start down by 2m and scales by k^{2m} <= 1
    double taylor_piece = 0.0;
    double tm = 1.0;  // t^m / m!
    for (long m = 0; m <= M; ++m) {
      taylor_piece += tm * std::exp(log_exp_tail(N - 2 * m, k * x_max));
      tm *= at / static_cast<double>(m + 1);
    }
    // dropped operator tail acting on the exact wave e^{ikx}
    const double op_piece =
        std::exp(log_exp_tail(M, k * k * at) + k * x_max);
    bound += A * (taylor_piece + op_piece);
  }
  return bound;
}

std::vector<ConvergenceRow> convergence_measure(
    const std::vector<int>& n_list, double a, double t,
    const std::vector<double>& weights, const ConvergenceGrid& grid) {
  if (!(a >= 1.0)) throw std::invalid_argument("need a >= 1");
  for (double B : weights)
    if (!(B > 0.0)) throw std::invalid_argument("weights must be positive");

  // sample points: dense real axis, then the rectangle rows
  std::vector<std::pair<double, double>> pts;
  for (double x : real_axis(grid)) pts.emplace_back(x, 0.0);
  if (grid.rectangle) {
    const long xc = std::lround((grid.x_max - grid.x_min) / grid.rect_x_step);
    const long yc = std::lround(2.0 * grid.y_max / grid.y_step);
    for (long j = 0; j <= yc; ++j) {
      const double y = -grid.y_max + grid.y_step * j;
      for (long i = 0; i <= xc; ++i)
        pts.emplace_back(grid.x_min + grid.rect_x_step * i, y);
    }
  }

  std::vector<ConvergenceRow> rows;
  for (int n : n_list) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    const DdTerms terms = dd_terms(n, a, t);
    std::vector<double> best(weights.size(), 0.0);
    for (const auto& [x, y] : pts) {
      const dd::Complex diff =
          dd::sub(dd_eval(terms, x, y), dd_limit(a, t, x, y));
      const double gap = std::hypot(diff.re.hi, diff.im.hi);
      const double r = std::hypot(x, y);
      for (std::size_t b = 0; b < weights.size(); ++b) {
        const double v = gap * std::exp(-weights[b] * r);
        if (v > best[b]) best[b] = v;
      }
    }
    for (std::size_t b = 0; b < weights.size(); ++b)
      rows.push_back({n, t, weights[b], best[b]});
  }
  return rows;
}

std::vector<ConvergenceRow> convergence_measure(
    const std::vector<int>& n_list, double a, double t, double weight,
    const ConvergenceGrid& grid) {
  return convergence_measure(n_list, a, t, std::vector<double>{weight}, grid);
}

PlotData plane_wave_comparison(int n, double a, double t,
                               const ConvergenceGrid& grid) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (!(a >= 1.0)) throw std::invalid_argument("need a >= 1");
  const DdTerms terms = dd_terms(n, a, t);
  PlotData out;
  for (double x : real_axis(grid)) {
    const dd::Complex psi = dd_eval(terms, x, 0.0);
    const dd::Complex lim = dd_limit(a, t, x, 0.0);
    out.x.push_back(x);
    out.re_psi.push_back(psi.re.hi);
    out.im_psi.push_back(psi.im.hi);
    out.re_limit.push_back(lim.re.hi);
    out.im_limit.push_back(lim.im.hi);
  }
  return out;
}

}  // namespace sliceforge
