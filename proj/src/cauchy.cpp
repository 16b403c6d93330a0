#include "sliceforge/cauchy.hpp"

#include <cmath>
#include <stdexcept>

#include "sliceforge/parallel.hpp"

namespace sliceforge {
namespace {

constexpr double kTau = 6.283185307179586476925286766559;

void require_same_algebra(int a, int b) {
  if (a != b) throw std::invalid_argument("dimension mismatch");
}

void require_nonsingular(const Paravector& s, const Paravector& x) {
  const double gap = std::abs(x.scalar_part() - s.scalar_part()) +
                     std::abs(x.vector_norm() - s.vector_norm());
  if (gap < 1e-9)
    throw std::domain_error("x lies on the singular sphere of s");
}

// Q(s) = s^2 - 2 x_0 s + |x|^2 = 2(s_0 - x_0) s + (|x|^2 - |s|^2), a
// paravector in the slice of s (the reversed roles give P(x) for the other
// kernel form)
Paravector slice_quadratic(const Paravector& s, const Paravector& x) {
  const double c = 2.0 * (s.scalar_part() - x.scalar_part());
  std::vector<double> vec = s.vector_part();
  for (double& t : vec) t *= c;
  const double s2 = s.norm() * s.norm();
  const double x2 = x.norm() * x.norm();
  return Paravector(c * s.scalar_part() + x2 - s2, vec);
}

}  // namespace

ContourSpec::ContourSpec(double r, ImaginaryUnit unit, int node_count)
    : radius(r), j(std::move(unit)), nodes(node_count) {
  if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
  if (nodes < 8) throw std::invalid_argument("need at least 8 nodes");
}

CliffordNumber cauchy_kernel(const Paravector& s, const Paravector& x) {
  require_same_algebra(s.n(), x.n());
  require_nonsingular(s, x);

  const Paravector P = slice_quadratic(x, s);  // x^2 - 2 s_0 x + |s|^2
  const Paravector Q = slice_quadratic(s, x);  // s^2 - 2 x_0 s + |x|^2
  const CliffordNumber x_minus_sbar =
      x.as_clifford() - s.conjugate().as_clifford();
  const CliffordNumber s_minus_xbar =
      s.as_clifford() - x.conjugate().as_clifford();

  const CliffordNumber form1 =
      clifford_mul(P.inverse().as_clifford(), x_minus_sbar) * -1.0;
  const CliffordNumber form2 =
      clifford_mul(s_minus_xbar, Q.inverse().as_clifford());

  const double scale = std::max(1.0, form2.norm());
  if ((form1 - form2).norm() > 1e-11 * scale)
    throw std::logic_error("kernel forms disagree beyond tolerance");
  return form2;
}

CliffordNumber contour_measure(const ContourSpec& c, double theta) {
  const int n = c.j.n();
  const CliffordNumber jc = c.j.as_clifford();
  // s'(theta) = -r sin(theta) + j r cos(theta); ds_j = -j s'(theta)
  const CliffordNumber sprime =
      CliffordNumber::scalar(n, -c.radius * std::sin(theta)) +
      jc * (c.radius * std::cos(theta));
  return clifford_mul(jc, sprime) * -1.0;
}

CliffordNumber cauchy_eval(const SliceSeries& f, const Paravector& x,
                           const ContourSpec& c) {
  require_same_algebra(f.n(), x.n());
  require_same_algebra(f.n(), c.j.n());
  if (!(x.norm() < c.radius))
    throw std::domain_error("evaluation point outside the contour");
  const int n = f.n();
  const int nodes = c.nodes;
  auto term = [&](std::size_t k) {
    const double theta = kTau * static_cast<double>(k) / nodes;
    const double u = c.radius * std::cos(theta);
    const double v = c.radius * std::sin(theta);
    // lower semicircle in canonical form: u + jv = u + (-j)(-v)
    const ImaginaryUnit dir = v < 0.0 ? c.j.negated() : c.j;
    const double vv = std::fabs(v);
    const Paravector s = Paravector::from_slice(u, vv, dir);
    const CliffordNumber K = cauchy_kernel(s, x);
    const CliffordNumber dsj = contour_measure(c, theta);
    const CliffordNumber fs = evaluate_in_slice(f, u, vv, dir);
    return clifford_mul(clifford_mul(K, dsj), fs);
  };
  const CliffordNumber sum =
      par::accumulate(static_cast<std::size_t>(nodes), CliffordNumber(n), term);
  return sum * (1.0 / nodes);
}

SliceEvaluator make_evaluator(const SliceSeries& f) {
  return [f](double u, double v, const ImaginaryUnit& j) {
    return evaluate_in_slice(f, u, v, j);
  };
}

CliffordNumber coeff_extract(const SliceEvaluator& f, int n, long l,
                             const ContourSpec& c) {
  if (l < 0) throw std::invalid_argument("coefficient index must be >= 0");
  const int nodes = c.nodes;
  const CliffordNumber jc = c.j.as_clifford();
  const double rpow = std::pow(c.radius, -static_cast<double>(l + 1));
  auto term = [&](std::size_t k) {
    const double theta = kTau * static_cast<double>(k) / nodes;
    const double u = c.radius * std::cos(theta);
    const double v = c.radius * std::sin(theta);
    // s^{-l-1} = r^{-l-1} (cos((l+1)theta) - j sin((l+1)theta))
    const double a = static_cast<double>(l + 1) * theta;
    const CliffordNumber spow =
        CliffordNumber::scalar(n, rpow * std::cos(a)) +
        jc * (-rpow * std::sin(a));
    const CliffordNumber dsj = contour_measure(c, theta);
    // the evaluator is only ever handed canonical coordinates (v >= 0)
    const CliffordNumber fs =
        v < 0.0 ? f(u, -v, c.j.negated()) : f(u, v, c.j);
    return clifford_mul(clifford_mul(spow, dsj), fs);
  };
  const CliffordNumber sum =
      par::accumulate(static_cast<std::size_t>(nodes), CliffordNumber(n), term);
  return sum * (1.0 / nodes);
}

CliffordNumber coeff_extract(const SliceSeries& f, long l,
                             const ContourSpec& c) {
  require_same_algebra(f.n(), c.j.n());
  return coeff_extract(make_evaluator(f), f.n(), l, c);
}

CliffordNumber kernel_derivative(const Paravector& s, const Paravector& x,
                                 int i) {
  require_same_algebra(s.n(), x.n());
  require_nonsingular(s, x);
  const int n = x.n();
  if (i < 0 || i > n) throw std::invalid_argument("index out of range");

  const Paravector Q = slice_quadratic(s, x);
  const CliffordNumber Qi = Q.inverse().as_clifford();
  const CliffordNumber Qi2 = clifford_mul(Qi, Qi);
  const CliffordNumber s_minus_xbar =
      s.as_clifford() - x.conjugate().as_clifford();

  if (i == 0) {
    const CliffordNumber s_minus_x0 =
        s.as_clifford() - CliffordNumber::scalar(n, x.scalar_part());
    return Qi * -1.0 +
           clifford_mul(clifford_mul(s_minus_xbar, s_minus_x0), Qi2) * 2.0;
  }
  const CliffordNumber ei = CliffordNumber::basis(n, 1u << (i - 1));
  const double xi = x.vector_part()[static_cast<std::size_t>(i - 1)];
  return clifford_mul(ei, Qi) -
         clifford_mul(s_minus_xbar, Qi2) * (2.0 * xi);
}

}  // namespace sliceforge
