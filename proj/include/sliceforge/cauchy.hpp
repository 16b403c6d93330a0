#pragma once

#include <functional>

#include "sliceforge/series.hpp"

namespace sliceforge {

// Origin-centered circle of radius r inside the plane C_j, walked
// counterclockwise with equispaced trapezoidal nodes.
struct ContourSpec {
  double radius;
  ImaginaryUnit j;
  int nodes;

  ContourSpec(double r, ImaginaryUnit unit, int node_count = 512);
};

// Left Cauchy kernel. Both algebraic forms
//   -(x^2 - 2 s_0 x + |s|^2)^{-1} (x - conj(s))   and
//   (s - conj(x)) (s^2 - 2 x_0 s + |x|^2)^{-1}
// are computed and must agree within 1e-11 relative; the second is returned.
// Throws when x lies on the sphere of s (|x_0-s_0| + ||x'|-|s'|| < 1e-9).
CliffordNumber cauchy_kernel(const Paravector& s, const Paravector& x);

// -j s'(theta): the measure factor of the contour at angle theta. For an
// origin-centered circle it coincides with s(theta) itself.
CliffordNumber contour_measure(const ContourSpec& c, double theta);

// (1/2 pi) integral of kernel * ds_j * f over the contour, by the trapezoid
// rule. Requires |x| < c.radius.
CliffordNumber cauchy_eval(const SliceSeries& f, const Paravector& x,
                           const ContourSpec& c);

// black-box slice evaluator: (u, v, j) -> f(u + j v). Quadratures call it
// with canonical coordinates only: v >= 0, lower semicircle folded onto -j.
using SliceEvaluator =
    std::function<CliffordNumber(double, double, const ImaginaryUnit&)>;

SliceEvaluator make_evaluator(const SliceSeries& f);

// Taylor coefficient a_l = (1/2 pi) integral s^{-l-1} ds_j f(s). Exact for
// polynomial f up to rounding once nodes exceed every aliasing frequency
// (nodes >= 4(N+l) is comfortable).
CliffordNumber coeff_extract(const SliceEvaluator& f, int n, long l,
                             const ContourSpec& c);

CliffordNumber coeff_extract(const SliceSeries& f, long l,
                             const ContourSpec& c);

// Closed-form partial derivative of the kernel in x_i, i = 0..n:
//   i = 0:   -Q^{-1} + 2 (s - conj(x)) (s - x_0) Q^{-2}
//   i >= 1:  e_i Q^{-1} - 2 x_i (s - conj(x)) Q^{-2}
// with Q = s^2 - 2 x_0 s + |x|^2 living in C_{j_s}.
CliffordNumber kernel_derivative(const Paravector& s, const Paravector& x,
                                 int i);

}  // namespace sliceforge
