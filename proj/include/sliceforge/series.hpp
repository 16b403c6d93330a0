#pragma once

#include <utility>
#include <vector>

#include "sliceforge/clifford.hpp"

namespace sliceforge {

// Truncated power series sum_{l=0}^{N} x^l a_l with right Clifford
// coefficients. The truncation N is explicit data: operations report the
// resulting truncation, trailing zeros are kept unless trim() is asked for.
class SliceSeries {
 public:
  SliceSeries(int n, long truncation);

  static SliceSeries monomial(int n, long l, const CliffordNumber& a);
  static SliceSeries monomial(int n, long l, double a);
  static SliceSeries constant(int n, const CliffordNumber& a);

  int n() const { return n_; }
  long truncation() const { return static_cast<long>(coeffs_.size()) - 1; }

  const CliffordNumber& coeff(long l) const;
  void set_coeff(long l, const CliffordNumber& a);

  // largest index with a nonzero coefficient; -1 for the zero series
  long degree() const;

  // drop trailing zero coefficients (truncation of the zero series becomes 0)
  SliceSeries trimmed() const;

  SliceSeries& operator+=(const SliceSeries& rhs);  // truncation = max
  SliceSeries& operator*=(double s);

  friend SliceSeries operator+(SliceSeries a, const SliceSeries& b) { return a += b; }
  friend SliceSeries operator*(SliceSeries a, double s) { return a *= s; }

  // right-multiply every coefficient: sum x^l (a_l c)
  SliceSeries coeff_right_mul(const CliffordNumber& c) const;

 private:
  int n_;
  std::vector<CliffordNumber> coeffs_;
};

// f(u + j v) through the slice C_j = R + jR: powers of u + jv follow the
// complex recurrence, coefficients multiply on the right. v may carry either
// sign; (u, -v, j) and (u, v, -j) are the same point.
CliffordNumber evaluate_in_slice(const SliceSeries& f, double u, double v,
                                 const ImaginaryUnit& j);

// evaluate at x via its canonical slice decomposition (j = e_1 on the reals)
CliffordNumber evaluate(const SliceSeries& f, const Paravector& x);

// d/dx0 on the slice: coefficient l of the result is (l+1) a_{l+1};
// truncation drops by one (floor 0)
SliceSeries slice_derivative(const SliceSeries& f);

SliceSeries slice_derivative(const SliceSeries& f, long times);

// Cauchy product of coefficient sequences; truncation N_f + N_g. Left star
// multiplication: coefficient m is sum_k a_k b_{m-k} in that order.
SliceSeries star_product(const SliceSeries& f, const SliceSeries& g);

// Even/odd slice components: f(u+jv) = f0(u,v) + j f1(u,v) with real-valued
// dependence on (u, v >= 0): f0 = (f(u+jv) + f(u-jv))/2,
// f1 = j (f(u-jv) - f(u+jv))/2.
std::pair<CliffordNumber, CliffordNumber> components(const SliceSeries& f,
                                                     double u, double v,
                                                     const ImaginaryUnit& j);

// rewrite around a real center: sum (x-a)^k b_k with
// b_k = sum_{l>=k} C(l,k) a^{l-k} a_l
SliceSeries taylor_recenter(const SliceSeries& f, double a);

}  // namespace sliceforge
