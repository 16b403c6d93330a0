#include "sliceforge/series.hpp"

#include <stdexcept>

namespace sliceforge {

SliceSeries::SliceSeries(int n, long truncation) : n_(n) {
  if (truncation < 0) throw std::invalid_argument("truncation must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(truncation) + 1, CliffordNumber(n));
}

SliceSeries SliceSeries::monomial(int n, long l, const CliffordNumber& a) {
  SliceSeries f(n, l);
  f.set_coeff(l, a);
  return f;
}

SliceSeries SliceSeries::monomial(int n, long l, double a) {
  return monomial(n, l, CliffordNumber::scalar(n, a));
}

SliceSeries SliceSeries::constant(int n, const CliffordNumber& a) {
  return monomial(n, 0, a);
}

const CliffordNumber& SliceSeries::coeff(long l) const {
  return coeffs_.at(static_cast<std::size_t>(l));
}

void SliceSeries::set_coeff(long l, const CliffordNumber& a) {
  if (a.n() != n_) throw std::invalid_argument("dimension mismatch");
  coeffs_.at(static_cast<std::size_t>(l)) = a;
}

long SliceSeries::degree() const {
  for (long l = truncation(); l >= 0; --l)
    if (!coeffs_[static_cast<std::size_t>(l)].is_zero()) return l;
  return -1;
}

SliceSeries SliceSeries::trimmed() const {
  const long d = degree();
  SliceSeries out(n_, d < 0 ? 0 : d);
  for (long l = 0; l <= (d < 0 ? -1 : d); ++l) out.set_coeff(l, coeff(l));
  return out;
}

SliceSeries& SliceSeries::operator+=(const SliceSeries& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("dimension mismatch");
  if (rhs.truncation() > truncation())
    coeffs_.resize(static_cast<std::size_t>(rhs.truncation()) + 1, CliffordNumber(n_));
  for (long l = 0; l <= rhs.truncation(); ++l)
    coeffs_[static_cast<std::size_t>(l)] += rhs.coeff(l);
  return *this;
}

SliceSeries& SliceSeries::operator*=(double s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

SliceSeries SliceSeries::coeff_right_mul(const CliffordNumber& c) const {
  SliceSeries out(n_, truncation());
  for (long l = 0; l <= truncation(); ++l)
    out.set_coeff(l, clifford_mul(coeff(l), c));
  return out;
}

CliffordNumber evaluate_in_slice(const SliceSeries& f, double u, double v,
                                 const ImaginaryUnit& j) {
  if (j.n() != f.n()) throw std::invalid_argument("dimension mismatch");
  const CliffordNumber jc = j.as_clifford();
  CliffordNumber acc(f.n());
  double c0 = 1.0;  // real and j-components of (u + jv)^l
  double c1 = 0.0;
  for (long l = 0; l <= f.truncation(); ++l) {
    const CliffordNumber& a = f.coeff(l);
    if (!a.is_zero()) {
      acc += a * c0;
      if (c1 != 0.0) acc += clifford_mul(jc, a) * c1;
    }
    const double t0 = u * c0 - v * c1;
    c1 = u * c1 + v * c0;
    c0 = t0;
  }
  return acc;
}

CliffordNumber evaluate(const SliceSeries& f, const Paravector& x) {
  if (x.n() != f.n()) throw std::invalid_argument("dimension mismatch");
  const Paravector::Slice s = x.decompose();
  return evaluate_in_slice(f, s.u, s.v, s.j);
}

SliceSeries slice_derivative(const SliceSeries& f) {
  const long nt = f.truncation() > 0 ? f.truncation() - 1 : 0;
  SliceSeries out(f.n(), nt);
  for (long l = 1; l <= f.truncation(); ++l)
    out.set_coeff(l - 1, f.coeff(l) * static_cast<double>(l));
  return out;
}

SliceSeries slice_derivative(const SliceSeries& f, long times) {
  if (times < 0) throw std::invalid_argument("derivative order must be >= 0");
  SliceSeries out = f;
  for (long k = 0; k < times; ++k) out = slice_derivative(out);
  return out;
}

SliceSeries star_product(const SliceSeries& f, const SliceSeries& g) {
  if (f.n() != g.n()) throw std::invalid_argument("dimension mismatch");
  SliceSeries out(f.n(), f.truncation() + g.truncation());
  for (long k = 0; k <= f.truncation(); ++k) {
    const CliffordNumber& a = f.coeff(k);
    if (a.is_zero()) continue;
    for (long m = 0; m <= g.truncation(); ++m) {
      const CliffordNumber& b = g.coeff(m);
      if (b.is_zero()) continue;
      CliffordNumber sum = out.coeff(k + m);
      sum += clifford_mul(a, b);
      out.set_coeff(k + m, sum);
    }
  }
  return out;
}

std::pair<CliffordNumber, CliffordNumber> components(const SliceSeries& f,
                                                     double u, double v,
                                                     const ImaginaryUnit& j) {
  if (v < 0.0) throw std::invalid_argument("slice coordinate v must be >= 0");
  const CliffordNumber plus = evaluate_in_slice(f, u, v, j);
  const CliffordNumber minus = evaluate_in_slice(f, u, -v, j);
  const CliffordNumber f0 = (plus + minus) * 0.5;
  const CliffordNumber f1 = clifford_mul(j.as_clifford(), (minus - plus) * 0.5);
  return {f0, f1};
}

SliceSeries taylor_recenter(const SliceSeries& f, double a) {
  const long N = f.truncation();
  SliceSeries out(f.n(), N);
  for (long k = 0; k <= N; ++k) {
    CliffordNumber bk(f.n());
    double binom = 1.0;  // C(l, k), advanced over l
    double apow = 1.0;   // a^{l-k}
    for (long l = k; l <= N; ++l) {
      bk += f.coeff(l) * (binom * apow);
      binom *= static_cast<double>(l + 1) / static_cast<double>(l + 1 - k);
      apow *= a;
    }
    out.set_coeff(k, bk);
  }
  return out;
}

}  // namespace sliceforge
