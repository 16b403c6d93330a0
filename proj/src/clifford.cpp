#include "sliceforge/clifford.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sliceforge/rng.hpp"

namespace sliceforge {

namespace {
void require_dim(int n) {
  if (n < 0 || n > 8) throw std::invalid_argument("generator count must be in [0, 8]");
}
}  // namespace

CliffordNumber::CliffordNumber(int n) : n_(n) {
  require_dim(n);
  c_.assign(std::size_t{1} << n, 0.0);
}

CliffordNumber CliffordNumber::scalar(int n, double value) {
  CliffordNumber x(n);
  x.c_[0] = value;
  return x;
}

CliffordNumber CliffordNumber::basis(int n, unsigned mask) {
  CliffordNumber x(n);
  if (mask >= x.c_.size()) throw std::invalid_argument("blade mask out of range");
  x.c_[mask] = 1.0;
  return x;
}

bool CliffordNumber::is_zero() const {
  for (double v : c_)
    if (v != 0.0) return false;
  return true;
}

CliffordNumber& CliffordNumber::operator+=(const CliffordNumber& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("dimension mismatch");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += rhs.c_[k];
  return *this;
}

CliffordNumber& CliffordNumber::operator-=(const CliffordNumber& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("dimension mismatch");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= rhs.c_[k];
  return *this;
}

CliffordNumber& CliffordNumber::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

double CliffordNumber::norm() const {
  double s = 0.0;
  for (double v : c_) s += v * v;
  return std::sqrt(s);
}

double CliffordNumber::log_norm() const {
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::fabs(v));
  if (m == 0.0) return -std::numeric_limits<double>::infinity();
  double s = 0.0;
  for (double v : c_) {
    const double q = v / m;
    s += q * q;
  }
  return std::log(m) + 0.5 * std::log(s);
}

int blade_product_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
  swaps += std::popcount(a & b);  // each shared index contributes e_i^2 = -1
  return (swaps & 1) ? -1 : 1;
}

CliffordNumber clifford_mul(const CliffordNumber& a, const CliffordNumber& b) {
  if (a.n() != b.n()) throw std::invalid_argument("dimension mismatch");
  CliffordNumber out(a.n());
  const std::size_t m = a.size();
  for (std::size_t i = 0; i < m; ++i) {
    const double av = a[i];
    if (av == 0.0) continue;
    for (std::size_t k = 0; k < m; ++k) {
      const double bv = b[k];
      if (bv == 0.0) continue;
      const int sign = blade_product_sign(static_cast<unsigned>(i),
                                          static_cast<unsigned>(k));
      out[i ^ k] += sign * av * bv;
    }
  }
  return out;
}

ImaginaryUnit::ImaginaryUnit(std::vector<double> components) : v_(std::move(components)) {
  require_dim(static_cast<int>(v_.size()));
  if (v_.empty()) throw std::invalid_argument("imaginary unit needs n >= 1");
  double s = 0.0;
  for (double x : v_) s += x * x;
  const double len = std::sqrt(s);
  if (std::fabs(len - 1.0) > 1e-9) throw std::invalid_argument("direction is not unit length");
  for (double& x : v_) x /= len;
}

ImaginaryUnit ImaginaryUnit::axis(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("axis index out of range");
  std::vector<double> v(static_cast<std::size_t>(n), 0.0);
  v[static_cast<std::size_t>(i - 1)] = 1.0;
  return ImaginaryUnit(std::move(v));
}

CliffordNumber ImaginaryUnit::as_clifford() const {
  CliffordNumber x(n());
  for (std::size_t i = 0; i < v_.size(); ++i) x[std::size_t{1} << i] = v_[i];
  return x;
}

ImaginaryUnit ImaginaryUnit::negated() const {
  std::vector<double> v = v_;
  for (double& x : v) x = -x;
  return ImaginaryUnit(std::move(v));
}

Paravector::Paravector(double scalar, std::vector<double> vec)
    : t_(scalar), v_(std::move(vec)) {
  require_dim(static_cast<int>(v_.size()));
}

Paravector Paravector::real(int n, double x0) {
  return Paravector(x0, std::vector<double>(static_cast<std::size_t>(n), 0.0));
}

Paravector Paravector::from_slice(double u, double v, const ImaginaryUnit& j) {
  if (v < 0.0) throw std::invalid_argument("slice coordinate v must be >= 0");
  std::vector<double> vec = j.components();
  for (double& x : vec) x *= v;
  return Paravector(u, std::move(vec));
}

Paravector Paravector::conjugate() const {
  std::vector<double> v = v_;
  for (double& x : v) x = -x;
  return Paravector(t_, std::move(v));
}

double Paravector::vector_norm() const {
  double s = 0.0;
  for (double x : v_) s += x * x;
  return std::sqrt(s);
}

double Paravector::norm() const {
  const double vn = vector_norm();
  return std::sqrt(t_ * t_ + vn * vn);
}

Paravector Paravector::inverse() const {
  const double n2 = t_ * t_ + vector_norm() * vector_norm();
  if (n2 == 0.0) throw std::domain_error("zero paravector has no inverse");
  std::vector<double> v = v_;
  for (double& x : v) x = -x / n2;
  Paravector inv(t_ / n2, std::move(v));
  const CliffordNumber check = clifford_mul(as_clifford(), inv.as_clifford());
  CliffordNumber one = CliffordNumber::scalar(n(), 1.0);
  if ((check - one).norm() > 1e-12 * (1.0 + check.norm())) {
    throw std::logic_error("paravector inverse failed the multiply-back check");
  }
  return inv;
}

CliffordNumber Paravector::as_clifford() const {
  CliffordNumber x(n());
  x[0] = t_;
  for (std::size_t i = 0; i < v_.size(); ++i) x[std::size_t{1} << i] = v_[i];
  return x;
}

Paravector::Slice Paravector::decompose() const {
  const double vn = vector_norm();
  if (vn == 0.0) {
    return Slice{t_, 0.0, ImaginaryUnit::axis(n(), 1)};
  }
  std::vector<double> dir = v_;
  for (double& x : dir) x /= vn;
  return Slice{t_, vn, ImaginaryUnit(std::move(dir))};
}

std::vector<ImaginaryUnit> sphere_sample(int n, int count, std::uint64_t seed) {
  require_dim(n);
  if (n < 1) throw std::invalid_argument("sphere needs n >= 1");
  if (count < 1) throw std::invalid_argument("count must be positive");
  std::vector<ImaginaryUnit> out;
  if (n == 1) {
    out.push_back(ImaginaryUnit::axis(1, 1));
    out.push_back(ImaginaryUnit::axis(1, 1).negated());
    return out;
  }
  for (int i = 1; i <= n && static_cast<int>(out.size()) < count; ++i) {
    out.push_back(ImaginaryUnit::axis(n, i));
    if (static_cast<int>(out.size()) < count)
      out.push_back(ImaginaryUnit::axis(n, i).negated());
  }
  Rng rng(seed);
  while (static_cast<int>(out.size()) < count) {
    std::vector<double> v(static_cast<std::size_t>(n));
    double s = 0.0;
    for (double& x : v) {
      x = rng.gaussian();
      s += x * x;
    }
    if (s < 1e-12) continue;
    const double len = std::sqrt(s);
    for (double& x : v) x /= len;
    out.push_back(ImaginaryUnit(std::move(v)));
  }
  return out;
}

}  // namespace sliceforge
