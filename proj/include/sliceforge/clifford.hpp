#pragma once

#include <cstdint>
#include <vector>

namespace sliceforge {

// Element of the real Clifford algebra over n anticommuting generators with
// e_i^2 = -1, stored dense: component k multiplies the basis blade e_A where
// the subset A is the bitmask k (bit i-1 <-> e_i, indices inside a blade in
// increasing order). n is capped at 8 (256 components).
class CliffordNumber {
 public:
  CliffordNumber() : n_(0), c_(1, 0.0) {}
  explicit CliffordNumber(int n);
  static CliffordNumber scalar(int n, double value);
  static CliffordNumber basis(int n, unsigned mask);

  int n() const { return n_; }
  std::size_t size() const { return c_.size(); }
  double operator[](std::size_t k) const { return c_[k]; }
  double& operator[](std::size_t k) { return c_[k]; }
  const std::vector<double>& components() const { return c_; }

  double scalar_part() const { return c_[0]; }
  bool is_zero() const;

  CliffordNumber& operator+=(const CliffordNumber& rhs);
  CliffordNumber& operator-=(const CliffordNumber& rhs);
  CliffordNumber& operator*=(double s);

  friend CliffordNumber operator+(CliffordNumber a, const CliffordNumber& b) {
    return a += b;
  }
  friend CliffordNumber operator-(CliffordNumber a, const CliffordNumber& b) {
    return a -= b;
  }
  friend CliffordNumber operator*(CliffordNumber a, double s) { return a *= s; }
  friend CliffordNumber operator*(double s, CliffordNumber a) { return a *= s; }

  // Euclidean norm of the component vector
  double norm() const;

  // ln norm(), finite wherever any component is nonzero: squaring components
  // near 1e-160 underflows norm() to 0, this does not. -inf for zero.
  double log_norm() const;

 private:
  int n_;
  std::vector<double> c_;
};

// Sign of e_A * e_B: transpositions to merge the sorted index lists, then a
// factor -1 for every shared index (e_i^2 = -1). Result blade is A xor B.
int blade_product_sign(unsigned a, unsigned b);

// Geometric product. Both operands must share the same n.
CliffordNumber clifford_mul(const CliffordNumber& a, const CliffordNumber& b);

// Unit 1-vector j (a point of the sphere S); j*j = -1.
class ImaginaryUnit {
 public:
  // components must have norm 1 within 1e-9; they are renormalized exactly
  explicit ImaginaryUnit(std::vector<double> components);
  static ImaginaryUnit axis(int n, int i);  // e_i, 1-based

  int n() const { return static_cast<int>(v_.size()); }
  const std::vector<double>& components() const { return v_; }
  CliffordNumber as_clifford() const;
  ImaginaryUnit negated() const;

 private:
  std::vector<double> v_;
};

// x = x0 + sum x_i e_i in R^{n+1}
class Paravector {
 public:
  Paravector(double scalar, std::vector<double> vec);
  static Paravector real(int n, double x0);
  static Paravector from_slice(double u, double v, const ImaginaryUnit& j);

  int n() const { return static_cast<int>(v_.size()); }
  double scalar_part() const { return t_; }
  const std::vector<double>& vector_part() const { return v_; }

  Paravector conjugate() const;  // x0 - vector part
  double norm() const;           // sqrt(x0^2 + |vec|^2)
  double vector_norm() const;

  // conj(x)/|x|^2; throws std::domain_error at 0. The product x * inverse(x)
  // is checked against 1 to machine tolerance.
  Paravector inverse() const;

  CliffordNumber as_clifford() const;

  struct Slice {
    double u;         // real part
    double v;         // >= 0
    ImaginaryUnit j;  // direction; e_1 when the vector part vanishes
  };
  Slice decompose() const;

 private:
  double t_;
  std::vector<double> v_;
};

// Deterministic quasi-uniform sphere points: the 2n signed axis units first,
// then seeded Gaussian directions normalized to the sphere. Same seed, same
// list. For n = 1 the sphere is {e_1, -e_1} regardless of count.
std::vector<ImaginaryUnit> sphere_sample(int n, int count, std::uint64_t seed);

}  // namespace sliceforge
