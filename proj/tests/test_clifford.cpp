#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sliceforge/clifford.hpp"
#include "sliceforge/rng.hpp"

using namespace sliceforge;

namespace {

CliffordNumber basis_vec(int n, int i) {
  return CliffordNumber::basis(n, 1u << (i - 1));
}

CliffordNumber random_clifford(Rng& rng, int n) {
  CliffordNumber a(n);
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = rng.uniform(-1.0, 1.0);
  return a;
}

}  // namespace

TEST_SUITE("clifford") {

TEST_CASE("generators square to minus one and anticommute") {
  for (int n = 1; n <= 4; ++n) {
    for (int i = 1; i <= n; ++i) {
      const CliffordNumber ei = basis_vec(n, i);
      const CliffordNumber sq = clifford_mul(ei, ei);
      CHECK(sq[0] == -1.0);
      for (std::size_t k = 1; k < sq.size(); ++k) CHECK(sq[k] == 0.0);
      for (int j = i + 1; j <= n; ++j) {
        const CliffordNumber ej = basis_vec(n, j);
        const CliffordNumber ab = clifford_mul(ei, ej);
        const CliffordNumber ba = clifford_mul(ej, ei);
        for (std::size_t k = 0; k < ab.size(); ++k) CHECK(ab[k] == -ba[k]);
      }
    }
  }
}

TEST_CASE("n = 2 multiplication table is the quaternions") {
  // e1, e2, e12 behave as i, j, k
  const int n = 2;
  const CliffordNumber e1 = CliffordNumber::basis(n, 1);
  const CliffordNumber e2 = CliffordNumber::basis(n, 2);
  const CliffordNumber e12 = CliffordNumber::basis(n, 3);
  CHECK(clifford_mul(e1, e2)[3] == 1.0);
  CHECK(clifford_mul(e2, e1)[3] == -1.0);
  CHECK(clifford_mul(e12, e12)[0] == -1.0);
  CHECK(clifford_mul(e1, e12)[2] == -1.0);  // e1 e1 e2 = -e2
  CHECK(clifford_mul(e12, e1)[2] == 1.0);   // e1 e2 e1 = +e2
}

TEST_CASE("product is associative") {
  Rng rng(11);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const CliffordNumber a = random_clifford(rng, n);
      const CliffordNumber b = random_clifford(rng, n);
      const CliffordNumber c = random_clifford(rng, n);
      const CliffordNumber lhs = clifford_mul(clifford_mul(a, b), c);
      const CliffordNumber rhs = clifford_mul(a, clifford_mul(b, c));
      CHECK((lhs - rhs).norm() <= 1e-12 * (1.0 + lhs.norm()));
    }
  }
}

TEST_CASE("product norm obeys the dimensional bound") {
  Rng rng(12);
  for (int n = 1; n <= 4; ++n) {
    const double cap = std::pow(2.0, 0.5 * n);
    for (int trial = 0; trial < 100; ++trial) {
      const CliffordNumber a = random_clifford(rng, n);
      const CliffordNumber b = random_clifford(rng, n);
      CHECK(clifford_mul(a, b).norm() <=
            cap * a.norm() * b.norm() * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("log_norm stays finite where norm underflows") {
  CliffordNumber a(2);
  a[0] = 1e-200;
  a[3] = 3e-201;
  CHECK(a.norm() == 0.0);  // the squares underflow
  const double expected = std::log(1e-200) + 0.5 * std::log(1.0 + 0.09);
  CHECK(a.log_norm() == doctest::Approx(expected).epsilon(1e-12));

  CliffordNumber b(2);
  b[1] = -2.5;
  CHECK(b.log_norm() == doctest::Approx(std::log(2.5)).epsilon(1e-14));
  CHECK(CliffordNumber(3).log_norm() ==
        -std::numeric_limits<double>::infinity());
}

TEST_CASE("paravector decomposition is canonical") {
  Rng rng(13);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<double> vec(static_cast<std::size_t>(n));
      for (double& x : vec) x = rng.uniform(-2.0, 2.0);
      const Paravector x(rng.uniform(-2.0, 2.0), vec);
      const auto s = x.decompose();
      CHECK(s.v >= 0.0);
      const Paravector back = Paravector::from_slice(s.u, s.v, s.j);
      CHECK(std::fabs(back.scalar_part() - x.scalar_part()) <= 1e-13);
      for (int i = 0; i < n; ++i)
        CHECK(std::fabs(back.vector_part()[static_cast<std::size_t>(i)] -
                        x.vector_part()[static_cast<std::size_t>(i)]) <=
              1e-13);
    }
  }
  // a real point decomposes onto the first axis with v = 0
  const auto s0 = Paravector::real(3, 1.5).decompose();
  CHECK(s0.u == 1.5);
  CHECK(s0.v == 0.0);
  CHECK(s0.j.components()[0] == 1.0);
}

TEST_CASE("from_slice rejects negative v") {
  CHECK_THROWS_AS(Paravector::from_slice(0.0, -0.1, ImaginaryUnit::axis(2, 1)),
                  std::invalid_argument);
}

TEST_CASE("conjugation negates the vector part only") {
  const Paravector x(2.0, {1.0, -3.0});
  const Paravector xc = x.conjugate();
  CHECK(xc.scalar_part() == 2.0);
  CHECK(xc.vector_part()[0] == -1.0);
  CHECK(xc.vector_part()[1] == 3.0);
  CHECK(xc.norm() == x.norm());
}

TEST_CASE("sphere sample leads with the signed axes") {
  const auto dirs = sphere_sample(3, 10, 99);
  REQUIRE(dirs.size() == 10);
  for (const ImaginaryUnit& j : dirs) {
    double s = 0.0;
    for (double c : j.components()) s += c * c;
    CHECK(std::sqrt(s) == doctest::Approx(1.0).epsilon(1e-12));
  }
  // first 2n entries are +e_i then -e_i
  for (int i = 0; i < 3; ++i) {
    CHECK(dirs[static_cast<std::size_t>(2 * i)]
              .components()[static_cast<std::size_t>(i)] == 1.0);
    CHECK(dirs[static_cast<std::size_t>(2 * i + 1)]
              .components()[static_cast<std::size_t>(i)] == -1.0);
  }
  // n = 1 has exactly two unit directions, whatever count was asked for
  CHECK(sphere_sample(1, 64, 5).size() == 2);
  // same seed, same sample
  const auto again = sphere_sample(3, 10, 99);
  for (std::size_t k = 0; k < dirs.size(); ++k)
    CHECK(dirs[k].components() == again[k].components());
}

}  // TEST_SUITE
