#include <doctest.h>

#include <cmath>

#include "sliceforge/superosc.hpp"

using namespace sliceforge;

TEST_SUITE("superosc") {

TEST_CASE("the two-term member is cos x + a e1 sin x") {
  const double a = 2.0;
  const WaveCombo w = build_Fn(1, a);
  REQUIRE(w.terms.size() == 2);
  CHECK(w.terms[0].frequency == 1.0);
  CHECK(w.terms[1].frequency == -1.0);
  CHECK(w.terms[0].amplitude[0] == doctest::Approx((1.0 + a) / 2).epsilon(1e-15));
  CHECK(w.terms[1].amplitude[0] == doctest::Approx((1.0 - a) / 2).epsilon(1e-15));
  for (double x : {-1.3, 0.0, 0.4, 2.7}) {
    const CliffordNumber v = wave_eval(w, x);
    CHECK(v[0] == doctest::Approx(std::cos(x)).epsilon(1e-13));
    CHECK(v[1] == doctest::Approx(a * std::sin(x)).epsilon(1e-13));
  }
}

TEST_CASE("frequencies stay inside the unit band") {
  for (int n : {1, 2, 7, 20}) {
    const WaveCombo w = build_Fn(n, 3.0);
    REQUIRE(w.terms.size() == static_cast<std::size_t>(n) + 1);
    for (const WaveTerm& term : w.terms) {
      CHECK(term.frequency <= 1.0);
      CHECK(term.frequency >= -1.0);
    }
  }
}

TEST_CASE("amplitudes sum to one at the origin") {
  for (int n : {1, 3, 8, 12}) {
    const CliffordNumber s = wave_sum_amplitudes(build_Fn(n, 2.5));
    CHECK(s[0] == doctest::Approx(1.0).epsilon(1e-10));
    for (std::size_t k = 1; k < s.size(); ++k) CHECK(std::fabs(s[k]) <= 1e-10);
  }
}

TEST_CASE("the boundary case is a single surviving wave") {
  const WaveCombo w = build_Fn(6, 1.0);
  CHECK(w.terms[0].amplitude[0] == doctest::Approx(1.0).epsilon(1e-15));
  for (std::size_t k = 1; k < w.terms.size(); ++k)
    CHECK(w.terms[k].amplitude.norm() == 0.0);
}

TEST_CASE("free evolution rotates amplitudes by the squared frequency") {
  const WaveCombo w = build_Fn(5, 2.0);
  const double t = 0.7;
  const WaveCombo wt = evolve(w, t);
  for (std::size_t k = 0; k < w.terms.size(); ++k) {
    CHECK(wt.terms[k].frequency == w.terms[k].frequency);
    const double f = w.terms[k].frequency;
    // amplitude picks up e^{-i f^2 t}; check via the scalar/e1 pair
    const double c = std::cos(f * f * t), s = std::sin(f * f * t);
    const double re = w.terms[k].amplitude[0], im = w.terms[k].amplitude[1];
    CHECK(wt.terms[k].amplitude[0] ==
          doctest::Approx(re * c + im * s).epsilon(1e-12));
    CHECK(wt.terms[k].amplitude[1] ==
          doctest::Approx(im * c - re * s).epsilon(1e-12));
  }
  // t = 0 is the identity
  const WaveCombo w0 = evolve(w, 0.0);
  for (std::size_t k = 0; k < w.terms.size(); ++k)
    CHECK((w0.terms[k].amplitude - w.terms[k].amplitude).norm() == 0.0);
}

TEST_CASE("the Taylor image matches direct evaluation") {
  const WaveCombo w = build_Fn(3, 2.0);
  const SliceSeries f = to_taylor(w, 60);
  for (double x : {-2.0, -0.3, 0.0, 1.1, 2.0}) {
    const CliffordNumber direct = wave_eval(w, x);
    const CliffordNumber series = evaluate(f, Paravector::real(f.n(), x));
    CHECK((direct - series).norm() <= 1e-10);
  }
}

TEST_CASE("the evolution operator agrees with the closed form") {
  const WaveCombo w = build_Fn(2, 2.0);
  const double t = 0.1;
  const SliceSeries via_op = evolve_via_operator(w, t, 40, 80);
  const WaveCombo closed = evolve(w, t);
  double worst = 0.0;
  for (double x = -5.0; x <= 5.0; x += 0.25) {
    const CliffordNumber lhs = evaluate(via_op, Paravector::real(via_op.n(), x));
    const CliffordNumber rhs = wave_eval(closed, x);
    worst = std::max(worst, (lhs - rhs).norm());
  }
  CHECK(worst <= 1e-8);
  // and the truncation certificate is comfortably under budget
  CHECK(evolve_truncation_bound(w, t, 40, 80, 5.0) <= 1e-10);
}

TEST_CASE("convergence rows carry pinned reference values") {
  const auto rows = convergence_measure({5, 40}, 2.0, 0.3, {1.0});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].n == 5);
  CHECK(rows[0].d == doctest::Approx(6.24327444095).epsilon(1e-9));
  CHECK(rows[1].d == doctest::Approx(1.90224025357).epsilon(1e-9));
  CHECK(rows[1].d < rows[0].d);
  // heavier damping weights only shrink the measure
  const auto damped = convergence_measure({5}, 2.0, 0.3, {1.0, 4.0});
  REQUIRE(damped.size() == 2);
  CHECK(damped[1].d <= damped[0].d);
}

TEST_CASE("the boundary case evolves without any gap") {
  const auto rows = convergence_measure({8}, 1.0, 0.3, {1.0});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].d <= 1e-20);
}

TEST_CASE("plot traces share the grid and end cleanly") {
  ConvergenceGrid grid;
  grid.rectangle = false;
  const PlotData p = plane_wave_comparison(4, 2.0, 0.2, grid);
  const std::size_t m = p.x.size();
  REQUIRE(m == 1001);
  CHECK(p.re_psi.size() == m);
  CHECK(p.im_psi.size() == m);
  CHECK(p.re_limit.size() == m);
  CHECK(p.im_limit.size() == m);
  CHECK(p.x.front() == doctest::Approx(-5.0).epsilon(1e-12));
  CHECK(p.x.back() == doctest::Approx(5.0).epsilon(1e-12));
  // the limit trace is the plane wave itself
  for (std::size_t i = 0; i < m; i += 100) {
    const double phase = 2.0 * p.x[i] - 4.0 * 0.2;
    CHECK(p.re_limit[i] == doctest::Approx(std::cos(phase)).epsilon(1e-12));
    CHECK(p.im_limit[i] == doctest::Approx(std::sin(phase)).epsilon(1e-12));
  }
}

}  // TEST_SUITE
