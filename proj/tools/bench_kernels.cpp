// Timing harness for the three hot kernels, each against its serial
// reference. The parallel max is bit-identical to the serial scan by
// construction; the blocked sum may differ from left-to-right rounding, so
// its gap is printed rather than asserted.
//
// Thread budget comes from SLICEFORGE_THREADS (or the OpenMP default).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "sliceforge/cauchy.hpp"
#include "sliceforge/growth.hpp"
#include "sliceforge/operators.hpp"
#include "sliceforge/parallel.hpp"
#include "sliceforge/rng.hpp"
#include "sliceforge/superosc.hpp"

namespace sf = sliceforge;

namespace {

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

template <class F>
double time_best_ms(int reps, F&& body) {
  double best = 1.0 / 0.0;
  for (int r = 0; r < reps; ++r) {
    const double t0 = now_ms();
    body();
    const double t1 = now_ms();
    if (t1 - t0 < best) best = t1 - t0;
  }
  return best;
}

void row(const char* name, double serial_ms, double parallel_ms,
         const char* note) {
  std::printf("%-22s serial %9.3f ms   parallel %9.3f ms   x%.2f   %s\n", name,
              serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, note);
}

sf::SliceSeries random_series(int n, long deg, std::uint64_t seed) {
  sf::Rng rng(seed);
  sf::SliceSeries f(n, deg);
  for (long l = 0; l <= deg; ++l) {
    sf::CliffordNumber a(n);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = rng.uniform(-1.0, 1.0);
    f.set_coeff(l, a);
  }
  return f;
}

}  // namespace

int main() {
  std::printf("thread budget: %d\n\n", sf::par::max_threads());
  const int reps = 3;

  // ring scan: weighted modulus maximum over log-spaced radii
  {
    const sf::SliceSeries f = random_series(3, 30, 11);
    const auto dirs = sf::sphere_sample(3, 8, 2026);
    const int radii = 400, angles = 16;
    auto value = [&](std::size_t i) {
      const double r =
          1e-3 * std::pow(50.0 / 1e-3, double(i) / double(radii - 1));
      double best = -1.0 / 0.0;
      for (const auto& j : dirs)
        for (int k = 0; k < angles; ++k) {
          const double th = 3.14159265358979323846 * k / angles;
          const double m =
              sf::evaluate_in_slice(f, r * std::cos(th), r * std::sin(th), j)
                  .norm();
          if (m > best) best = m;
        }
      return std::log(best) - 1.0 * r;  // sigma = 1, rho = 1 weight
    };
    sf::par::MaxResult sres{}, pres{};
    const double ts = time_best_ms(
        reps, [&] { sres = sf::par::max_over_serial(radii, value); });
    const double tp =
        time_best_ms(reps, [&] { pres = sf::par::max_over(radii, value); });
    row("ring-scan max", ts, tp,
        (sres.value == pres.value && sres.index == pres.index)
            ? "results identical"
            : "RESULT MISMATCH");
  }

  // scale inversion: bisection for phi on a dense parameter grid
  {
    const sf::ProximateOrder po = sf::normalize(
        sf::ProximateOrder::log_shift(1.0, 0.3, 7.389056098930650),
        7.389056098930650);
    const int pts = 20000;
    auto value = [&](std::size_t i) {
      const double t =
          1e-2 * std::pow(1e8, double(i) / double(pts - 1));
      return sf::phi(po, t) / t;  // any reduction touching every bisection
    };
    sf::par::MaxResult sres{}, pres{};
    const double ts = time_best_ms(
        reps, [&] { sres = sf::par::max_over_serial(pts, value); });
    const double tp =
        time_best_ms(reps, [&] { pres = sf::par::max_over(pts, value); });
    row("scale-inversion max", ts, tp,
        (sres.value == pres.value && sres.index == pres.index)
            ? "results identical"
            : "RESULT MISMATCH");
  }

  // contour sum: quadrature accumulation of kernel-weighted samples
  {
    const sf::SliceSeries f = random_series(3, 12, 7);
    const auto dirs = sf::sphere_sample(3, 4, 2026);
    const sf::ImaginaryUnit j = dirs.back();
    const int nodes = 8192;
    const sf::Paravector x(0.1, {0.2, 0.1, 0.0});
    auto term = [&](std::size_t k) {
      const double th = 2.0 * 3.14159265358979323846 * double(k) / nodes;
      const sf::Paravector s(1.5 * std::cos(th),
                             {1.5 * std::sin(th) * 1.0, 0.0, 0.0});
      return sf::clifford_mul(
          sf::cauchy_kernel(s, x),
          sf::evaluate_in_slice(f, 1.5 * std::cos(th), 1.5 * std::sin(th), j));
    };
    sf::CliffordNumber ssum(3), psum(3);
    const double ts = time_best_ms(reps, [&] {
      ssum = sf::par::accumulate_serial(nodes, sf::CliffordNumber(3), term);
    });
    const double tp = time_best_ms(reps, [&] {
      psum = sf::par::accumulate(nodes, sf::CliffordNumber(3), term);
    });
    char note[64];
    std::snprintf(note, sizeof note, "block-vs-serial gap %.2e",
                  (ssum - psum).norm());
    row("contour sum", ts, tp, note);
  }

  // end-to-end passes through the library entry points
  std::printf("\nend-to-end (current thread budget):\n");
  {
    const sf::SliceSeries f = random_series(3, 30, 11);
    const sf::GrowthParams gp(sf::ProximateOrder::constant(1.0), 1.0);
    const double t =
        time_best_ms(reps, [&] { (void)sf::norm_estimate(f, gp); });
    std::printf("  norm_estimate (deg 30, default grid)   %9.3f ms\n", t);
  }
  {
    std::vector<sf::SliceSeries> u;
    double c = 1.0;
    for (long l = 0; l <= 40; ++l) {
      sf::SliceSeries s(1, 0);
      s.set_coeff(0, sf::CliffordNumber::scalar(1, c));
      u.push_back(s);
      c *= 0.7 / double(l + 1);
    }
    const sf::InfOrderOperator P(u, sf::ProximateOrder::constant(1.0),
                                 sf::ProximateOrder::constant(1.0));
    const double t =
        time_best_ms(reps, [&] { (void)sf::certify_class_D(P); });
    std::printf("  certify_class_D (L = 40, 16x16 grid)   %9.3f ms\n", t);
  }
  {
    const double t = time_best_ms(reps, [&] {
      (void)sf::convergence_measure({40}, 2.0, 0.3, 1.0);
    });
    std::printf("  convergence_measure (n = 40)           %9.3f ms\n", t);
  }
  return 0;
}
