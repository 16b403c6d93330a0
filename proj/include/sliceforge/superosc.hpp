#pragma once

#include <vector>

#include "sliceforge/operators.hpp"

namespace sliceforge {

// One plane wave A e^{i k x} with amplitude in the e1 slice of R_1 (the
// scalar component is the real part, the e1 component the imaginary part).
struct WaveTerm {
  CliffordNumber amplitude;
  double frequency = 0.0;
};

// Finite superposition of unit-band plane waves. Built from the binomial
// datum whose frequencies all sit in [-1, 1] yet which converges, as
// n_param grows, to a wave oscillating at a_param > 1.
struct WaveCombo {
  std::vector<WaveTerm> terms;
  int n_param = 1;
  double a_param = 1.0;
};

// Term k carries weight C(n,k)((1+a)/2)^{n-k}((1-a)/2)^k at frequency
// 1 - 2k/n. Requires n >= 1 and a >= 1; a = 1 is the degenerate boundary
// (single surviving term e^{ix}), kept callable for tests.
WaveCombo build_Fn(int n, double a);

// Free Schroedinger evolution: (A, k) -> (A e^{-i k^2 t}, k). Frequencies
// are never touched; t = 0 is the identity, bit for bit.
WaveCombo evolve(const WaveCombo& w, double t);

// sum_k A_k e^{i k x} in plain double precision. Adequate for the small-n
// operator comparisons; the convergence measurement below does not use it
// because amplitudes near the binomial center dwarf the cancelled sum.
CliffordNumber wave_eval(const WaveCombo& w, double x);

// sum of the amplitudes: the value at x = 0 by construction
CliffordNumber wave_sum_amplitudes(const WaveCombo& w);

// Taylor coefficients through degree N: a_l = sum_k A_k (i k)^l / l!
SliceSeries to_taylor(const WaveCombo& w, long N);

// U = sum_{m=0}^{M} (it)^m/m! d^{2m}/dx^{2m} as a truncated coefficient
// operator (u_{2m} constant, odd entries zero), orders constant 1 on both
// sides.
InfOrderOperator evolution_operator(long M, double t);

// to_taylor(w, N) pushed through evolution_operator(M, t). Agrees with the
// closed-form evolve up to the truncation bound below plus roundoff.
SliceSeries evolve_via_operator(const WaveCombo& w, double t, long M, long N);

// Rigorous upper bound on max_{|x| <= x_max} |evolve_via_operator - closed
// form| from the two truncations: the degree-N Taylor tail pushed through
// the kept operator terms, plus the dropped m > M operator tail acting on
// the exact waves. Exponential tails are bounded by y^{J+1}/(J+1)! e^y.
double evolve_truncation_bound(const WaveCombo& w, double t, long M, long N,
                               double x_max = 5.0);

// Sample layout for the weighted sup: a dense real segment plus a coarser
// rectangle reaching y_max on either side of the axis.
struct ConvergenceGrid {
  double x_min = -5.0;
  double x_max = 5.0;
  double x_step = 0.01;      // real-axis spacing
  double rect_x_step = 0.1;  // rectangle spacing, real direction
  double y_max = 2.0;
  double y_step = 0.4;
  bool rectangle = true;
};

struct ConvergenceRow {
  int n = 0;
  double t = 0.0;
  double weight = 0.0;  // the B in e^{-B|z|}
  double d = 0.0;       // sup over the grid of |psi_n - limit| e^{-B|z|}
};

// d_n = max over the grid of |psi_n(z, t) - e^{i(a z - a^2 t)}| e^{-B|z|}.
// Everything through the difference runs in double-double arithmetic:
// the n = 80 superposition sums terms of size ~1e23 that cancel to O(1),
// which plain doubles cannot survive. One row per (n, weight) pair.
std::vector<ConvergenceRow> convergence_measure(
    const std::vector<int>& n_list, double a, double t,
    const std::vector<double>& weights, const ConvergenceGrid& grid = {});

std::vector<ConvergenceRow> convergence_measure(
    const std::vector<int>& n_list, double a, double t, double weight,
    const ConvergenceGrid& grid = {});

// Real-axis traces of psi_n and the limit wave, for plotting
struct PlotData {
  std::vector<double> x;
  std::vector<double> re_psi, im_psi;
  std::vector<double> re_limit, im_limit;
};

PlotData plane_wave_comparison(int n, double a, double t,
                               const ConvergenceGrid& grid = {});

}  // namespace sliceforge
