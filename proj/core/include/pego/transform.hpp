#pragma once

#include <vector>

#include "pego/halfline.hpp"
#include "pego/types.hpp"

namespace pego {

/// Values of L{f} along the vertical line Re z = x, on a symmetric y-grid.
struct SpectrumSlice {
  Order order;
  FrequencyGrid nodes;
  std::vector<Complex> values;  // index k = 0..2K, y = nodes.y(k)
  double tail_bound = 0.0;      // bound on int_{|y|>y_max} |L{f}|^2 dy

  double y(int index) const { return nodes.y(index); }
};

/// L{f}(x + i y_k) by the midpoint rule. On the DFT-matched grid the sum is
/// evaluated with one FFT of the weighted samples (algebraically identical);
/// otherwise node-by-node summation.
SpectrumSlice laplace_line(const HalfLineFunction& f, Order order, const TimeGrid& tgrid, const FrequencyGrid& ygrid);

/// Reference node-by-node evaluation, same midpoint sum as laplace_line.
Complex laplace_at(const HalfLineFunction& f, Complex z, const TimeGrid& tgrid);

/// Fourier special case f^(y) = L{f}(2 pi i y).
Complex fourier(const HalfLineFunction& f, double y, const TimeGrid& tgrid);

struct PlancherelResult {
  double lhs;      // (1/2pi) sum |values|^2 dy + tail_bound/2pi
  double rhs;      // weighted_l2_norm_sq
  double rel_err;  // |lhs-rhs| / max(rhs, 1e-300)
  double predicted_rel_gap;  // error-model prediction (tail bound + Richardson time term)
};

PlancherelResult plancherel_check(const HalfLineFunction& f, Order order, const TimeGrid& tgrid,
                                  const FrequencyGrid& ygrid);

/// sup of |L{f}(x +- iy)| over the dyadic band [Y, 2Y] per checkpoint Y.
/// Bands are sampled at interior nodes with a band-adapted step and a
/// panel-exact oscillatory kernel, so high-frequency checkpoints do not
/// alias even when Y exceeds the default grid's Nyquist range.
std::vector<double> riemann_lebesgue_profile(const HalfLineFunction& f, Order order, const TimeGrid& tgrid,
                                             const std::vector<double>& y_checkpoints);

/// Half-line convolution (f * g)(t) = int_0^t f(s) g(t-s) ds, midpoint-rule
/// discrete convolution on the common grid; returns a sampled function.
HalfLineFunction convolve(const HalfLineFunction& f, const HalfLineFunction& g, const TimeGrid& grid);

struct ConvolutionTheoremResult {
  double max_abs_gap;  // max_k |L{f*g} - L{f} L{g}| over the frequency nodes
};

ConvolutionTheoremResult convolution_theorem_check(const HalfLineFunction& f, const HalfLineFunction& g, Order order,
                                                   const TimeGrid& tgrid, const FrequencyGrid& ygrid);

/// Truncated int e^{-xt} |f*g| dt; throws Invariant if it exceeds
/// ||f_x||_1 ||g_x||_1 beyond quadrature tolerance.
double l1_bound_of_convolution(const HalfLineFunction& f, const HalfLineFunction& g, Order order,
                               const TimeGrid& tgrid);

/// Spectral tail mass bound used for SpectrumSlice::tail_bound: closed-form
/// decay constants when available, else the band-sup heuristic.
double tail_mass_bound(const HalfLineFunction& f, Order order, double y_cut, const SpectrumSlice* computed = nullptr);

}  // namespace pego
