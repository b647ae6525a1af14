#include "pego/transform.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "detail_fft.hpp"

namespace pego {

namespace {

bool fast_path_matches(const TimeGrid& tgrid, const FrequencyGrid& ygrid) {
  const double product = ygrid.dy * tgrid.n * tgrid.dt;
  return std::abs(product - 2.0 * M_PI) <= 1e-9 * 2.0 * M_PI && 2 * ygrid.half_count <= tgrid.n;
}

void require_pego(const HalfLineFunction& f, Order order, const TimeGrid& grid) {
  try {
    (void)verify_pego(f, order, grid);
  } catch (const Error& e) {
    std::ostringstream msg;
    msg << "Laplace-Pego verification rejected the input: " << e.what();
    throw_error(ErrorCode::Precondition, msg.str());
  }
}

double trapezoid_weight(int index, int last) { return (index == 0 || index == last) ? 0.5 : 1.0; }

}  // namespace

double tail_mass_bound(const HalfLineFunction& f, Order order, double y_cut, const SpectrumSlice* computed) {
  const double closed = f.spectral_tail_mass_bound(order, y_cut);
  if (std::isfinite(closed)) return closed;
  if (computed != nullptr && !computed->values.empty()) {
    // Heuristic for kinds without closed-form decay: 2 * (last band sup)^2 * y_max.
    const int last = computed->nodes.node_count() - 1;
    double band_sup = 0.0;
    const double y_lo = 0.75 * computed->nodes.y_max();
    for (int k = 0; k <= last; ++k) {
      if (std::abs(computed->y(k)) >= y_lo) band_sup = std::max(band_sup, std::abs(computed->values[k]));
    }
    return 2.0 * band_sup * band_sup * computed->nodes.y_max();
  }
  return closed;  // +inf: caller decides
}

Complex laplace_at(const HalfLineFunction& f, Complex z, const TimeGrid& tgrid) {
  // Midpoint sum with a phasor recurrence, refreshed periodically.
  const Complex step = std::exp(-z * tgrid.dt);
  Complex phase = std::exp(-z * (0.5 * tgrid.dt));
  Complex acc(0.0, 0.0);
  for (int j = 0; j < tgrid.n; ++j) {
    if ((j & 1023) == 0) phase = std::exp(-z * tgrid.node(j));
    acc += f(tgrid.node(j)) * phase;
    phase *= step;
  }
  return acc * tgrid.dt;
}

SpectrumSlice laplace_line(const HalfLineFunction& f, Order order, const TimeGrid& tgrid, const FrequencyGrid& ygrid) {
  require_pego(f, order, tgrid);
  const auto w = sample_weighted(f, order, tgrid);
  SpectrumSlice slice;
  slice.order = order;
  slice.nodes = ygrid;
  const int count = ygrid.node_count();
  slice.values.resize(count);

  if (fast_path_matches(tgrid, ygrid)) {
    const auto spectrum = detail::dft(w);
    const int n = tgrid.n;
    for (int i = 0; i < count; ++i) {
      const int k = i - ygrid.half_count;
      const int idx = ((k % n) + n) % n;
      // Midpoint-node phase e^{-i pi k / n}: nodes sit at (j + 1/2) dt.
      const double theta = -M_PI * static_cast<double>(k) / n;
      slice.values[i] = tgrid.dt * Complex(std::cos(theta), std::sin(theta)) * spectrum[idx];
    }
  } else {
    for (int i = 0; i < count; ++i) {
      const Complex z(0.0, ygrid.y(i));
      const Complex step = std::exp(-z * tgrid.dt);
      Complex phase = std::exp(-z * (0.5 * tgrid.dt));
      Complex acc(0.0, 0.0);
      for (int j = 0; j < tgrid.n; ++j) {
        if ((j & 1023) == 0) phase = std::exp(-z * tgrid.node(j));
        acc += w[j] * phase;
        phase *= step;
      }
      slice.values[i] = acc * tgrid.dt;
    }
  }

  const double bound = tail_mass_bound(f, order, ygrid.y_max(), &slice);
  slice.tail_bound = std::isfinite(bound) ? bound : 0.0;
  return slice;
}

Complex fourier(const HalfLineFunction& f, double y, const TimeGrid& tgrid) {
  require_pego(f, Order(0.0), tgrid);
  return laplace_at(f, Complex(0.0, 2.0 * M_PI * y), tgrid);
}

PlancherelResult plancherel_check(const HalfLineFunction& f, Order order, const TimeGrid& tgrid,
                                  const FrequencyGrid& ygrid) {
  const auto slice = laplace_line(f, order, tgrid, ygrid);
  const int last = ygrid.node_count() - 1;
  double quad = 0.0;
  for (int k = 0; k <= last; ++k) quad += trapezoid_weight(k, last) * std::norm(slice.values[k]);
  quad *= ygrid.dy;

  PlancherelResult r;
  r.lhs = (quad + slice.tail_bound) / (2.0 * M_PI);
  r.rhs = weighted_l2_norm_sq(f, order, tgrid);
  r.rel_err = std::abs(r.lhs - r.rhs) / std::max(r.rhs, 1e-300);

  // Error model: the y-tail bound dominates; time discretization enters via
  // a Richardson estimate against the doubled step.
  const TimeGrid coarse(2.0 * tgrid.dt, tgrid.t_max);
  const double rhs_coarse = weighted_l2_norm_sq(f, order, coarse);
  const double time_term = std::abs(r.rhs - rhs_coarse) / 3.0;
  r.predicted_rel_gap = (slice.tail_bound / (2.0 * M_PI) + time_term) / std::max(r.rhs, 1e-300);
  return r;
}

std::vector<double> riemann_lebesgue_profile(const HalfLineFunction& f, Order order, const TimeGrid& tgrid,
                                             const std::vector<double>& y_checkpoints) {
  require_pego(f, order, tgrid);
  for (std::size_t i = 0; i < y_checkpoints.size(); ++i) {
    if (!(y_checkpoints[i] > 0.0) || (i > 0 && y_checkpoints[i] <= y_checkpoints[i - 1]))
      throw_error(ErrorCode::Config, "checkpoints must be positive and increasing");
  }

  const auto sup_hint = f.support();
  const double t_lo = std::max(0.0, sup_hint.lo);
  const double t_hi = std::min(tgrid.t_max, sup_hint.hi);
  std::vector<double> out;
  out.reserve(y_checkpoints.size());

  constexpr int kBandNodes = 256;
  constexpr int kMaxPanels = 1 << 20;

  for (double y_lo : y_checkpoints) {
    const double y_hi = 2.0 * y_lo;
    double dtb = std::min(tgrid.dt, 0.45 / y_hi);
    int n = static_cast<int>(std::ceil((t_hi - t_lo) / dtb));
    if (n > kMaxPanels) n = kMaxPanels;
    if (n < 1) n = 1;
    dtb = (t_hi - t_lo) / n;

    std::vector<Complex> samples(n);
    for (int j = 0; j < n; ++j) samples[j] = f(t_lo + (j + 0.5) * dtb);

    double band_sup = 0.0;
    for (int i = 0; i < kBandNodes; ++i) {
      const double y = y_lo + (i + 1.0) * (y_hi - y_lo) / (kBandNodes + 1.0);  // interior nodes
      for (double sign : {1.0, -1.0}) {
        const Complex z(order.x, sign * y);
        // Panel-exact kernel: sum f(mid_j) int_{panel_j} e^{-zt} dt. Exact for
        // piecewise-constant f (indicators), alias-free for y dt >> 1.
        const Complex kernel = (1.0 - std::exp(-z * dtb)) / z;
        const Complex step = std::exp(-z * dtb);
        Complex phase = std::exp(-z * t_lo);
        Complex acc(0.0, 0.0);
        for (int j = 0; j < n; ++j) {
          if ((j & 1023) == 0) phase = std::exp(-z * (t_lo + j * dtb));
          acc += samples[j] * phase;
          phase *= step;
        }
        band_sup = std::max(band_sup, std::abs(acc * kernel));
      }
    }
    out.push_back(band_sup);
  }
  return out;
}

namespace {

void require_grid_consistency(const HalfLineFunction& f, const TimeGrid& grid) {
  if (const auto* s = std::get_if<HalfLineFunction::Sampled>(&f.node())) {
    if (!s->grid.same_as(grid))
      throw_error(ErrorCode::Config, "sampled input lives on a different grid than the convolution grid");
  }
}

}  // namespace

HalfLineFunction convolve(const HalfLineFunction& f, const HalfLineFunction& g, const TimeGrid& grid) {
  require_grid_consistency(f, grid);
  require_grid_consistency(g, grid);
  const auto wf = sample_weighted(f, Order(0.0), grid);
  const auto wg = sample_weighted(g, Order(0.0), grid);
  const auto full = detail::convolve_linear(wf, wg);
  // full[r] * dt approximates (f*g)((r+1) dt) by the midpoint rule; the value
  // at the midpoint node t_m is the mean of the two adjacent edge values.
  std::vector<Complex> mid(grid.n);
  for (int m = 0; m < grid.n; ++m) {
    const Complex prev = (m > 0) ? full[m - 1] : Complex(0.0, 0.0);
    mid[m] = 0.5 * grid.dt * (prev + full[m]);
  }
  return HalfLineFunction::sampled(grid, std::move(mid));
}

ConvolutionTheoremResult convolution_theorem_check(const HalfLineFunction& f, const HalfLineFunction& g, Order order,
                                                   const TimeGrid& tgrid, const FrequencyGrid& ygrid) {
  require_pego(f, order, tgrid);
  require_pego(g, order, tgrid);
  const auto conv = convolve(f, g, tgrid);
  const auto slice_f = laplace_line(f, order, tgrid, ygrid);
  const auto slice_g = laplace_line(g, order, tgrid, ygrid);
  const auto slice_c = laplace_line(conv, order, tgrid, ygrid);
  double gap = 0.0;
  for (int k = 0; k < ygrid.node_count(); ++k)
    gap = std::max(gap, std::abs(slice_c.values[k] - slice_f.values[k] * slice_g.values[k]));
  return {gap};
}

double l1_bound_of_convolution(const HalfLineFunction& f, const HalfLineFunction& g, Order order,
                               const TimeGrid& tgrid) {
  const auto nf = verify_pego(f, order, tgrid);
  const auto ng = verify_pego(g, order, tgrid);
  const auto conv = convolve(f, g, tgrid);
  const auto wc = sample_weighted(conv, order, tgrid);
  double value = 0.0;
  for (const Complex& v : wc) value += std::abs(v);
  value *= tgrid.dt;
  const double bound = nf.l1 * ng.l1;
  const double tol = 1e-5 * (1.0 + bound);
  if (value > bound + tol) {
    std::ostringstream msg;
    msg << "convolution L1 bound violated: " << value << " > " << bound;
    throw_error(ErrorCode::Invariant, msg.str());
  }
  return value;
}

}  // namespace pego
