#pragma once

// Test-only oracles, independent of the library's quadrature path: an
// adaptive Simpson integrator over analytic integrands plus the closed-form
// transforms used to freeze expected values.

#include <cmath>
#include <complex>
#include <functional>

namespace oracle {

using Complex = std::complex<double>;

namespace detail {

inline double simpson_panel(const std::function<double(double)>& f, double a, double b, double fa, double fm,
                            double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive(const std::function<double(double)>& f, double a, double b, double eps, int depth, double fa,
                       double fm, double fb, double whole) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson_panel(f, a, m, fa, flm, fm);
  const double right = simpson_panel(f, m, b, fm, frm, fb);
  const double diff = left + right - whole;
  if (std::abs(diff) <= 15.0 * eps || depth <= 0) return left + right + diff / 15.0;
  return adaptive(f, a, m, 0.5 * eps, depth - 1, fa, flm, fm, left) +
         adaptive(f, m, b, 0.5 * eps, depth - 1, fm, frm, fb, right);
}

}  // namespace detail

inline double integrate(const std::function<double(double)>& f, double a, double b, double eps = 1e-12) {
  // Fixed pre-split so sharply localized integrands cannot hide from the
  // initial sampling, then adaptive Simpson per panel.
  constexpr int kPanels = 32;
  const double h = (b - a) / kPanels;
  double total = 0.0;
  for (int i = 0; i < kPanels; ++i) {
    const double lo = a + i * h;
    const double hi = lo + h;
    const double fa = f(lo), fb = f(hi), fm = f(0.5 * (lo + hi));
    total += detail::adaptive(f, lo, hi, eps / kPanels, 44, fa, fm, fb, detail::simpson_panel(f, lo, hi, fa, fm, fb));
  }
  return total;
}

inline Complex laplace_exponential(double a, Complex z) { return 1.0 / (z + a); }

inline Complex laplace_indicator(double a, double b, Complex z) {
  if (std::abs(z) < 1e-14) return Complex(b - a, 0.0);
  return (std::exp(-z * a) - std::exp(-z * b)) / z;
}

}  // namespace oracle
