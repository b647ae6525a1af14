#pragma once

#include <vector>

#include "pego/halfline.hpp"
#include "pego/transform.hpp"
#include "pego/types.hpp"

namespace pego {

enum class Criterion { ExpEquivanish, LaplaceEquicont, ExpEquicont, LaplaceEquivanish, L2Bound };

const char* criterion_name(Criterion c) noexcept;

struct CriterionScales {
  double eps = 0.0;
  double delta = 0.0;  // unused slot left at 0
  double T = 0.0;
};

struct CriterionReport {
  Criterion criterion;
  CriterionScales scales;
  std::vector<double> per_member;
  double supremum = 0.0;     // max(per_member)
  bool pass = false;         // supremum < scales.eps
  double error_budget = 0.0; // additive sound bound (y-tails etc.) already inside per_member
};

/// Per-criterion thresholds derived from one base tolerance. All are
/// homogeneous under eps -> |c|^2 eps so that scaling every member by c and
/// rescaling eps leaves verdicts unchanged.
struct Thresholds {
  double eps_base = 1e-2;

  double exp_equivanish() const { return eps_base; }
  double laplace_equicont() const { return eps_base; }
  double exp_equicont() const { return 1.5 * std::sqrt(eps_base); }         // root-scale criterion
  double laplace_equivanish() const { return 2.0 * M_PI * eps_base; }       // no 1/2pi in the tail integral
  double net_eps() const { return 1.5 * std::sqrt(eps_base); }
  double of(Criterion c) const;
};

/// Default scale ladders swept by diagnose; chosen so the labeled catalog
/// families separate at the default tolerance.
struct SweepPlan {
  std::vector<double> exp_equivanish_T{1.0, 2.0, 4.0, 8.0};
  std::vector<double> laplace_equicont_delta{0.32, 0.16, 0.08, 0.04, 0.02};
  std::vector<double> exp_equicont_delta{0.32, 0.16, 0.08, 0.04, 0.02, 0.01};
  std::vector<double> laplace_equivanish_T{12.5, 25.0, 50.0, 100.0};
  int n_shifts = 8;

  const std::vector<double>& scales_for(Criterion c) const;
};

/// Tail mass beyond T:  per member  int_T^{t_max} e^{-2xt} |f|^2 dt.
CriterionReport exp_equivanish_tail(const PegoFamily& family, double T, double eps, int threads = 1);

/// Real-part modulus: (1/2pi) int |L{f}(x+delta+iy) - L{f}(x+iy)|^2 dy over
/// the frequency grid, plus the beyond-grid tail bound.
CriterionReport laplace_equicont_modulus(const PegoFamily& family, double delta, const FrequencyGrid& ygrid,
                                         double eps, int threads = 1);

/// Shift modulus: max over sampled grid-aligned shifts s in (0, delta] of
/// ( int e^{-2xt} |f(t) - f(t-s)|^2 dt )^{1/2}.
CriterionReport exp_equicont_modulus(const PegoFamily& family, double delta, int n_shifts, double eps,
                                     int threads = 1);

/// Single-shift root modulus for one member (s must be >= dt; rounded to the
/// grid). Used by the criterion above and by the chain checks.
double shift_modulus(const HalfLineFunction& f, Order order, const TimeGrid& grid, double s);

/// Spectral tail: int_{|y|>T} |L{f}(x+iy)|^2 dy over the grid plus the
/// beyond-grid tail bound. No 1/2pi factor.
CriterionReport laplace_equivanish_tail(const PegoFamily& family, double T, const FrequencyGrid& ygrid, double eps,
                                        int threads = 1);

/// Weighted L2 norms; supremum is the family bound estimate M.
CriterionReport l2_bound(const PegoFamily& family, int threads = 1);

/// Nonnegative polynomial bump with supp in (0, delta) and unit mass on the
/// working grid.
struct MollifierSpec {
  double delta;
  double amplitude;        // g(s) = amplitude (s (delta - s))^2
  HalfLineFunction profile;
};

MollifierSpec make_mollifier(double delta, const TimeGrid& grid);

/// One report per scale; scales must be sorted (T ascending, delta descending).
std::vector<CriterionReport> scale_sweep(const PegoFamily& family, Criterion criterion,
                                         const std::vector<double>& scales, const FrequencyGrid& ygrid,
                                         const Thresholds& thresholds, int n_shifts = 8, int threads = 1);

}  // namespace pego
