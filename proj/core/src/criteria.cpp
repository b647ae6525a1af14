#include "pego/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pego/parallel.hpp"

namespace pego {

namespace {

CriterionReport finish_report(Criterion criterion, CriterionScales scales, std::vector<double> per_member,
                              double error_budget = 0.0) {
  CriterionReport r;
  r.criterion = criterion;
  r.scales = scales;
  r.per_member = std::move(per_member);
  r.supremum = r.per_member.empty() ? 0.0 : *std::max_element(r.per_member.begin(), r.per_member.end());
  r.pass = r.supremum < scales.eps;
  r.error_budget = error_budget;
  return r;
}

double trapezoid_weight(int index, int last) { return (index == 0 || index == last) ? 0.5 : 1.0; }

}  // namespace

const char* criterion_name(Criterion c) noexcept {
  switch (c) {
    case Criterion::ExpEquivanish: return "exp-equivanish";
    case Criterion::LaplaceEquicont: return "laplace-equicont";
    case Criterion::ExpEquicont: return "exp-equicont";
    case Criterion::LaplaceEquivanish: return "laplace-equivanish";
    case Criterion::L2Bound: return "l2-bound";
  }
  return "unknown";
}

double Thresholds::of(Criterion c) const {
  switch (c) {
    case Criterion::ExpEquivanish: return exp_equivanish();
    case Criterion::LaplaceEquicont: return laplace_equicont();
    case Criterion::ExpEquicont: return exp_equicont();
    case Criterion::LaplaceEquivanish: return laplace_equivanish();
    case Criterion::L2Bound: return std::numeric_limits<double>::infinity();
  }
  return eps_base;
}

const std::vector<double>& SweepPlan::scales_for(Criterion c) const {
  switch (c) {
    case Criterion::ExpEquivanish: return exp_equivanish_T;
    case Criterion::LaplaceEquicont: return laplace_equicont_delta;
    case Criterion::ExpEquicont: return exp_equicont_delta;
    case Criterion::LaplaceEquivanish: return laplace_equivanish_T;
    case Criterion::L2Bound: break;
  }
  throw_error(ErrorCode::Config, "no sweep scales for this criterion");
}

CriterionReport exp_equivanish_tail(const PegoFamily& family, double T, double eps, int threads) {
  if (!(T > 0.0) || T >= family.grid.t_max)
    throw_error(ErrorCode::Scale, "tail scale T must lie in (0, t_max): the tail is indistinguishable from truncation");
  const int m = static_cast<int>(family.members.size());
  std::vector<double> values(m);
  parallel_for(m, threads, [&](int i) {
    const auto w = sample_weighted(family.members[i], family.order, family.grid);
    double acc = 0.0;
    for (int j = 0; j < family.grid.n; ++j) {
      if (family.grid.node(j) > T) acc += std::norm(w[j]);
    }
    values[i] = acc * family.grid.dt;
  });
  return finish_report(Criterion::ExpEquivanish, {eps, 0.0, T}, std::move(values));
}

CriterionReport laplace_equicont_modulus(const PegoFamily& family, double delta, const FrequencyGrid& ygrid,
                                         double eps, int threads) {
  if (!(delta > 0.0)) throw_error(ErrorCode::Scale, "delta must be positive");
  const int m = static_cast<int>(family.members.size());
  std::vector<double> values(m);
  std::vector<double> budgets(m);
  parallel_for(m, threads, [&](int i) {
    const auto& f = family.members[i];
    const auto base = laplace_line(f, family.order, family.grid, ygrid);
    const auto shifted = laplace_line(weight(f, Order(delta)), family.order, family.grid, ygrid);
    const int last = ygrid.node_count() - 1;
    double quad = 0.0;
    for (int k = 0; k <= last; ++k) quad += trapezoid_weight(k, last) * std::norm(shifted.values[k] - base.values[k]);
    quad *= ygrid.dy;
    // Beyond-grid mass of the difference: (sqrt(a)+sqrt(b))^2 from the two tails.
    const double cross = std::pow(std::sqrt(base.tail_bound) + std::sqrt(shifted.tail_bound), 2);
    values[i] = (quad + cross) / (2.0 * M_PI);
    budgets[i] = cross / (2.0 * M_PI);
  });
  const double budget = budgets.empty() ? 0.0 : *std::max_element(budgets.begin(), budgets.end());
  return finish_report(Criterion::LaplaceEquicont, {eps, delta, 0.0}, std::move(values), budget);
}

double shift_modulus(const HalfLineFunction& f, Order order, const TimeGrid& grid, double s) {
  const long long steps = std::llround(s / grid.dt);
  if (steps < 1) throw_error(ErrorCode::Scale, "shift below the grid resolution");
  const double s_grid = static_cast<double>(steps) * grid.dt;
  double acc = 0.0;
  for (int j = 0; j < grid.n; ++j) {
    const double t = grid.node(j);
    const Complex diff = f(t) - f(t - s_grid);
    acc += std::exp(-2.0 * order.x * t) * std::norm(diff);
  }
  return std::sqrt(acc * grid.dt);
}

namespace {

std::vector<double> sampled_shifts(double delta, double dt, int n_shifts) {
  std::vector<double> shifts;
  double raw = delta;
  for (int i = 0; i < n_shifts; ++i, raw *= 0.5) {
    const long long steps = std::max<long long>(1, std::llround(raw / dt));
    const double s = static_cast<double>(steps) * dt;
    if (std::find(shifts.begin(), shifts.end(), s) == shifts.end()) shifts.push_back(s);
  }
  std::sort(shifts.begin(), shifts.end());
  return shifts;
}

}  // namespace

CriterionReport exp_equicont_modulus(const PegoFamily& family, double delta, int n_shifts, double eps, int threads) {
  if (delta < family.grid.dt) throw_error(ErrorCode::Scale, "delta below the grid resolution dt");
  const auto shifts = sampled_shifts(delta, family.grid.dt, std::max(1, n_shifts));
  const int m = static_cast<int>(family.members.size());
  std::vector<double> values(m);
  parallel_for(m, threads, [&](int i) {
    double worst = 0.0;
    for (double s : shifts) worst = std::max(worst, shift_modulus(family.members[i], family.order, family.grid, s));
    values[i] = worst;
  });
  return finish_report(Criterion::ExpEquicont, {eps, delta, 0.0}, std::move(values));
}

CriterionReport laplace_equivanish_tail(const PegoFamily& family, double T, const FrequencyGrid& ygrid, double eps,
                                        int threads) {
  if (!(T > 0.0) || T >= ygrid.y_max())
    throw_error(ErrorCode::Scale, "spectral tail scale T must lie in (0, y_max)");
  const int m = static_cast<int>(family.members.size());
  std::vector<double> values(m);
  std::vector<double> budgets(m);
  // Cell-clipped weights: node k owns (|y_k| - dy/2, |y_k| + dy/2), clipped
  // to (T, y_max]. Keeps the T boundary exact to the cell resolution and the
  // supremum exactly non-increasing in T.
  const double dy = ygrid.dy;
  const double y_max = ygrid.y_max();
  auto cell_weight = [&](double y_abs, bool origin) {
    const double lo = std::max(y_abs - 0.5 * dy, T);
    const double hi = std::min(y_abs + 0.5 * dy, y_max);
    const double overlap = std::max(0.0, hi - lo);
    return (origin ? 2.0 : 1.0) * overlap / dy;  // origin cell folds both signs
  };
  parallel_for(m, threads, [&](int i) {
    const auto slice = laplace_line(family.members[i], family.order, family.grid, ygrid);
    const int last = ygrid.node_count() - 1;
    double quad = 0.0;
    for (int k = 0; k <= last; ++k) {
      const double w = cell_weight(std::abs(slice.y(k)), k == ygrid.half_count);
      if (w > 0.0) quad += w * std::norm(slice.values[k]);
    }
    quad *= dy;
    values[i] = quad + slice.tail_bound;
    budgets[i] = slice.tail_bound;
  });
  const double budget = budgets.empty() ? 0.0 : *std::max_element(budgets.begin(), budgets.end());
  return finish_report(Criterion::LaplaceEquivanish, {eps, 0.0, T}, std::move(values), budget);
}

CriterionReport l2_bound(const PegoFamily& family, int threads) {
  const int m = static_cast<int>(family.members.size());
  std::vector<double> values(m);
  parallel_for(m, threads, [&](int i) {
    values[i] = weighted_l2_norm_sq(family.members[i], family.order, family.grid);
  });
  return finish_report(Criterion::L2Bound, {std::numeric_limits<double>::infinity(), 0.0, 0.0}, std::move(values));
}

MollifierSpec make_mollifier(double delta, const TimeGrid& grid) {
  if (!(delta >= 4.0 * grid.dt))
    throw_error(ErrorCode::Scale, "mollifier width must be at least four grid steps");
  // Normalize against the grid quadrature so the working-grid mass is 1.
  double raw_mass = 0.0;
  for (int j = 0; j < grid.n; ++j) {
    const double t = grid.node(j);
    if (t >= delta) break;
    const double v = t * (delta - t);
    raw_mass += v * v;
  }
  raw_mass *= grid.dt;
  const double amplitude = 1.0 / raw_mass;
  return {delta, amplitude, HalfLineFunction::poly_bump(delta, amplitude)};
}

std::vector<CriterionReport> scale_sweep(const PegoFamily& family, Criterion criterion,
                                         const std::vector<double>& scales, const FrequencyGrid& ygrid,
                                         const Thresholds& thresholds, int n_shifts, int threads) {
  if (scales.empty()) throw_error(ErrorCode::Scale, "scale sweep needs at least one scale");
  const bool t_like = criterion == Criterion::ExpEquivanish || criterion == Criterion::LaplaceEquivanish;
  for (std::size_t i = 1; i < scales.size(); ++i) {
    const bool ordered = t_like ? scales[i] > scales[i - 1] : scales[i] < scales[i - 1];
    if (!ordered)
      throw_error(ErrorCode::Scale, t_like ? "tail scales must be strictly increasing"
                                           : "shift scales must be strictly decreasing");
  }
  const double eps = thresholds.of(criterion);
  std::vector<CriterionReport> out;
  out.reserve(scales.size());
  for (double scale : scales) {
    switch (criterion) {
      case Criterion::ExpEquivanish:
        out.push_back(exp_equivanish_tail(family, scale, eps, threads));
        break;
      case Criterion::LaplaceEquicont:
        out.push_back(laplace_equicont_modulus(family, scale, ygrid, eps, threads));
        break;
      case Criterion::ExpEquicont:
        out.push_back(exp_equicont_modulus(family, scale, n_shifts, eps, threads));
        break;
      case Criterion::LaplaceEquivanish:
        out.push_back(laplace_equivanish_tail(family, scale, ygrid, eps, threads));
        break;
      case Criterion::L2Bound:
        throw_error(ErrorCode::Config, "L2 bound has no scale to sweep");
    }
  }
  return out;
}

}  // namespace pego
