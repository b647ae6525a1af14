#include "pego/diagnosis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pego/parallel.hpp"

namespace pego {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// delta*T solving |e^{-delta T} - 1|^2 = 1/2, i.e. -log(1 - 1/sqrt(2)).
const double kHalfCrossing = -std::log1p(-1.0 / std::sqrt(2.0));

FrequencyGrid resolve_ygrid(const PegoFamily& family, const std::optional<FrequencyGrid>& ygrid) {
  return ygrid ? *ygrid : default_frequency_grid(family.grid);
}

/// Quadratic-scale error estimate propagated into chain-check slack:
/// midpoint O(dt^2), aliasing (with the family's modulation content), and
/// the y-tail bounds already added into measured values.
double quadratic_error_estimate(const PegoFamily& family, double family_bound, double extra_budget) {
  const double dt = family.grid.dt;
  double omega_max = 0.0;
  for (const auto& f : family.members) omega_max = std::max(omega_max, f.max_modulation());
  const double e_time = dt * dt * family_bound;
  const double e_alias = family_bound * (dt + dt * dt * omega_max * omega_max / 12.0);
  return e_time + e_alias + extra_budget;
}

double family_l2_sup(const PegoFamily& family, int threads) {
  const auto report = l2_bound(family, threads);
  return report.supremum;
}

}  // namespace

const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::Compact: return "compact";
    case Verdict::NonCompact: return "non-compact";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

const char* chain_theorem_name(ChainTheorem t) noexcept {
  switch (t) {
    case ChainTheorem::EquicontToEquivanish: return "equicont-to-equivanish";
    case ChainTheorem::BoundedReverse: return "bounded-reverse";
    case ChainTheorem::LemmaExpEquicont: return "lemma-exp-equicont";
    case ChainTheorem::EquicontToLaplaceVanish: return "equicont-to-laplace-vanish";
    case ChainTheorem::LaplaceVanishReverse: return "laplace-vanish-reverse";
  }
  return "unknown";
}

NetOracleResult epsilon_net_oracle(const PegoFamily& family, double eps, int threads) {
  const int m = static_cast<int>(family.members.size());
  std::vector<std::vector<Complex>> samples(m);
  parallel_for(m, threads, [&](int i) {
    samples[i] = sample_weighted(family.members[i], family.order, family.grid);
  });

  // Drop exact duplicates so repeated members cannot distort the prefixes.
  std::vector<int> distinct;
  for (int i = 0; i < m; ++i) {
    bool dup = false;
    for (int keep : distinct) {
      if (samples[i] == samples[keep]) {
        dup = true;
        break;
      }
    }
    if (!dup) distinct.push_back(i);
  }
  const int d = static_cast<int>(distinct.size());

  const double scale = family.grid.dt;
  auto dist_sq = [&](int a, int b) {
    const auto& va = samples[distinct[a]];
    const auto& vb = samples[distinct[b]];
    double acc = 0.0;
    for (std::size_t j = 0; j < va.size(); ++j) acc += std::norm(va[j] - vb[j]);
    return acc * scale;
  };

  NetOracleResult result;
  result.eps = eps;
  const double eps_sq = eps * eps;
  for (int quarter : {1, 2, 4}) {
    const int prefix = (d * quarter + 3) / 4;
    result.prefixes.push_back(static_cast<std::size_t>(prefix));

    // Greedy farthest-point net over the prefix, seeded by the first member.
    std::vector<int> net{0};
    std::vector<double> min_dist(prefix, kInf);
    for (int i = 0; i < prefix; ++i) min_dist[i] = dist_sq(i, 0);
    while (true) {
      int far = -1;
      double far_dist = eps_sq;
      for (int i = 0; i < prefix; ++i) {
        if (min_dist[i] > far_dist) {
          far_dist = min_dist[i];
          far = i;
        }
      }
      if (far < 0) break;
      net.push_back(far);
      for (int i = 0; i < prefix; ++i) min_dist[i] = std::min(min_dist[i], dist_sq(i, far));
    }
    result.net_sizes.push_back(net.size());
  }
  const std::size_t count = result.net_sizes.size();
  result.saturated = count >= 2 && result.net_sizes[count - 1] == result.net_sizes[count - 2];
  return result;
}

namespace {

CriterionSweepOutcome sweep_criterion(const PegoFamily& family, Criterion criterion, const SweepPlan& sweeps,
                                      const FrequencyGrid& ygrid, const Thresholds& thresholds, int threads) {
  CriterionSweepOutcome outcome;
  outcome.criterion = criterion;
  outcome.reports =
      scale_sweep(family, criterion, sweeps.scales_for(criterion), ygrid, thresholds, sweeps.n_shifts, threads);
  const double eff = thresholds.of(criterion);
  for (const auto& report : outcome.reports) {
    if (report.pass && !outcome.passed) {
      outcome.passed = true;
      outcome.passed_at = criterion == Criterion::ExpEquivanish || criterion == Criterion::LaplaceEquivanish
                              ? report.scales.T
                              : report.scales.delta;
    }
  }
  if (!outcome.passed) {
    // Definitive failure: the sweep ended far above the threshold, or on a
    // non-decreasing plateau. A still-decreasing exhausted sweep stays open.
    const double last = outcome.reports.back().supremum;
    const double prev = outcome.reports.size() >= 2 ? outcome.reports[outcome.reports.size() - 2].supremum : last;
    outcome.definitive_fail = last >= 2.0 * eff || last >= 0.95 * prev;
  }
  return outcome;
}

Verdict route_verdict(const std::vector<CriterionSweepOutcome>& criteria) {
  bool all_passed = true;
  for (const auto& c : criteria) {
    if (c.definitive_fail) return Verdict::NonCompact;
    all_passed = all_passed && c.passed;
  }
  return all_passed ? Verdict::Compact : Verdict::Inconclusive;
}

}  // namespace

CompactnessVerdict diagnose(const PegoFamily& family, double eps, const SweepPlan& sweeps,
                            std::optional<FrequencyGrid> ygrid_opt, int threads) {
  const FrequencyGrid ygrid = resolve_ygrid(family, ygrid_opt);
  Thresholds thresholds{eps};

  CompactnessVerdict verdict;
  verdict.bound = l2_bound(family, threads);
  if (!std::isfinite(verdict.bound.supremum)) {
    throw_error(ErrorCode::Diagnosis,
                "diagnosis refused: the weighted family is not L2-bounded at this grid (non-finite norm)");
  }

  RouteVerdict laplace;
  laplace.criteria.push_back(sweep_criterion(family, Criterion::LaplaceEquicont, sweeps, ygrid, thresholds, threads));
  laplace.criteria.push_back(sweep_criterion(family, Criterion::LaplaceEquivanish, sweeps, ygrid, thresholds, threads));
  laplace.verdict = route_verdict(laplace.criteria);
  verdict.laplace_route = std::move(laplace);

  RouteVerdict rk;
  rk.criteria.push_back(sweep_criterion(family, Criterion::ExpEquicont, sweeps, ygrid, thresholds, threads));
  rk.criteria.push_back(sweep_criterion(family, Criterion::ExpEquivanish, sweeps, ygrid, thresholds, threads));
  rk.verdict = route_verdict(rk.criteria);
  verdict.rk_route = std::move(rk);

  verdict.oracle = epsilon_net_oracle(family, thresholds.net_eps(), threads);
  const Verdict oracle_verdict = verdict.oracle.saturated ? Verdict::Compact : Verdict::NonCompact;

  if (verdict.laplace_route.verdict == verdict.rk_route.verdict &&
      verdict.laplace_route.verdict == oracle_verdict) {
    verdict.verdict = oracle_verdict;
    verdict.agreement = true;
  } else {
    verdict.verdict = Verdict::Inconclusive;
    verdict.agreement = false;
  }
  return verdict;
}

namespace {

double grid_ceil(double value, double step) { return std::ceil(value / step - 1e-12) * step; }

ChainCheck vacuous_check(ChainTheorem id, double eps, double premise, double delta, double T) {
  ChainCheck check;
  check.theorem_id = id;
  check.eps = eps;
  check.premise_value = premise;
  check.conclusion_value = 0.0;
  check.constant = 0.0;
  check.delta = delta;
  check.T = T;
  check.vacuous = true;
  check.holds = true;
  return check;
}

}  // namespace

ChainCheck check_thm_equicont_to_equivanish(const PegoFamily& family, double eps, double delta,
                                            std::optional<FrequencyGrid> ygrid_opt, int threads) {
  const FrequencyGrid ygrid = resolve_ygrid(family, ygrid_opt);
  const auto premise = laplace_equicont_modulus(family, delta, ygrid, eps, threads);
  const double T = grid_ceil(kHalfCrossing / delta, family.grid.dt);
  if (premise.supremum >= eps || T >= family.grid.t_max)
    return vacuous_check(ChainTheorem::EquicontToEquivanish, eps, premise.supremum, delta, T);

  const auto conclusion = exp_equivanish_tail(family, T, eps, threads);
  const double bound_m = family_l2_sup(family, threads);
  ChainCheck check;
  check.theorem_id = ChainTheorem::EquicontToEquivanish;
  check.eps = eps;
  check.premise_value = premise.supremum;
  check.conclusion_value = conclusion.supremum;
  check.constant = 2.0;
  check.slack = 3.0 * quadratic_error_estimate(family, bound_m, premise.error_budget + conclusion.error_budget);
  check.delta = delta;
  check.T = T;
  check.holds = check.conclusion_value <= check.constant * eps + check.slack;
  return check;
}

ChainCheck check_thm_bounded_reverse(const PegoFamily& family, double eps, double T,
                                     std::optional<FrequencyGrid> ygrid_opt, int threads) {
  const FrequencyGrid ygrid = resolve_ygrid(family, ygrid_opt);
  const auto premise = exp_equivanish_tail(family, T, eps, threads);
  const double bound_m = family_l2_sup(family, threads);
  // Largest grid-aligned delta keeping |e^{-delta T} - 1|^2 M below eps.
  const double dt = family.grid.dt;
  long long k = 0;
  while (true) {
    const double candidate = (k + 1) * dt;
    const double kappa = std::pow(1.0 - std::exp(-candidate * T), 2);
    if (kappa * bound_m >= eps || candidate > 1.0) break;
    ++k;
  }
  if (premise.supremum >= eps || k < 1)
    return vacuous_check(ChainTheorem::BoundedReverse, eps, premise.supremum, k * dt, T);

  const double delta = k * dt;
  const auto conclusion = laplace_equicont_modulus(family, delta, ygrid, eps, threads);
  ChainCheck check;
  check.theorem_id = ChainTheorem::BoundedReverse;
  check.eps = eps;
  check.premise_value = premise.supremum;
  check.conclusion_value = conclusion.supremum;
  check.constant = 2.0;
  check.slack = 3.0 * quadratic_error_estimate(family, bound_m, premise.error_budget + conclusion.error_budget);
  check.delta = delta;
  check.T = T;
  check.holds = check.conclusion_value <= check.constant * eps + check.slack;
  return check;
}

namespace {

/// Weighted shift modulus of the lemma: sup over sampled s in (0, delta] of
/// int |f_x(t+s) - f_x(t)|^2 dt (squared scale, no root).
double weighted_shift_modulus_sq(const PegoFamily& family, double delta, int n_shifts, int threads) {
  const auto& grid = family.grid;
  std::vector<double> shifts;
  double raw = delta;
  for (int i = 0; i < n_shifts; ++i, raw *= 0.5) {
    const long long steps = std::max<long long>(1, std::llround(raw / grid.dt));
    const double s = steps * grid.dt;
    if (std::find(shifts.begin(), shifts.end(), s) == shifts.end()) shifts.push_back(s);
  }
  const int m = static_cast<int>(family.members.size());
  std::vector<double> values(m, 0.0);
  parallel_for(m, threads, [&](int i) {
    const auto w = sample_weighted(family.members[i], family.order, grid);
    double worst = 0.0;
    for (double s : shifts) {
      const int steps = static_cast<int>(std::llround(s / grid.dt));
      double acc = 0.0;
      for (int j = 0; j < grid.n; ++j) {
        const Complex ahead = (j + steps < grid.n) ? w[j + steps] : Complex(0.0, 0.0);
        acc += std::norm(ahead - w[j]);
      }
      worst = std::max(worst, acc * grid.dt);
    }
    values[i] = worst;
  });
  return *std::max_element(values.begin(), values.end());
}

double small_interval_mass(const PegoFamily& family, double delta, int threads) {
  const int m = static_cast<int>(family.members.size());
  std::vector<double> values(m, 0.0);
  parallel_for(m, threads, [&](int i) {
    const auto w = sample_weighted(family.members[i], family.order, family.grid);
    double acc = 0.0;
    for (int j = 0; j < family.grid.n && family.grid.node(j) < delta; ++j) acc += std::norm(w[j]);
    values[i] = acc * family.grid.dt;
  });
  return *std::max_element(values.begin(), values.end());
}

std::vector<double> delta_candidates(const TimeGrid& grid) {
  std::vector<double> out;
  for (double d = 0.512; d >= grid.dt * (1.0 - 1e-12); d *= 0.5) {
    const long long steps = std::max<long long>(1, std::llround(d / grid.dt));
    const double snapped = steps * grid.dt;
    if (out.empty() || snapped < out.back()) out.push_back(snapped);
  }
  return out;
}

}  // namespace

ChainCheck check_lemma_exp_equicont(const PegoFamily& family, double eps, int threads) {
  const double bound_m = family_l2_sup(family, threads);
  if (!std::isfinite(bound_m)) throw_error(ErrorCode::Diagnosis, "lemma check requires an L2-bounded family");
  const double root_m = std::sqrt(bound_m);
  const int n_shifts = 8;
  const auto candidates = delta_candidates(family.grid);
  const double x = family.order.x;
  const double err = quadratic_error_estimate(family, bound_m, 0.0);

  ChainCheck check;
  check.theorem_id = ChainTheorem::LemmaExpEquicont;
  check.eps = eps;
  check.slack = 3.0 * err;

  // Direction A: weighted modulus (with the small-interval and |e^{-xs}-1| M
  // side conditions) bounds the shift modulus by (2 eps)^{1/2} + eps.
  ChainSubCheck dir_a;
  dir_a.label = "weighted-to-shift";
  dir_a.vacuous = true;
  for (double delta : candidates) {
    const double mod7 = weighted_shift_modulus_sq(family, delta, n_shifts, threads);
    if (mod7 >= eps) continue;
    if (small_interval_mass(family, delta, threads) >= eps) continue;
    if (std::abs(std::exp(-x * delta) - 1.0) * root_m >= eps) continue;
    const auto conclusion = exp_equicont_modulus(family, delta, n_shifts, kInf, threads);
    dir_a.vacuous = false;
    dir_a.premise_value = mod7;
    dir_a.conclusion_value = conclusion.supremum;
    dir_a.bound = std::sqrt(2.0 * eps) + eps + std::sqrt(3.0 * err);
    dir_a.holds = dir_a.conclusion_value <= dir_a.bound;
    check.delta = delta;
    break;
  }

  // Direction B: shift modulus below eps_b forces the weighted modulus root
  // under 3 eps_b. eps_b sits on the root scale, matching direction A's output.
  const double eps_b = std::sqrt(2.0 * eps) + eps;
  ChainSubCheck dir_b;
  dir_b.label = "shift-to-weighted";
  dir_b.vacuous = true;
  for (double delta : candidates) {
    if (std::exp(x * delta) > 2.0) continue;
    if (std::abs(1.0 - std::exp(x * delta)) * root_m >= eps_b) continue;
    const auto premise = exp_equicont_modulus(family, delta, n_shifts, kInf, threads);
    if (premise.supremum >= eps_b) continue;
    const double mod7 = weighted_shift_modulus_sq(family, delta, n_shifts, threads);
    dir_b.vacuous = false;
    dir_b.premise_value = premise.supremum;
    dir_b.conclusion_value = std::sqrt(mod7);
    dir_b.bound = 3.0 * eps_b + std::sqrt(3.0 * err);
    dir_b.holds = dir_b.conclusion_value <= dir_b.bound;
    if (check.delta == 0.0) check.delta = delta;
    break;
  }

  check.parts = {dir_a, dir_b};
  check.vacuous = dir_a.vacuous && dir_b.vacuous;
  check.holds = (dir_a.vacuous || dir_a.holds) && (dir_b.vacuous || dir_b.holds);
  const auto& primary = dir_a.vacuous ? dir_b : dir_a;
  check.premise_value = primary.premise_value;
  check.conclusion_value = primary.conclusion_value;
  if (dir_a.vacuous) {
    check.eps = eps_b;
    check.constant = 3.0;
  } else {
    check.constant = (std::sqrt(2.0 * eps) + eps) / eps;
  }
  return check;
}

ChainCheck check_thm_equicont_to_laplace_vanish(const PegoFamily& family, double eps,
                                                std::optional<FrequencyGrid> ygrid_opt, int threads) {
  const FrequencyGrid ygrid = resolve_ygrid(family, ygrid_opt);
  const Thresholds thresholds{eps};
  const double eps_root = thresholds.exp_equicont();
  const SweepPlan sweeps;

  // Largest swept delta certifying the shift-modulus premise.
  double delta = 0.0;
  double premise = kInf;
  for (double candidate : sweeps.exp_equicont_delta) {
    if (candidate < 4.0 * family.grid.dt) break;
    const auto report = exp_equicont_modulus(family, candidate, sweeps.n_shifts, eps_root, threads);
    if (report.supremum < eps_root) {
      delta = candidate;
      premise = report.supremum;
      break;
    }
    premise = std::min(premise, report.supremum);
  }
  if (delta == 0.0) return vacuous_check(ChainTheorem::EquicontToLaplaceVanish, eps, premise, 0.0, 0.0);

  // Mollifier band scan: smallest grid T with |L{g}| <= 1/2 outside [-T, T].
  const auto mollifier = make_mollifier(delta, family.grid);
  const auto g_slice = laplace_line(mollifier.profile, family.order, family.grid, ygrid);
  const int mid = ygrid.half_count;
  std::vector<double> suffix_sup(mid + 1, 0.0);  // sup over |y| >= k dy
  for (int k = mid; k >= 0; --k) {
    double sup = (k < mid) ? suffix_sup[k + 1] : 0.0;
    sup = std::max(sup, std::abs(g_slice.values[mid + k]));
    sup = std::max(sup, std::abs(g_slice.values[mid - k]));
    suffix_sup[k] = sup;
  }
  // Pointwise beyond-grid bound |L{g}(x+iy)| <= ||(g e^{-xt})''||_1 / y^2.
  const double x = family.order.x;
  const double d5 = std::pow(mollifier.delta, 5);
  const double g_l1 = mollifier.amplitude * d5 / 30.0;
  const double g1_l1 = mollifier.amplitude * d5 / (8.0 * mollifier.delta);
  const double g2_l1 = 0.769800358919501 * mollifier.amplitude * std::pow(mollifier.delta, 3);
  const double c2 = g2_l1 + 2.0 * x * g1_l1 + x * x * g_l1;
  const double beyond = c2 / (ygrid.y_max() * ygrid.y_max());
  double T = 0.0;
  for (int k = 1; k <= mid; ++k) {
    if (suffix_sup[k] <= 0.5 && beyond <= 0.5) {
      T = (k - 1) * ygrid.dy;  // bound holds strictly beyond the previous node
      break;
    }
  }
  if (!(T > 0.0) || T >= ygrid.y_max())
    return vacuous_check(ChainTheorem::EquicontToLaplaceVanish, eps, premise, delta, T);

  const auto tail = laplace_equivanish_tail(family, T, ygrid, kInf, threads);
  const double bound_m = family_l2_sup(family, threads);
  const double err = quadratic_error_estimate(family, bound_m, tail.error_budget);

  ChainCheck check;
  check.theorem_id = ChainTheorem::EquicontToLaplaceVanish;
  check.eps = eps_root;
  check.premise_value = premise;
  check.conclusion_value = std::sqrt(tail.supremum);
  check.constant = 2.0 * std::sqrt(2.0 * M_PI);
  check.slack = std::sqrt(3.0 * err);
  check.delta = delta;
  check.T = T;
  check.holds = check.conclusion_value <= check.constant * eps_root + check.slack;
  return check;
}

ChainCheck check_thm_laplace_vanish_reverse(const PegoFamily& family, double eps, double T,
                                            std::optional<FrequencyGrid> ygrid_opt, int threads) {
  const FrequencyGrid ygrid = resolve_ygrid(family, ygrid_opt);
  const Thresholds thresholds{eps};
  const double eps_tail = thresholds.laplace_equivanish();
  const auto premise = laplace_equivanish_tail(family, T, ygrid, eps_tail, threads);
  const double x = family.order.x;

  // Largest grid delta with sup_{s<=delta, |y|<=T} |1 - e^{-s(x+iy)}|^2 < eps_tail
  // (monotone while delta*T stays under pi/2).
  const double dt = family.grid.dt;
  auto envelope = [&](double s) {
    return std::pow(1.0 - std::exp(-s * x), 2) + 2.0 * std::exp(-s * x) * (1.0 - std::cos(s * T));
  };
  long long k = 0;
  while (true) {
    const double candidate = (k + 1) * dt;
    if (candidate * T > M_PI / 2.0 || envelope(candidate) >= eps_tail) break;
    ++k;
  }
  if (premise.supremum >= eps_tail || k < 1)
    return vacuous_check(ChainTheorem::LaplaceVanishReverse, eps_tail, premise.supremum, k * dt, T);

  const double delta = k * dt;
  const double bound_m = family_l2_sup(family, threads);
  const double m1 = bound_m * (1.0 + 1e-12) + 1e-12;
  const double m2 = 4.0;  // sup |1 - e^{-s(x+iy)}|^2 <= (1 + e^{-sx})^2 <= 4
  const auto conclusion = exp_equicont_modulus(family, delta, 8, kInf, threads);
  const double err = quadratic_error_estimate(family, bound_m, premise.error_budget);

  ChainCheck check;
  check.theorem_id = ChainTheorem::LaplaceVanishReverse;
  check.eps = eps_tail;
  check.premise_value = premise.supremum;
  check.conclusion_value = conclusion.supremum * conclusion.supremum;
  check.constant = m1 + m2 / (2.0 * M_PI);
  check.slack = 3.0 * err;
  check.delta = delta;
  check.T = T;
  check.holds = check.conclusion_value <= check.constant * eps_tail + check.slack;
  return check;
}

std::vector<ChainCheck> run_chain_checks(const PegoFamily& family, double eps, const SweepPlan& sweeps,
                                         std::optional<FrequencyGrid> ygrid_opt, int threads) {
  const FrequencyGrid ygrid = resolve_ygrid(family, ygrid_opt);
  const Thresholds thresholds{eps};

  // Scale choices: the largest passing delta / smallest passing T from the
  // default sweeps; the in-check premise recomputation marks the rest vacuous.
  double delta_a = sweeps.laplace_equicont_delta.back();
  for (double d : sweeps.laplace_equicont_delta) {
    if (laplace_equicont_modulus(family, d, ygrid, eps, threads).supremum < eps) {
      delta_a = d;
      break;
    }
  }
  double t_b = sweeps.exp_equivanish_T.back();
  for (double t : sweeps.exp_equivanish_T) {
    if (exp_equivanish_tail(family, t, eps, threads).supremum < eps) {
      t_b = t;
      break;
    }
  }
  double t_e = sweeps.laplace_equivanish_T.back();
  for (double t : sweeps.laplace_equivanish_T) {
    if (laplace_equivanish_tail(family, t, ygrid, thresholds.laplace_equivanish(), threads).supremum <
        thresholds.laplace_equivanish()) {
      t_e = t;
      break;
    }
  }

  std::vector<ChainCheck> checks;
  checks.push_back(check_thm_equicont_to_equivanish(family, eps, delta_a, ygrid, threads));
  checks.push_back(check_thm_bounded_reverse(family, eps, t_b, ygrid, threads));
  checks.push_back(check_lemma_exp_equicont(family, eps, threads));
  checks.push_back(check_thm_equicont_to_laplace_vanish(family, eps, ygrid, threads));
  checks.push_back(check_thm_laplace_vanish_reverse(family, eps, t_e, ygrid, threads));
  return checks;
}

}  // namespace pego
