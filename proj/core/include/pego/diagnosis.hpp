#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pego/criteria.hpp"

namespace pego {

enum class Verdict { Compact, NonCompact, Inconclusive };

const char* verdict_name(Verdict v) noexcept;

/// Outcome of sweeping one criterion: passed at some scale, failed
/// definitively (plateau / far above threshold at the end of the sweep), or
/// exhausted while still decreasing (inconclusive).
struct CriterionSweepOutcome {
  Criterion criterion;
  std::vector<CriterionReport> reports;
  bool passed = false;
  double passed_at = 0.0;       // scale that first passed
  bool definitive_fail = false;
};

struct RouteVerdict {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<CriterionSweepOutcome> criteria;
};

struct NetOracleResult {
  std::vector<std::size_t> prefixes;
  std::vector<std::size_t> net_sizes;
  bool saturated = false;
  double eps = 0.0;
};

struct CompactnessVerdict {
  CriterionReport bound;      // L2Bound report (the theorem's standing hypothesis)
  RouteVerdict laplace_route; // LaplaceEquicont + LaplaceEquivanish
  RouteVerdict rk_route;      // ExpEquicont + ExpEquivanish
  NetOracleResult oracle;
  Verdict verdict = Verdict::Inconclusive;
  bool agreement = false;
};

/// Greedy farthest-point eps-net sizes on nested member prefixes (25%, 50%,
/// 100% of the deduplicated member list, stored order; first member seeds,
/// ties break to the lowest index). saturated <=> the last two sizes agree.
NetOracleResult epsilon_net_oracle(const PegoFamily& family, double eps, int threads = 1);

/// Three-way compactness diagnosis: the Laplace-criteria route, the
/// Riesz-Kolmogorov route on the weighted family, and the eps-net oracle.
CompactnessVerdict diagnose(const PegoFamily& family, double eps, const SweepPlan& sweeps = {},
                            std::optional<FrequencyGrid> ygrid = std::nullopt, int threads = 1);

enum class ChainTheorem {
  EquicontToEquivanish,     // Laplace equicontinuity  =>  exponential L2-equivanishing
  BoundedReverse,           // bounded + equivanishing =>  Laplace equicontinuity
  LemmaExpEquicont,         // shift modulus <=> weighted shift modulus (both directions)
  EquicontToLaplaceVanish,  // shift modulus  =>  spectral equivanishing (mollifier route)
  LaplaceVanishReverse,     // spectral equivanishing => shift modulus
};

const char* chain_theorem_name(ChainTheorem t) noexcept;

struct ChainSubCheck {
  std::string label;
  double premise_value = 0.0;
  double conclusion_value = 0.0;
  double bound = 0.0;  // includes slack
  bool holds = true;
  bool vacuous = false;
};

/// Numerical verification of one implication with the proof's explicit
/// constant: holds <=> conclusion_value <= constant * eps + slack. A failed
/// premise at desk scales makes the check vacuous (reported, not failed).
struct ChainCheck {
  ChainTheorem theorem_id;
  double eps = 0.0;
  double premise_value = 0.0;
  double conclusion_value = 0.0;
  double constant = 0.0;
  double slack = 0.0;
  double delta = 0.0;
  double T = 0.0;
  bool vacuous = false;
  bool holds = true;
  std::vector<ChainSubCheck> parts;  // populated by the two-directional lemma check
};

ChainCheck check_thm_equicont_to_equivanish(const PegoFamily& family, double eps, double delta,
                                            std::optional<FrequencyGrid> ygrid = std::nullopt, int threads = 1);

ChainCheck check_thm_bounded_reverse(const PegoFamily& family, double eps, double T,
                                     std::optional<FrequencyGrid> ygrid = std::nullopt, int threads = 1);

ChainCheck check_lemma_exp_equicont(const PegoFamily& family, double eps, int threads = 1);

ChainCheck check_thm_equicont_to_laplace_vanish(const PegoFamily& family, double eps,
                                                std::optional<FrequencyGrid> ygrid = std::nullopt, int threads = 1);

ChainCheck check_thm_laplace_vanish_reverse(const PegoFamily& family, double eps, double T,
                                            std::optional<FrequencyGrid> ygrid = std::nullopt, int threads = 1);

/// All five checks with scale choices taken from the default sweeps.
std::vector<ChainCheck> run_chain_checks(const PegoFamily& family, double eps, const SweepPlan& sweeps = {},
                                         std::optional<FrequencyGrid> ygrid = std::nullopt, int threads = 1);

}  // namespace pego
