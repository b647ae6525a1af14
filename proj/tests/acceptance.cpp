// Acceptance suite: runs every release criterion at its pinned tolerance and
// prints one pass/fail line per criterion. Exit code = number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "pego/diagnosis.hpp"
#include "pego/families.hpp"
#include "pego/transform.hpp"

using namespace pego;
using HF = HalfLineFunction;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int index, const char* name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s  (%s)\n", pass ? "PASS" : "FAIL", index, name, detail.c_str());
  if (!pass) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const TimeGrid kGrid;  // default dt 1e-3, t_max 40
const FrequencyGrid kYGrid = default_frequency_grid(kGrid);

void criterion_1_plancherel() {
  bool pass = true;
  std::ostringstream detail;
  for (double a : {1.0, 2.0}) {
    for (double x : {0.0, 0.5, 1.0}) {
      const auto start = Clock::now();
      const auto r = plancherel_check(HF::exponential(a), Order(x), kGrid, kYGrid);
      const double elapsed = seconds_since(start);
      const double want = 1.0 / (2.0 * (a + x));
      const bool ok = std::abs(r.lhs - want) <= 1e-3 * want && std::abs(r.rhs - want) <= 1e-3 * want &&
                      r.rel_err <= 1e-3 && elapsed < 5.0;
      if (!ok) {
        pass = false;
        detail << "a=" << a << " x=" << x << " lhs=" << r.lhs << " rhs=" << r.rhs << " want=" << want
               << " t=" << elapsed << "s; ";
      }
    }
  }
  if (pass) detail << "6 cases, lhs = rhs = 1/(2(a+x)) within rel 1e-3, each < 5 s";
  report(1, "Plancherel identity", pass, detail.str());
}

void criterion_2_convolution_theorem() {
  const auto start = Clock::now();
  const auto gap_ind = convolution_theorem_check(HF::indicator(0.0, 1.0), HF::indicator(0.0, 1.0), Order(1.0), kGrid,
                                                 kYGrid).max_abs_gap;
  const auto gap_exp =
      convolution_theorem_check(HF::exponential(1.0), HF::exponential(2.0), Order(1.0), kGrid, kYGrid).max_abs_gap;
  const double elapsed = seconds_since(start);
  const bool pass = gap_ind <= 1e-4 && gap_exp <= 1e-4 && elapsed < 10.0;
  std::ostringstream detail;
  detail << "gap(ind,ind)=" << gap_ind << " gap(exp1,exp2)=" << gap_exp << " in " << elapsed << " s";
  report(2, "convolution theorem", pass, detail.str());
}

void criterion_3_riemann_lebesgue() {
  const auto sups = riemann_lebesgue_profile(HF::indicator(1.0, 2.0), Order(0.0), kGrid, {1e2, 1e3, 1e4});
  const bool bounded = sups[0] <= 2.0 / 1e2 && sups[1] <= 2.0 / 1e3 && sups[2] <= 2.0 / 1e4;
  const bool decreasing = sups[0] > sups[1] && sups[1] > sups[2];
  std::ostringstream detail;
  detail << "band sups " << sups[0] << ", " << sups[1] << ", " << sups[2] << " vs bounds 2e-2, 2e-3, 2e-4";
  report(3, "Riemann-Lebesgue decay", bounded && decreasing, detail.str());
}

void criterion_4_criterion_analytics() {
  const PegoFamily expf({HF::exponential(1.0)}, Order(0.0), kGrid);
  const PegoFamily indf({HF::indicator(0.0, 1.0)}, Order(0.0), kGrid);

  const double tail = exp_equivanish_tail(expf, 1.0, 1e-2).supremum;
  const double tail_want = std::exp(-2.0) / 2.0;
  const bool ok_tail = std::abs(tail - tail_want) <= 1e-6;

  const double shift = exp_equicont_modulus(indf, 0.02, 1, 1e-2).supremum;
  const bool ok_shift = std::abs(shift - 0.2) <= 1e-3;

  const double spectral = laplace_equivanish_tail(expf, 10.0, kYGrid, 1e-2).supremum;
  const double spectral_want = 2.0 * (M_PI / 2.0 - std::atan(10.0));
  const bool ok_spectral = std::abs(spectral - spectral_want) <= 1e-3;

  std::ostringstream detail;
  detail << "tail " << tail << " (want " << tail_want << " +-1e-6), shift " << shift
         << " (want 0.2 +-1e-3), spectral " << spectral << " (want " << spectral_want << " +-1e-3)";
  report(4, "criterion analytics", ok_tail && ok_shift && ok_spectral, detail.str());
}

void criterion_5_chain_checks() {
  const auto start = Clock::now();
  int violations = 0;
  int vacuous = 0;
  int total = 0;
  for (const auto& spec : catalog()) {
    const auto family = instantiate(spec, kGrid);
    for (const auto& check : run_chain_checks(family, 1e-2, {}, std::nullopt, 4)) {
      ++total;
      if (check.vacuous) ++vacuous;
      if (!check.holds) ++violations;
    }
  }
  const double elapsed = seconds_since(start);
  const bool pass = violations == 0 && elapsed < 120.0;
  std::ostringstream detail;
  detail << total << " checks over the catalog, " << violations << " violations, " << vacuous
         << " vacuous premises, " << elapsed << " s";
  report(5, "implication chains with proof constants", pass, detail.str());
}

void criterion_6_classification() {
  bool pass = true;
  std::ostringstream detail;
  Verdict translate_x0 = Verdict::Inconclusive;
  Verdict translate_x1 = Verdict::Inconclusive;
  for (const auto& spec : catalog()) {
    const auto family = instantiate(spec, kGrid);
    const auto v = diagnose(family, 1e-2, {}, std::nullopt, 4);
    const Verdict want = spec.label == Label::Compact ? Verdict::Compact : Verdict::NonCompact;
    if (spec.name == "translate-ray") translate_x0 = v.verdict;
    if (spec.name == "translate-ray-x1") translate_x1 = v.verdict;
    if (v.verdict != want || !v.agreement) {
      pass = false;
      detail << spec.name << ": got " << verdict_name(v.verdict) << " (want " << verdict_name(want)
             << ", agreement=" << v.agreement << "); ";
    }
  }
  const bool flip = translate_x0 == Verdict::NonCompact && translate_x1 == Verdict::Compact;
  if (!flip) {
    pass = false;
    detail << "translate ray did not flip non-compact@x=0 -> compact@x=1; ";
  }
  if (pass) detail << "all labeled families three-way agree; translate ray flips at x=1";
  report(6, "main-theorem classification", pass, detail.str());
}

void criterion_7_determinism() {
  auto run_once = [](const char* path) {
    std::vector<const char*> argv{"pego-lab", "diagnose", "--family", "random", "--seed", "1",
                                  "--size", "20", "--threads", "4", "--out", path};
    const auto config = cli::parse(static_cast<int>(argv.size()), argv.data());
    return cli::run(config);
  };
  const int rc_a = run_once("/tmp/pego_acceptance_a.json");
  const int rc_b = run_once("/tmp/pego_acceptance_b.json");
  const auto a = read_file("/tmp/pego_acceptance_a.json");
  const auto b = read_file("/tmp/pego_acceptance_b.json");
  const bool pass = rc_a == 0 && rc_b == 0 && !a.empty() && a == b;
  std::ostringstream detail;
  detail << "two diagnose runs (seed 1, size 20): " << a.size() << " bytes, byte-identical=" << (a == b);
  report(7, "byte-identical reports", pass, detail.str());
}

}  // namespace

int main() {
  criterion_1_plancherel();
  criterion_2_convolution_theorem();
  criterion_3_riemann_lebesgue();
  criterion_4_criterion_analytics();
  criterion_5_chain_checks();
  criterion_6_classification();
  criterion_7_determinism();
  std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures;
}
