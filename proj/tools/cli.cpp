#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pego/diagnosis.hpp"
#include "pego/families.hpp"
#include "pego/parallel.hpp"
#include "pego/serialize.hpp"

namespace pego::cli {

namespace {

const char* command_name(Command c) {
  switch (c) {
    case Command::Verify: return "verify";
    case Command::Transform: return "transform";
    case Command::Criteria: return "criteria";
    case Command::Diagnose: return "diagnose";
    case Command::Chains: return "chains";
    case Command::Sweep: return "sweep";
  }
  return "";
}

Criterion criterion_from_name(const std::string& name) {
  for (Criterion c : {Criterion::ExpEquivanish, Criterion::LaplaceEquicont, Criterion::ExpEquicont,
                      Criterion::LaplaceEquivanish, Criterion::L2Bound}) {
    if (name == criterion_name(c)) return c;
  }
  throw_error(ErrorCode::Config,
              "unknown criterion '" + name +
                  "'; expected one of exp-equivanish, laplace-equicont, exp-equicont, laplace-equivanish");
}

FamilySpec load_family(const RunConfig& config) {
  if (!config.dsl_path.empty() && !config.family.empty())
    throw_error(ErrorCode::Config, "--family and --dsl are mutually exclusive");
  if (!config.dsl_path.empty()) {
    std::ifstream in(config.dsl_path);
    if (!in) throw_error(ErrorCode::Config, "cannot open DSL file '" + config.dsl_path + "'");
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) throw_error(ErrorCode::Config, "malformed DSL: not valid JSON");
    if (j.is_object() && j.contains("kind")) {
      FamilySpec spec;
      spec.name = "dsl";
      spec.members.push_back(function_from_json(j));
      spec.parameters = {0.0};
      return spec;
    }
    return family_from_json(j);
  }
  if (config.family.empty()) throw_error(ErrorCode::Config, "one of --family or --dsl is required");
  if (config.family == "random") return random_family(config.seed, config.size);
  return catalog_family(config.family);
}

// The thread cap is deliberately not embedded: it only affects scheduling,
// never values, so reports stay byte-identical across thread counts.
Json config_to_json(const RunConfig& config, const FamilySpec& spec, const TimeGrid& grid, const FrequencyGrid& ygrid) {
  Json j;
  j["command"] = command_name(config.command);
  j["family"] = spec.name;
  j["order"] = spec.order.x;
  j["eps"] = config.eps;
  j["grid"] = grid_to_json(grid);
  j["frequency_grid"] = frequency_grid_to_json(ygrid);
  const Thresholds thr{config.eps};
  j["thresholds"] = Json{{"exp-equivanish", thr.exp_equivanish()},
                         {"laplace-equicont", thr.laplace_equicont()},
                         {"exp-equicont", thr.exp_equicont()},
                         {"laplace-equivanish", thr.laplace_equivanish()},
                         {"net-eps", thr.net_eps()}};
  const SweepPlan sweeps;
  j["sweeps"] = Json{{"exp-equivanish", sweeps.exp_equivanish_T},
                     {"laplace-equicont", sweeps.laplace_equicont_delta},
                     {"exp-equicont", sweeps.exp_equicont_delta},
                     {"laplace-equivanish", sweeps.laplace_equivanish_T},
                     {"n_shifts", sweeps.n_shifts}};
  if (config.family == "random") {
    j["seed"] = config.seed;
    j["size"] = config.size;
  }
  return j;
}

void write_output(const RunConfig& config, const std::string& payload) {
  if (config.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(config.out, std::ios::binary);
  if (!out) throw_error(ErrorCode::Config, "cannot write output file '" + config.out + "'");
  out << payload;
}

}  // namespace

RunConfig parse(int argc, const char* const* argv) {
  CLI::App app{"pego-lab: compactness diagnostics for weighted L2 families on the half-line"};
  app.require_subcommand(1);

  RunConfig config;
  std::string scales_csv;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--family", config.family, "catalog family name, or 'random'");
    sub->add_option("--dsl", config.dsl_path, "family or function DSL file (JSON)");
    sub->add_option("--x", config.x, "order override (exponential weight rate)");
    sub->add_option("--eps", config.eps, "base tolerance");
    sub->add_option("--dt", config.dt, "time grid step");
    sub->add_option("--t-max", config.t_max, "time grid truncation");
    sub->add_option("--dy", config.dy, "frequency grid step (default: DFT-matched)");
    sub->add_option("--y-max", config.y_max, "frequency grid truncation (default: pi/dt)");
    sub->add_option("--threads", config.threads, "worker thread cap (default: PEGO_LAB_THREADS or 1)");
    sub->add_option("--seed", config.seed, "random family seed");
    sub->add_option("--size", config.size, "random family size");
    sub->add_option("--out", config.out, "output path (default: stdout)");
    sub->add_option("--format", config.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* verify = app.add_subcommand("verify", "Laplace-Pego norms per member");
  auto* transform = app.add_subcommand("transform", "spectrum slices per member");
  auto* criteria = app.add_subcommand("criteria", "sweep all compactness criteria");
  auto* diagnose = app.add_subcommand("diagnose", "three-route compactness verdict");
  auto* chains = app.add_subcommand("chains", "verify the implication chains with proof constants");
  auto* sweep = app.add_subcommand("sweep", "sweep one criterion over explicit scales");
  for (auto* sub : {verify, transform, criteria, diagnose, chains, sweep}) add_common(sub);
  diagnose->add_flag("--assert-compact", config.assert_compact, "exit 2 unless the verdict is compact");
  sweep->add_option("--criterion", config.criterion, "criterion to sweep");
  sweep->add_option("--scales", scales_csv, "comma-separated scale list");
  // --scales is rejected elsewhere so a silently ignored list cannot mislead.
  for (auto* sub : {verify, transform, criteria, diagnose, chains}) {
    sub->add_option("--scales", scales_csv, "")->group("");
  }

  try {
    app.parse(argc, const_cast<char**>(argv));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) throw_error(ErrorCode::Config, "help requested");
    throw_error(ErrorCode::Config, std::string("flag parse error: ") + e.what());
  }

  if (verify->parsed()) config.command = Command::Verify;
  if (transform->parsed()) config.command = Command::Transform;
  if (criteria->parsed()) config.command = Command::Criteria;
  if (diagnose->parsed()) config.command = Command::Diagnose;
  if (chains->parsed()) config.command = Command::Chains;
  if (sweep->parsed()) config.command = Command::Sweep;

  if (!scales_csv.empty()) {
    if (config.command != Command::Sweep)
      throw_error(ErrorCode::Config, "--scales only applies to the sweep command; other commands use the documented defaults");
    std::stringstream ss(scales_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        config.scales.push_back(std::stod(item));
      } catch (...) {
        throw_error(ErrorCode::Config, "inconsistent scales: '" + item + "' is not a number");
      }
    }
  }
  return config;
}

int run(const RunConfig& config) {
  const int threads = config.threads > 0 ? config.threads : default_thread_count();
  FamilySpec spec = load_family(config);
  if (config.x) spec.order = Order(*config.x);
  const TimeGrid grid(config.dt, config.t_max);
  const FrequencyGrid ygrid = (config.dy || config.y_max)
                                  ? FrequencyGrid(config.dy.value_or(default_frequency_grid(grid).dy),
                                                  config.y_max.value_or(M_PI / grid.dt))
                                  : default_frequency_grid(grid);
  const PegoFamily family = instantiate(spec, grid);
  const Thresholds thresholds{config.eps};
  const SweepPlan sweeps;

  Json report;
  report["schema"] = kReportSchema;
  report["config"] = config_to_json(config, spec, grid, ygrid);
  report["family"] = Json{{"name", spec.name},
                          {"order", spec.order.x},
                          {"label", label_name(spec.label)},
                          {"size", spec.members.size()},
                          {"parameters", spec.parameters}};
  std::string csv;
  int exit_code = 0;

  switch (config.command) {
    case Command::Verify: {
      Json members = Json::array();
      std::ostringstream table;
      table << "# columns: member,l1,l2\n";
      for (std::size_t i = 0; i < family.members.size(); ++i) {
        const auto norms = verify_pego(family.members[i], family.order, grid);
        members.push_back(norms_to_json(norms));
        table << i << ',' << format_double(norms.l1) << ',' << format_double(norms.l2) << '\n';
      }
      report["members"] = std::move(members);
      csv = table.str();
      break;
    }
    case Command::Transform: {
      std::vector<SpectrumSlice> slices;
      Json entries = Json::array();
      for (const auto& member : family.members) {
        slices.push_back(laplace_line(member, family.order, grid, ygrid));
        entries.push_back(slice_to_json(slices.back()));
      }
      report["slices"] = std::move(entries);
      csv = slice_to_csv(slices);
      break;
    }
    case Command::Criteria: {
      std::vector<CriterionSweepOutcome> outcomes;
      Json entries = Json::array();
      report["l2_bound"] = report_to_json(l2_bound(family, threads));
      for (Criterion c : {Criterion::LaplaceEquicont, Criterion::LaplaceEquivanish, Criterion::ExpEquicont,
                          Criterion::ExpEquivanish}) {
        CriterionSweepOutcome outcome;
        outcome.criterion = c;
        outcome.reports = scale_sweep(family, c, sweeps.scales_for(c), ygrid, thresholds, sweeps.n_shifts, threads);
        for (const auto& r : outcome.reports) {
          if (r.pass && !outcome.passed) {
            outcome.passed = true;
            outcome.passed_at = r.scales.delta > 0.0 ? r.scales.delta : r.scales.T;
          }
        }
        entries.push_back(sweep_outcome_to_json(outcome));
        outcomes.push_back(std::move(outcome));
      }
      report["criteria"] = std::move(entries);
      csv = sweeps_to_csv(outcomes);
      break;
    }
    case Command::Diagnose: {
      const auto verdict = diagnose(family, config.eps, sweeps, ygrid, threads);
      report["diagnosis"] = verdict_to_json(verdict);
      std::vector<CriterionSweepOutcome> outcomes;
      for (const auto& c : verdict.laplace_route.criteria) outcomes.push_back(c);
      for (const auto& c : verdict.rk_route.criteria) outcomes.push_back(c);
      csv = sweeps_to_csv(outcomes);
      if (config.assert_compact && verdict.verdict != Verdict::Compact) exit_code = 2;
      break;
    }
    case Command::Chains: {
      const auto checks = run_chain_checks(family, config.eps, sweeps, ygrid, threads);
      Json entries = Json::array();
      std::ostringstream table;
      table << "# columns: theorem,premise,conclusion,bound,slack,vacuous,holds\n";
      for (const auto& check : checks) {
        entries.push_back(chain_check_to_json(check));
        table << chain_theorem_name(check.theorem_id) << ',' << format_double(check.premise_value) << ','
              << format_double(check.conclusion_value) << ',' << format_double(check.constant * check.eps) << ','
              << format_double(check.slack) << ',' << (check.vacuous ? 1 : 0) << ',' << (check.holds ? 1 : 0) << '\n';
      }
      report["chains"] = std::move(entries);
      csv = table.str();
      break;
    }
    case Command::Sweep: {
      if (config.criterion.empty()) throw_error(ErrorCode::Config, "sweep requires --criterion");
      const Criterion criterion = criterion_from_name(config.criterion);
      const auto& scale_list = config.scales.empty() ? sweeps.scales_for(criterion) : config.scales;
      const auto reports = scale_sweep(family, criterion, scale_list, ygrid, thresholds, sweeps.n_shifts, threads);
      Json entries = Json::array();
      for (const auto& r : reports) entries.push_back(report_to_json(r));
      report["sweep"] = std::move(entries);
      csv = reports_to_csv(reports);
      break;
    }
  }

  write_output(config, config.format == "csv" ? csv : report.dump(2) + "\n");
  return exit_code;
}

int main_entry(int argc, const char* const* argv) {
  try {
    const RunConfig config = parse(argc, argv);
    return run(config);
  } catch (const Error& e) {
    std::cerr << "pego-lab: " << error_code_name(e.code()) << " error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "pego-lab: error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace pego::cli
