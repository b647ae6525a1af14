#include "pego/serialize.hpp"

#include <cstdio>
#include <sstream>

namespace pego {

namespace {

Json complex_to_json(const Complex& c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2) return Complex(j[0].get<double>(), j[1].get<double>());
  throw_error(ErrorCode::Config, "malformed DSL: complex value must be a number or [re, im]");
}

double require_number(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) {
    std::ostringstream msg;
    msg << "malformed DSL: missing numeric field '" << key << "'";
    throw_error(ErrorCode::Config, msg.str());
  }
  return j[key].get<double>();
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Json function_to_json(const HalfLineFunction& f) {
  using HF = HalfLineFunction;
  const auto& n = f.node();
  Json j;
  if (const auto* e = std::get_if<HF::Exponential>(&n)) {
    j["kind"] = "exponential";
    j["a"] = e->a;
  } else if (const auto* ind = std::get_if<HF::Indicator>(&n)) {
    j["kind"] = "indicator";
    j["a"] = ind->a;
    j["b"] = ind->b;
  } else if (const auto* b = std::get_if<HF::PolyBump>(&n)) {
    j["kind"] = "bump";
    j["delta"] = b->delta;
    j["amplitude"] = b->amplitude;
  } else if (const auto* s = std::get_if<HF::Sampled>(&n)) {
    j["kind"] = "sampled";
    j["dt"] = s->grid.dt;
    j["t_max"] = s->grid.t_max;
    Json values = Json::array();
    for (const auto& v : s->values) values.push_back(complex_to_json(v));
    j["values"] = std::move(values);
  } else if (const auto* tr = std::get_if<HF::Translate>(&n)) {
    j["kind"] = "translate";
    j["s"] = tr->s;
    j["base"] = function_to_json(*tr->base);
  } else if (const auto* m = std::get_if<HF::Modulate>(&n)) {
    j["kind"] = "modulate";
    j["omega"] = m->omega;
    j["base"] = function_to_json(*m->base);
  } else if (const auto* sc = std::get_if<HF::Scale>(&n)) {
    j["kind"] = "scale";
    j["c"] = complex_to_json(sc->c);
    j["base"] = function_to_json(*sc->base);
  } else if (const auto* d = std::get_if<HF::Damp>(&n)) {
    j["kind"] = "damp";
    j["rate"] = d->rate;
    j["base"] = function_to_json(*d->base);
  } else {
    const auto& sum = std::get<HF::Sum>(n);
    j["kind"] = "sum";
    Json terms = Json::array();
    for (const auto& term : sum.terms) terms.push_back(function_to_json(term));
    j["terms"] = std::move(terms);
  }
  return j;
}

HalfLineFunction function_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw_error(ErrorCode::Config, "malformed DSL: every function needs a string 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "exponential") return HalfLineFunction::exponential(require_number(j, "a"));
  if (kind == "indicator") return HalfLineFunction::indicator(require_number(j, "a"), require_number(j, "b"));
  if (kind == "bump") {
    const double delta = require_number(j, "delta");
    if (j.contains("amplitude")) return HalfLineFunction::poly_bump(delta, require_number(j, "amplitude"));
    return HalfLineFunction::poly_bump(delta);
  }
  if (kind == "sampled") {
    TimeGrid grid(require_number(j, "dt"), require_number(j, "t_max"));
    if (!j.contains("values") || !j["values"].is_array())
      throw_error(ErrorCode::Config, "malformed DSL: sampled kind needs a 'values' array");
    std::vector<Complex> values;
    values.reserve(j["values"].size());
    for (const auto& v : j["values"]) values.push_back(complex_from_json(v));
    return HalfLineFunction::sampled(grid, std::move(values));
  }
  if (kind == "translate") return HalfLineFunction::translate(function_from_json(j.at("base")), require_number(j, "s"));
  if (kind == "modulate")
    return HalfLineFunction::modulate(function_from_json(j.at("base")), require_number(j, "omega"));
  if (kind == "scale") {
    if (!j.contains("c")) throw_error(ErrorCode::Config, "malformed DSL: scale kind needs 'c'");
    return HalfLineFunction::scale(function_from_json(j.at("base")), complex_from_json(j["c"]));
  }
  if (kind == "damp") return HalfLineFunction::damp(function_from_json(j.at("base")), require_number(j, "rate"));
  if (kind == "sum") {
    std::vector<HalfLineFunction> terms;
    if (j.contains("terms")) {
      for (const auto& term : j["terms"]) terms.push_back(function_from_json(term));
    }
    return HalfLineFunction::sum(std::move(terms));
  }
  std::ostringstream msg;
  msg << "malformed DSL: unknown kind '" << kind << "'";
  throw_error(ErrorCode::Config, msg.str());
}

Json grid_to_json(const TimeGrid& grid) {
  return Json{{"dt", grid.dt}, {"t_max", grid.t_max}, {"n", grid.n}};
}

TimeGrid grid_from_json(const Json& j) { return TimeGrid(require_number(j, "dt"), require_number(j, "t_max")); }

Json frequency_grid_to_json(const FrequencyGrid& grid) {
  return Json{{"dy", grid.dy}, {"y_max", grid.y_max()}, {"nodes", grid.node_count()}};
}

Json family_to_json(const FamilySpec& spec) {
  Json j;
  j["name"] = spec.name;
  j["order"] = spec.order.x;
  j["label"] = label_name(spec.label);
  j["rationale"] = spec.rationale;
  j["parameters"] = spec.parameters;
  Json members = Json::array();
  for (const auto& f : spec.members) members.push_back(function_to_json(f));
  j["members"] = std::move(members);
  return j;
}

FamilySpec family_from_json(const Json& j) {
  FamilySpec spec;
  spec.name = j.value("name", std::string("custom"));
  spec.order = Order(j.value("order", 0.0));
  const std::string label = j.value("label", std::string("unknown"));
  spec.label = label == "compact" ? Label::Compact : label == "non-compact" ? Label::NonCompact : Label::Unknown;
  spec.rationale = j.value("rationale", std::string(""));
  if (j.contains("parameters")) {
    for (const auto& p : j["parameters"]) spec.parameters.push_back(p.get<double>());
  }
  if (!j.contains("members") || !j["members"].is_array() || j["members"].empty())
    throw_error(ErrorCode::Config, "malformed DSL: family needs a nonempty 'members' array");
  for (const auto& m : j["members"]) spec.members.push_back(function_from_json(m));
  return spec;
}

Json norms_to_json(const PegoNorms& norms) { return Json{{"l1", norms.l1}, {"l2", norms.l2}}; }

Json slice_to_json(const SpectrumSlice& slice) {
  Json j;
  j["order"] = slice.order.x;
  j["grid"] = frequency_grid_to_json(slice.nodes);
  j["tail_bound"] = slice.tail_bound;
  Json values = Json::array();
  for (int k = 0; k < slice.nodes.node_count(); ++k) {
    values.push_back(Json::array({slice.y(k), slice.values[k].real(), slice.values[k].imag()}));
  }
  j["values"] = std::move(values);
  return j;
}

Json report_to_json(const CriterionReport& report) {
  Json j;
  j["criterion"] = criterion_name(report.criterion);
  Json scales;
  scales["eps"] = report.scales.eps;
  if (report.scales.delta > 0.0) scales["delta"] = report.scales.delta;
  if (report.scales.T > 0.0) scales["T"] = report.scales.T;
  j["scales"] = std::move(scales);
  j["per_member"] = report.per_member;
  j["supremum"] = report.supremum;
  j["pass"] = report.pass;
  j["error_budget"] = report.error_budget;
  return j;
}

Json sweep_outcome_to_json(const CriterionSweepOutcome& outcome) {
  Json j;
  j["criterion"] = criterion_name(outcome.criterion);
  j["passed"] = outcome.passed;
  if (outcome.passed) j["passed_at"] = outcome.passed_at;
  j["definitive_fail"] = outcome.definitive_fail;
  Json reports = Json::array();
  for (const auto& r : outcome.reports) reports.push_back(report_to_json(r));
  j["reports"] = std::move(reports);
  return j;
}

Json oracle_to_json(const NetOracleResult& oracle) {
  Json j;
  j["eps"] = oracle.eps;
  j["prefixes"] = oracle.prefixes;
  j["net_sizes"] = oracle.net_sizes;
  j["saturated"] = oracle.saturated;
  return j;
}

Json verdict_to_json(const CompactnessVerdict& verdict) {
  Json j;
  j["verdict"] = verdict_name(verdict.verdict);
  j["agreement"] = verdict.agreement;
  j["l2_bound"] = report_to_json(verdict.bound);
  auto route = [](const RouteVerdict& r) {
    Json out;
    out["verdict"] = verdict_name(r.verdict);
    Json criteria = Json::array();
    for (const auto& c : r.criteria) criteria.push_back(sweep_outcome_to_json(c));
    out["criteria"] = std::move(criteria);
    return out;
  };
  j["laplace_route"] = route(verdict.laplace_route);
  j["rk_route"] = route(verdict.rk_route);
  j["oracle"] = oracle_to_json(verdict.oracle);
  return j;
}

Json chain_check_to_json(const ChainCheck& check) {
  Json j;
  j["theorem"] = chain_theorem_name(check.theorem_id);
  j["eps"] = check.eps;
  j["premise_value"] = check.premise_value;
  j["conclusion_value"] = check.conclusion_value;
  j["constant"] = check.constant;
  j["slack"] = check.slack;
  if (check.delta > 0.0) j["delta"] = check.delta;
  if (check.T > 0.0) j["T"] = check.T;
  j["vacuous"] = check.vacuous;
  j["holds"] = check.holds;
  if (!check.parts.empty()) {
    Json parts = Json::array();
    for (const auto& p : check.parts) {
      Json pj;
      pj["label"] = p.label;
      pj["premise_value"] = p.premise_value;
      pj["conclusion_value"] = p.conclusion_value;
      pj["bound"] = p.bound;
      pj["vacuous"] = p.vacuous;
      pj["holds"] = p.holds;
      parts.push_back(std::move(pj));
    }
    j["parts"] = std::move(parts);
  }
  return j;
}

std::string slice_to_csv(const std::vector<SpectrumSlice>& slices) {
  std::ostringstream out;
  out << "# columns: member,y,re,im,abs\n";
  for (std::size_t m = 0; m < slices.size(); ++m) {
    const auto& slice = slices[m];
    for (int k = 0; k < slice.nodes.node_count(); ++k) {
      const Complex v = slice.values[k];
      out << m << ',' << format_double(slice.y(k)) << ',' << format_double(v.real()) << ',' << format_double(v.imag())
          << ',' << format_double(std::abs(v)) << '\n';
    }
  }
  return out.str();
}

std::string sweeps_to_csv(const std::vector<CriterionSweepOutcome>& outcomes) {
  std::ostringstream out;
  out << "# columns: criterion,scale,supremum,pass\n";
  for (const auto& outcome : outcomes) {
    for (const auto& r : outcome.reports) {
      const double scale = r.scales.delta > 0.0 ? r.scales.delta : r.scales.T;
      out << criterion_name(outcome.criterion) << ',' << format_double(scale) << ',' << format_double(r.supremum)
          << ',' << (r.pass ? 1 : 0) << '\n';
    }
  }
  return out.str();
}

std::string reports_to_csv(const std::vector<CriterionReport>& reports) {
  std::ostringstream out;
  out << "# columns: criterion,scale,supremum,pass\n";
  for (const auto& r : reports) {
    const double scale = r.scales.delta > 0.0 ? r.scales.delta : r.scales.T;
    out << criterion_name(r.criterion) << ',' << format_double(scale) << ',' << format_double(r.supremum) << ','
        << (r.pass ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace pego
