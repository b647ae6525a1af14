#pragma once

#include <string>

#include <json.hpp>

#include "pego/diagnosis.hpp"
#include "pego/families.hpp"
#include "pego/transform.hpp"

namespace pego {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "pego-lab/1";

// Function DSL:  {"kind":"exponential","a":1.0} | {"kind":"indicator","a":..,"b":..}
//              | {"kind":"bump","delta":..[,"amplitude":..]} | {"kind":"sampled","dt":..,"t_max":..,"values":[[re,im],..]}
//              | {"kind":"translate","s":..,"base":{..}} | {"kind":"modulate","omega":..,"base":{..}}
//              | {"kind":"scale","c":[re,im],"base":{..}} | {"kind":"damp","rate":..,"base":{..}}
//              | {"kind":"sum","terms":[..]}
Json function_to_json(const HalfLineFunction& f);
HalfLineFunction function_from_json(const Json& j);

Json grid_to_json(const TimeGrid& grid);
TimeGrid grid_from_json(const Json& j);

Json frequency_grid_to_json(const FrequencyGrid& grid);

Json family_to_json(const FamilySpec& spec);
FamilySpec family_from_json(const Json& j);

Json norms_to_json(const PegoNorms& norms);
Json slice_to_json(const SpectrumSlice& slice);
Json report_to_json(const CriterionReport& report);
Json sweep_outcome_to_json(const CriterionSweepOutcome& outcome);
Json oracle_to_json(const NetOracleResult& oracle);
Json verdict_to_json(const CompactnessVerdict& verdict);
Json chain_check_to_json(const ChainCheck& check);

/// CSV with a leading `# columns: ...` comment line. Deterministic "%.17g"
/// number formatting.
std::string slice_to_csv(const std::vector<SpectrumSlice>& slices);
std::string sweeps_to_csv(const std::vector<CriterionSweepOutcome>& outcomes);
std::string reports_to_csv(const std::vector<CriterionReport>& reports);

std::string format_double(double v);

}  // namespace pego
