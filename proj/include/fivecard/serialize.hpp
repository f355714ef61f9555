#pragma once

#include <string>

#include "json.hpp"

#include "fivecard/bounds.hpp"
#include "fivecard/leakage.hpp"
#include "fivecard/montecarlo.hpp"
#include "fivecard/shuffle.hpp"

namespace fivecard {

using json = nlohmann::json;

/// Renders with 12 significant digits and a '.' decimal separator, the
/// format used in all CSV output.
std::string format_number(double x);

// Shift distributions serialize as a bare array of five probabilities
// indexed by cut depth.
json to_json(const ShiftDist<double>& dist);
ShiftDist<double> shift_dist_from_json(const json& j);

json to_json(const BiasSpec& spec);
BiasSpec bias_spec_from_json(const json& j);

// A chain serializes as {"a": number, "T": integer}.
json to_json(const CutChain& chain);
CutChain cut_chain_from_json(const json& j);

// A posterior table serializes as a list of
// {"final": ..., "case": "Case1"|"Case2"|"Unreachable",
//  "marginal": ..., "posteriors": {start: probability}}.
// Unreachable finals carry marginal 0 and an empty posteriors object.
json to_json(const PosteriorTable<double>& table);
PosteriorTable<double> posterior_table_from_json(const json& j, int s_star);

/// Flat CSV with header "initial,final,case,posterior"; unreachable finals
/// have no posterior entries and therefore no rows.
std::string to_csv(const PosteriorTable<double>& table);

// Bound results carry their query alongside.  The sentinel string "any"
// replaces minimal_T when the chain mixes in one step (a = b) and
// "unreachable" when it never mixes (a = 1).
json to_json(const BoundQuery& query, const BoundResult& result);

json to_json(const SimResult& result);
SimResult sim_result_from_json(const json& j);

}  // namespace fivecard
