#include "fivecard/serialize.hpp"

#include <array>
#include <cstdio>
#include <stdexcept>

namespace fivecard {

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

json to_json(const ShiftDist<double>& dist) {
  json j = json::array();
  for (int k = 0; k < 5; ++k) j.push_back(dist.at(k));
  return j;
}

ShiftDist<double> shift_dist_from_json(const json& j) {
  if (!j.is_array() || j.size() != 5) {
    throw std::invalid_argument("shift distribution JSON must be an array of 5 numbers");
  }
  std::array<double, 5> p{};
  for (int k = 0; k < 5; ++k) p[static_cast<std::size_t>(k)] = j.at(k).get<double>();
  return ShiftDist<double>(p);
}

json to_json(const BiasSpec& spec) {
  return json{{"epsilon", spec.epsilon}, {"s_star", spec.s_star}};
}

BiasSpec bias_spec_from_json(const json& j) {
  BiasSpec spec;
  spec.epsilon = j.at("epsilon").get<double>();
  spec.s_star = j.at("s_star").get<int>();
  spec.validate();
  return spec;
}

json to_json(const CutChain& chain) {
  return json{{"a", chain.a}, {"T", chain.shuffles}};
}

CutChain cut_chain_from_json(const json& j) {
  CutChain chain;
  chain.a = j.at("a").get<double>();
  chain.shuffles = j.at("T").get<long>();
  chain.validate();
  return chain;
}

json to_json(const PosteriorTable<double>& table) {
  json list = json::array();
  for (const auto& [final_arr, fin] : table.finals) {
    json posteriors = json::object();
    for (const auto& [init, p] : fin.posterior) posteriors[init.str()] = p;
    list.push_back(json{{"final", final_arr.str()},
                        {"case", to_string(fin.label)},
                        {"marginal", fin.marginal},
                        {"posteriors", posteriors}});
  }
  return list;
}

PosteriorTable<double> posterior_table_from_json(const json& j, int s_star) {
  if (!j.is_array()) {
    throw std::invalid_argument("posterior table JSON must be a list of final entries");
  }
  PosteriorTable<double> table;
  table.s_star = s_star;
  for (const json& entry : j) {
    FinalSummary<double> fin;
    fin.label = case_label_from_string(entry.at("case").get<std::string>());
    fin.marginal = entry.at("marginal").get<double>();
    for (const auto& [key, value] : entry.at("posteriors").items()) {
      fin.posterior.emplace(Arrangement::parse(key), value.get<double>());
    }
    table.finals.emplace(Arrangement::parse(entry.at("final").get<std::string>()),
                         std::move(fin));
  }
  return table;
}

std::string to_csv(const PosteriorTable<double>& table) {
  std::string out = "initial,final,case,posterior\n";
  for (const auto& [final_arr, fin] : table.finals) {
    for (const auto& [init, p] : fin.posterior) {
      out += init.str();
      out += ',';
      out += final_arr.str();
      out += ',';
      out += to_string(fin.label);
      out += ',';
      out += format_number(p);
      out += '\n';
    }
  }
  return out;
}

json to_json(const BoundQuery& query, const BoundResult& result) {
  json j{{"a", query.a},
         {"C", query.deviation_bound},
         {"parity", to_string(query.parity)}};
  auto put = [&j](const char* key, const auto& opt) {
    if (opt) {
      j[key] = *opt;
    } else {
      j[key] = nullptr;
    }
  };
  switch (result.kind) {
    case BoundKind::Finite:
      j["kind"] = "finite";
      put("analytic_T_cond1", result.analytic_cond1);
      put("analytic_T_cond2", result.analytic_cond2);
      put("minimal_T", result.minimal_T);
      put("achieved_deviation", result.achieved_deviation);
      break;
    case BoundKind::AnyT:
      j["kind"] = "any";
      j["analytic_T_cond1"] = nullptr;
      j["analytic_T_cond2"] = nullptr;
      j["minimal_T"] = "any";
      put("achieved_deviation", result.achieved_deviation);
      break;
    case BoundKind::NoFiniteT:
      j["kind"] = "unreachable";
      j["analytic_T_cond1"] = nullptr;
      j["analytic_T_cond2"] = nullptr;
      j["minimal_T"] = "unreachable";
      j["achieved_deviation"] = nullptr;
      break;
  }
  return j;
}

json to_json(const SimResult& result) {
  json joint = json::object();
  for (const auto& [init, row] : result.joint_counts) {
    json cells = json::object();
    for (const auto& [fin, count] : row) cells[fin.str()] = count;
    joint[init.str()] = cells;
  }
  json shifts = json::array();
  for (long c : result.shift_counts) shifts.push_back(c);
  return json{{"n_samples", result.n_samples},
              {"seed", result.seed},
              {"rng", result.rng_algorithm},
              {"s_star", result.empirical_posterior.s_star},
              {"joint_counts", joint},
              {"shift_counts", shifts},
              {"empirical_posterior", to_json(result.empirical_posterior)},
              {"empirical_and_rate", result.empirical_and_rate},
              {"std_error_bound", result.std_error_bound}};
}

SimResult sim_result_from_json(const json& j) {
  SimResult result;
  result.n_samples = j.at("n_samples").get<long>();
  result.seed = j.at("seed").get<std::uint64_t>();
  result.rng_algorithm = j.at("rng").get<std::string>();
  for (const auto& [init_key, row] : j.at("joint_counts").items()) {
    const Arrangement init = Arrangement::parse(init_key);
    for (const auto& [fin_key, count] : row.items()) {
      result.joint_counts[init][Arrangement::parse(fin_key)] = count.get<long>();
    }
  }
  const json& shifts = j.at("shift_counts");
  for (int k = 0; k < 5; ++k) {
    result.shift_counts[static_cast<std::size_t>(k)] = shifts.at(k).get<long>();
  }
  result.empirical_posterior = posterior_table_from_json(
      j.at("empirical_posterior"), j.at("s_star").get<int>());
  result.empirical_and_rate = j.at("empirical_and_rate").get<double>();
  result.std_error_bound = j.at("std_error_bound").get<double>();
  return result;
}

}  // namespace fivecard
