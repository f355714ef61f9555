// Command-line front end: posterior tables, sweeps, shuffle-count bounds,
// seeded simulation, and single protocol round traces, with table, CSV, and
// JSON output.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fivecard/arrangement.hpp"
#include "fivecard/bounds.hpp"
#include "fivecard/leakage.hpp"
#include "fivecard/montecarlo.hpp"
#include "fivecard/rng.hpp"
#include "fivecard/serialize.hpp"
#include "fivecard/shuffle.hpp"

namespace {

using namespace fivecard;

enum class Format { Json, Csv, Table };

// Flag-structure problems exit with 2, value-domain problems (from the
// library's validation) with 3, violated internal assertions with 4.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "table") return Format::Table;
  throw UsageError("output format must be one of json/csv/table, got \"" + text + "\"");
}

Format resolve_format(const std::string& flag_text) {
  if (!flag_text.empty()) return parse_format(flag_text);
  const char* env = std::getenv("FIVECARD_FORMAT");
  if (env != nullptr && *env != '\0') return parse_format(env);
  return Format::Table;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  parts.push_back(current);
  return parts;
}

double parse_real(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected a number, got \"" + text + "\"");
  }
  if (used != text.size()) {
    throw std::invalid_argument("expected a number, got \"" + text + "\"");
  }
  return value;
}

long parse_integer(const std::string& text) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected an integer, got \"" + text + "\"");
  }
  if (used != text.size()) {
    throw std::invalid_argument("expected an integer, got \"" + text + "\"");
  }
  return value;
}

// "start:stop:step", stop included when within half a step.
std::vector<double> parse_real_range(const std::string& text) {
  const std::vector<std::string> parts = split(text, ':');
  if (parts.size() != 3) {
    throw std::domain_error("range must look like start:stop:step, got \"" + text + "\"");
  }
  const double start = parse_real(parts[0]);
  const double stop = parse_real(parts[1]);
  const double step = parse_real(parts[2]);
  if (!(step > 0.0)) throw std::domain_error("range step must be positive");
  if (stop < start) throw std::domain_error("range is inverted: stop < start");
  std::vector<double> grid;
  for (long i = 0;; ++i) {
    const double x = start + static_cast<double>(i) * step;
    if (x > stop + step / 2.0) break;
    grid.push_back(x);
  }
  if (grid.empty()) throw std::domain_error("range is empty");
  return grid;
}

// "start:stop" with unit step, both ends included.
std::vector<long> parse_integer_range(const std::string& text) {
  const std::vector<std::string> parts = split(text, ':');
  if (parts.size() != 2) {
    throw std::domain_error("range must look like start:stop, got \"" + text + "\"");
  }
  const long start = parse_integer(parts[0]);
  const long stop = parse_integer(parts[1]);
  if (stop < start) throw std::domain_error("range is inverted: stop < start");
  std::vector<long> grid;
  for (long t = start; t <= stop; ++t) grid.push_back(t);
  return grid;
}

std::string pad(const std::string& text, std::size_t width) {
  std::string out = text;
  while (out.size() < width) out += ' ';
  return out;
}

void print_posterior_comparison(Format format, json meta,
                                const PosteriorTable<double>& closed,
                                const PosteriorTable<double>& exact, double max_diff) {
  switch (format) {
    case Format::Json: {
      meta["closed"] = to_json(closed);
      meta["exact"] = to_json(exact);
      meta["max_abs_diff"] = max_diff;
      std::cout << meta.dump(2) << "\n";
      return;
    }
    case Format::Csv: {
      std::cout << "initial,final,case,posterior,exact_posterior,abs_diff\n";
      for (const auto& [final_arr, fin] : closed.finals) {
        for (const auto& [init, p] : fin.posterior) {
          const double q = exact.entry(init, final_arr);
          std::cout << init.str() << ',' << final_arr.str() << ','
                    << to_string(fin.label) << ',' << format_number(p) << ','
                    << format_number(q) << ',' << format_number(std::fabs(p - q))
                    << "\n";
        }
      }
      return;
    }
    case Format::Table: {
      std::cout << pad("initial", 9) << pad("final", 9) << pad("case", 13)
                << pad("closed", 18) << pad("exact", 18) << "\n";
      for (const auto& [final_arr, fin] : closed.finals) {
        if (fin.label == CaseLabel::Unreachable) {
          std::cout << pad("-", 9) << pad(final_arr.str(), 9)
                    << pad(to_string(fin.label), 13) << "\n";
          continue;
        }
        for (const auto& [init, p] : fin.posterior) {
          std::cout << pad(init.str(), 9) << pad(final_arr.str(), 9)
                    << pad(to_string(fin.label), 13)
                    << pad(format_number(p), 18)
                    << pad(format_number(exact.entry(init, final_arr)), 18) << "\n";
        }
      }
      std::cout << "max |closed - exact| = " << format_number(max_diff) << "\n";
      return;
    }
  }
}

int cmd_posterior(Format format, bool single, double epsilon, int s_star, double a,
                  long shuffles) {
  PosteriorTable<double> closed, exact;
  json meta;
  if (single) {
    const BiasSpec spec{epsilon, s_star};
    spec.validate();
    closed = posterior_closed_single<double>(epsilon, s_star);
    exact = posterior_exact<double>(default_prior<double>(), bias_distribution(spec), s_star);
    meta = json{{"mode", "single"}, {"epsilon", epsilon}, {"s_star", s_star}};
  } else {
    const CutChain chain{a, shuffles};
    chain.validate();
    closed = posterior_closed_repeated(chain);
    exact = posterior_exact<double>(default_prior<double>(), chain_distribution_power(chain), 0);
    meta = json{{"mode", "chain"}, {"a", a}, {"T", shuffles}, {"s_star", 0}};
  }
  const double max_diff = max_posterior_difference(closed, exact);
  if (!(max_diff < 1e-10)) {
    throw std::logic_error("closed form and exhaustive oracle disagree by " +
                           format_number(max_diff));
  }
  print_posterior_comparison(format, std::move(meta), closed, exact, max_diff);
  return 0;
}

struct SweepRow {
  double x = 0.0;
  double match = 0.0;
  double other = 0.0;
  std::optional<double> case2;
  double marginal1 = 0.0;
};

SweepRow sweep_row(double x, const PosteriorTable<double>& table, int s_star) {
  const std::vector<Arrangement>& starts = restricted_initial_arrangements();
  const Arrangement& own = starts[0];
  const Arrangement& peer = starts[1];
  SweepRow row;
  row.x = x;
  row.match = table.entry(own, own.rotated(s_star));
  row.other = table.entry(own, peer.rotated(s_star));
  row.marginal1 = table.summary(own.rotated(s_star)).marginal;
  for (const auto& [final_arr, fin] : table.finals) {
    if (fin.label == CaseLabel::Case2) {
      row.case2 = fin.posterior.begin()->second;
      break;
    }
  }
  return row;
}

void print_sweep(Format format, const std::string& x_name, const std::vector<SweepRow>& rows) {
  switch (format) {
    case Format::Json: {
      json list = json::array();
      for (const SweepRow& row : rows) {
        json entry{{x_name, row.x},
                   {"posterior_match", row.match},
                   {"posterior_other_case1", row.other},
                   {"final_marginal_case1", row.marginal1}};
        entry["posterior_case2"] = row.case2 ? json(*row.case2) : json(nullptr);
        list.push_back(entry);
      }
      std::cout << list.dump(2) << "\n";
      return;
    }
    case Format::Csv:
    case Format::Table: {
      const bool csv = format == Format::Csv;
      auto cell = [csv](const std::string& text, std::size_t width) {
        return csv ? text : pad(text, width);
      };
      const char* sep = csv ? "," : "";
      std::cout << cell(x_name, 10) << sep << cell("posterior_match", 20) << sep
                << cell("posterior_other_case1", 24) << sep
                << cell("posterior_case2", 18) << sep << cell("final_marginal_case1", 20)
                << "\n";
      for (const SweepRow& row : rows) {
        std::cout << cell(format_number(row.x), 10) << sep
                  << cell(format_number(row.match), 20) << sep
                  << cell(format_number(row.other), 24) << sep
                  << cell(row.case2 ? format_number(*row.case2) : "", 18) << sep
                  << cell(format_number(row.marginal1), 20) << "\n";
      }
      return;
    }
  }
}

int cmd_sweep(Format format, bool single, const std::string& epsilon_range, int s_star,
              double a, const std::string& shuffle_range) {
  std::vector<SweepRow> rows;
  std::string x_name;
  if (single) {
    x_name = "epsilon";
    for (double epsilon : parse_real_range(epsilon_range)) {
      rows.push_back(sweep_row(epsilon, posterior_closed_single<double>(epsilon, s_star), s_star));
    }
  } else {
    x_name = "T";
    detail::check_stay_probability(a);
    for (long t : parse_integer_range(shuffle_range)) {
      if (t < 0) throw std::domain_error("shuffle count must be nonnegative");
      rows.push_back(sweep_row(static_cast<double>(t),
                               posterior_closed_repeated<double>(a, t), 0));
    }
  }
  print_sweep(format, x_name, rows);
  return 0;
}

int cmd_bound(Format format, double a, double deviation_bound, const std::string& parity_text) {
  BoundQuery query;
  query.a = a;
  query.deviation_bound = deviation_bound;
  query.parity = parity_from_string(parity_text);
  const BoundResult result = bound_analysis(query);
  const json j = to_json(query, result);
  switch (format) {
    case Format::Json:
      std::cout << j.dump(2) << "\n";
      return 0;
    case Format::Csv: {
      const char* keys[] = {"analytic_T_cond1", "analytic_T_cond2", "minimal_T",
                            "achieved_deviation"};
      std::cout << "a,C,parity,kind,analytic_T_cond1,analytic_T_cond2,minimal_T,"
                   "achieved_deviation\n";
      std::cout << format_number(a) << ',' << format_number(deviation_bound) << ','
                << parity_text << ',' << j["kind"].get<std::string>();
      for (const char* key : keys) {
        std::cout << ',';
        const json& value = j[key];
        if (value.is_null()) {
          // empty cell
        } else if (value.is_string()) {
          std::cout << value.get<std::string>();
        } else if (value.is_number_integer()) {
          std::cout << value.get<long>();
        } else {
          std::cout << format_number(value.get<double>());
        }
      }
      std::cout << "\n";
      return 0;
    }
    case Format::Table: {
      std::cout << "a = " << format_number(a) << ", C = " << format_number(deviation_bound)
                << ", parity = " << parity_text << "\n";
      switch (result.kind) {
        case BoundKind::AnyT:
          std::cout << "minimal T: any (a = b, the deck is uniform after one shuffle)\n";
          break;
        case BoundKind::NoFiniteT:
          std::cout << "minimal T: unreachable (a = 1, the chain never mixes)\n";
          break;
        case BoundKind::Finite:
          std::cout << "analytic threshold, T even or a > b: "
                    << format_number(*result.analytic_cond1) << "\n"
                    << "analytic threshold, T odd and a < b: "
                    << format_number(*result.analytic_cond2) << "\n"
                    << "minimal T: " << *result.minimal_T << "\n"
                    << "achieved deviation: " << format_number(*result.achieved_deviation)
                    << "\n";
          break;
      }
      return 0;
    }
  }
  return 0;
}

int cmd_simulate(Format format, bool single, double epsilon, int s_star, double a,
                 long shuffles, long n_samples, std::uint64_t seed) {
  SimConfig config;
  config.n_samples = n_samples;
  config.seed = seed;
  ShiftDist<double> dist = ShiftDist<double>::uniform();
  ShiftDist<double> expected_shifts = dist;
  json shuffle_json;
  int label = 0;
  if (single) {
    const BiasSpec spec{epsilon, s_star};
    spec.validate();
    config.shuffle = spec;
    dist = bias_distribution(spec);
    expected_shifts = dist;
    shuffle_json = to_json(spec);
    label = s_star;
  } else {
    const CutChain chain{a, shuffles};
    chain.validate();
    config.shuffle = chain;
    dist = chain_distribution_power(chain);
    expected_shifts = chain_distribution_closed(chain);
    shuffle_json = to_json(chain);
    label = 0;
  }
  const PosteriorTable<double> exact = posterior_exact<double>(default_prior<double>(), dist, label);
  const SimResult result = simulate(config);

  double max_diff = 0.0;
  for (const auto& [final_arr, fin] : exact.finals) {
    const FinalSummary<double>& emp = result.empirical_posterior.summary(final_arr);
    if (fin.label == CaseLabel::Unreachable || emp.label == CaseLabel::Unreachable) continue;
    for (const auto& [init, p] : fin.posterior) {
      max_diff = std::max(max_diff, std::fabs(p - emp.posterior.at(init)));
    }
  }
  const double max_sigma = max_diff / result.std_error_bound;

  switch (format) {
    case Format::Json: {
      const json out{{"config",
                      {{"prior", "default"},
                       {"shuffle", shuffle_json},
                       {"n_samples", n_samples},
                       {"seed", seed}}},
                     {"result", to_json(result)},
                     {"exact_posterior", to_json(exact)},
                     {"expected_shift_law", to_json(expected_shifts)},
                     {"max_abs_diff", max_diff},
                     {"max_sigma_multiple", max_sigma}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    case Format::Csv: {
      std::cout << "initial,final,case,exact,empirical,abs_diff,sigma_multiple\n";
      for (const auto& [final_arr, fin] : exact.finals) {
        const FinalSummary<double>& emp = result.empirical_posterior.summary(final_arr);
        if (fin.label == CaseLabel::Unreachable || emp.label == CaseLabel::Unreachable) {
          continue;
        }
        for (const auto& [init, p] : fin.posterior) {
          const double e = emp.posterior.at(init);
          std::cout << init.str() << ',' << final_arr.str() << ','
                    << to_string(fin.label) << ',' << format_number(p) << ','
                    << format_number(e) << ',' << format_number(std::fabs(p - e)) << ','
                    << format_number(std::fabs(p - e) / result.std_error_bound) << "\n";
        }
      }
      return 0;
    }
    case Format::Table: {
      std::cout << "samples: " << result.n_samples << ", seed: " << result.seed
                << ", rng: " << result.rng_algorithm << "\n"
                << "std error bound 1/(2*sqrt(n)) = " << format_number(result.std_error_bound)
                << "\n"
                << "empirical AND rate = " << format_number(result.empirical_and_rate) << "\n\n";
      std::cout << pad("initial", 9) << pad("final", 9) << pad("case", 13)
                << pad("exact", 16) << pad("empirical", 16) << pad("sigma", 10) << "\n";
      for (const auto& [final_arr, fin] : exact.finals) {
        const FinalSummary<double>& emp = result.empirical_posterior.summary(final_arr);
        if (fin.label == CaseLabel::Unreachable || emp.label == CaseLabel::Unreachable) {
          continue;
        }
        for (const auto& [init, p] : fin.posterior) {
          const double e = emp.posterior.at(init);
          std::cout << pad(init.str(), 9) << pad(final_arr.str(), 9)
                    << pad(to_string(fin.label), 13) << pad(format_number(p), 16)
                    << pad(format_number(e), 16)
                    << pad(format_number(std::fabs(p - e) / result.std_error_bound), 10)
                    << "\n";
        }
      }
      std::cout << "\n" << pad("depth", 7) << pad("expected", 16) << pad("empirical", 16)
                << pad("sigma", 10) << "\n";
      for (int k = 0; k < 5; ++k) {
        const double expected = expected_shifts.at(k);
        const double empirical = static_cast<double>(result.shift_counts[static_cast<std::size_t>(k)]) /
                                 static_cast<double>(result.n_samples);
        std::cout << pad(std::to_string(k), 7) << pad(format_number(expected), 16)
                  << pad(format_number(empirical), 16)
                  << pad(format_number(std::fabs(expected - empirical) / result.std_error_bound), 10)
                  << "\n";
      }
      std::cout << "\nmax |empirical - exact| = " << format_number(max_diff) << " ("
                << format_number(max_sigma) << " sigma)\n";
      return 0;
    }
  }
  return 0;
}

int cmd_protocol(Format format, int a, int b, const std::string& cuts_text, bool use_seed,
                 std::uint64_t seed, long num_cuts) {
  if (a < 0 || a > 1 || b < 0 || b > 1) {
    throw std::domain_error("input bits must be 0 or 1");
  }
  std::vector<int> cuts;
  if (use_seed) {
    if (num_cuts < 1) throw std::domain_error("cut count must be positive");
    Xoshiro256StarStar rng(seed);
    for (long i = 0; i < num_cuts; ++i) {
      int depth = static_cast<int>(rng.next_unit() * 5.0);
      if (depth > 4) depth = 4;
      cuts.push_back(depth);
    }
  } else {
    for (const std::string& part : split(cuts_text, ',')) {
      const long depth = parse_integer(part);
      if (depth < 0 || depth > 4) {
        throw std::domain_error("cut depth must lie in 0..4, got " + part);
      }
      cuts.push_back(static_cast<int>(depth));
    }
  }

  const Arrangement initial = encode_initial(a == 1, b == 1);
  std::vector<Arrangement> trace{initial};
  for (int depth : cuts) trace.push_back(trace.back().rotated(depth));
  const Arrangement& final_arr = trace.back();
  const bool decoded = evaluate_and(final_arr);
  const bool expected = (a == 1) && (b == 1);
  if (decoded != expected) {
    throw std::logic_error("decoded output disagrees with a AND b");
  }

  switch (format) {
    case Format::Json: {
      json steps = json::array();
      for (std::size_t i = 0; i < cuts.size(); ++i) {
        steps.push_back(json{{"cut", cuts[i]}, {"arrangement", trace[i + 1].str()}});
      }
      const json out{{"a", a},
                     {"b", b},
                     {"initial", initial.str()},
                     {"cuts", cuts},
                     {"trace", steps},
                     {"final", final_arr.str()},
                     {"and_output", decoded ? 1 : 0},
                     {"expected", expected ? 1 : 0}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    case Format::Csv: {
      std::cout << "step,cut,arrangement,and_output\n";
      std::cout << "0,," << initial.str() << ",\n";
      for (std::size_t i = 0; i < cuts.size(); ++i) {
        std::cout << (i + 1) << ',' << cuts[i] << ',' << trace[i + 1].str() << ',';
        if (i + 1 == cuts.size()) std::cout << (decoded ? 1 : 0);
        std::cout << "\n";
      }
      return 0;
    }
    case Format::Table: {
      std::cout << "inputs: a=" << a << " b=" << b << "\n";
      std::cout << "initial: " << initial.str() << "\n";
      for (std::size_t i = 0; i < cuts.size(); ++i) {
        std::cout << "cut " << cuts[i] << " -> " << trace[i + 1].str() << "\n";
      }
      std::cout << "final: " << final_arr.str() << "\n";
      std::cout << "AND output: " << (decoded ? 1 : 0) << " (expected " << (expected ? 1 : 0)
                << ")\n";
      return 0;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Five Card Trick analyzer: information leakage of biased random cuts"};
  app.require_subcommand(1);
  std::string format_text;
  app.add_option("-f,--format", format_text,
                 "output format: json, csv, or table (default: $FIVECARD_FORMAT or table)")
      ->check(CLI::IsMember({"json", "csv", "table"}));

  CLI::App* post = app.add_subcommand(
      "posterior", "closed-form posterior next to the exhaustive enumeration");
  post->fallthrough();
  double post_eps = 0.0;
  int post_s_star = 0;
  double post_a = 0.0;
  long post_T = 0;
  CLI::Option* post_opt_eps = post->add_option("--epsilon", post_eps, "bias of a single cut");
  CLI::Option* post_opt_a = post->add_option("--a", post_a, "stay probability of a cut chain");
  CLI::Option* post_opt_T = post->add_option("--T", post_T, "number of chained cuts");
  CLI::Option* post_opt_s = post->add_option("--s-star", post_s_star,
                                             "distinguished cut depth (single-cut mode)");
  post_opt_eps->excludes(post_opt_a)->excludes(post_opt_T);
  post_opt_a->needs(post_opt_T);
  post_opt_T->needs(post_opt_a);
  post_opt_s->excludes(post_opt_a);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "posterior curves over a bias range or a shuffle-count range");
  sweep->fallthrough();
  std::string sweep_eps_range;
  std::string sweep_T_range;
  double sweep_a = 0.0;
  int sweep_s_star = 0;
  CLI::Option* sweep_opt_eps =
      sweep->add_option("--epsilon", sweep_eps_range, "bias range start:stop:step");
  CLI::Option* sweep_opt_a =
      sweep->add_option("--a", sweep_a, "stay probability of a cut chain");
  CLI::Option* sweep_opt_T =
      sweep->add_option("--T", sweep_T_range, "shuffle-count range start:stop");
  CLI::Option* sweep_opt_s = sweep->add_option("--s-star", sweep_s_star,
                                               "distinguished cut depth (bias mode)");
  sweep_opt_eps->excludes(sweep_opt_a)->excludes(sweep_opt_T);
  sweep_opt_a->needs(sweep_opt_T);
  sweep_opt_T->needs(sweep_opt_a);
  sweep_opt_s->excludes(sweep_opt_a);

  CLI::App* bound = app.add_subcommand(
      "bound", "shuffle counts guaranteeing a posterior deviation bound");
  bound->fallthrough();
  double bound_a = 0.0;
  double bound_C = 0.0;
  std::string bound_parity = "any";
  bound->add_option("--a", bound_a, "stay probability of the cut chain")->required();
  bound->add_option("--C", bound_C, "posterior deviation bound, in (0, 1/2)")->required();
  bound->add_option("--parity", bound_parity, "parity constraint on the count")
      ->check(CLI::IsMember({"any", "even", "odd"}));

  CLI::App* sim = app.add_subcommand(
      "simulate", "seeded sampling run compared against the exact posterior");
  sim->fallthrough();
  double sim_eps = 0.0;
  int sim_s_star = 0;
  double sim_a = 0.0;
  long sim_T = 0;
  long sim_n = 100'000;
  std::uint64_t sim_seed = 0;
  CLI::Option* sim_opt_eps = sim->add_option("--epsilon", sim_eps, "bias of a single cut");
  CLI::Option* sim_opt_a = sim->add_option("--a", sim_a, "stay probability of a cut chain");
  CLI::Option* sim_opt_T = sim->add_option("--T", sim_T, "number of chained cuts");
  CLI::Option* sim_opt_s = sim->add_option("--s-star", sim_s_star,
                                           "distinguished cut depth (single-cut mode)");
  sim->add_option("--n", sim_n, "number of samples");
  sim->add_option("--seed", sim_seed, "64-bit RNG seed");
  sim_opt_eps->excludes(sim_opt_a)->excludes(sim_opt_T);
  sim_opt_a->needs(sim_opt_T);
  sim_opt_T->needs(sim_opt_a);
  sim_opt_s->excludes(sim_opt_a);

  CLI::App* proto = app.add_subcommand(
      "protocol", "one protocol round: encode, cut, reveal, decode");
  proto->fallthrough();
  int proto_a = 0;
  int proto_b = 0;
  std::string proto_cuts;
  std::uint64_t proto_seed = 0;
  long proto_num_cuts = 1;
  proto->add_option("--a", proto_a, "first player's bit")->required();
  proto->add_option("--b", proto_b, "second player's bit")->required();
  CLI::Option* proto_opt_cuts =
      proto->add_option("--cuts", proto_cuts, "comma-separated cut depths, e.g. 2,4,1");
  CLI::Option* proto_opt_seed =
      proto->add_option("--seed", proto_seed, "draw the cuts uniformly with this seed");
  CLI::Option* proto_opt_n =
      proto->add_option("--num-cuts", proto_num_cuts, "how many random cuts to draw");
  proto_opt_cuts->excludes(proto_opt_seed);
  proto_opt_n->needs(proto_opt_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Format format = resolve_format(format_text);
    if (post->parsed()) {
      const bool single = post_opt_eps->count() > 0;
      if (!single && post_opt_a->count() == 0) {
        throw UsageError("specify either --epsilon or --a with --T");
      }
      return cmd_posterior(format, single, post_eps, post_s_star, post_a, post_T);
    }
    if (sweep->parsed()) {
      const bool single = sweep_opt_eps->count() > 0;
      if (!single && sweep_opt_a->count() == 0) {
        throw UsageError("specify either --epsilon or --a with --T");
      }
      return cmd_sweep(format, single, sweep_eps_range, sweep_s_star, sweep_a, sweep_T_range);
    }
    if (bound->parsed()) {
      return cmd_bound(format, bound_a, bound_C, bound_parity);
    }
    if (sim->parsed()) {
      const bool single = sim_opt_a->count() == 0;
      return cmd_simulate(format, single, sim_eps, sim_s_star, sim_a, sim_T, sim_n, sim_seed);
    }
    if (proto->parsed()) {
      const bool use_seed = proto_opt_seed->count() > 0;
      if (!use_seed && proto_opt_cuts->count() == 0) {
        throw UsageError("specify either --cuts or --seed");
      }
      return cmd_protocol(format, proto_a, proto_b, proto_cuts, use_seed, proto_seed,
                          proto_num_cuts);
    }
    throw UsageError("no command selected");
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
