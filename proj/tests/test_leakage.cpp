#include "doctest.h"

#include <stdexcept>

#include "fivecard/leakage.hpp"
#include "fivecard/rational.hpp"

using namespace fivecard;

namespace {

const Arrangement kStartOne = Arrangement::parse("rBBrB");
const Arrangement kStartZero = Arrangement::parse("BrBrB");

double table_sum_of_marginals(const PosteriorTable<double>& table) {
  double total = 0.0;
  for (const auto& [fin, summary] : table.finals) total += summary.marginal;
  return total;
}

}  // namespace

TEST_SUITE("leakage") {

TEST_CASE("closed-form single-cut posterior at bias 0.1") {
  const PosteriorTable<double> table = posterior_closed_single<double>(0.1, 0);
  CHECK(table.s_star == 0);
  CHECK(table.finals.size() == 5);

  CHECK(table.entry(kStartOne, kStartOne) == doctest::Approx(4.0 / 13.0).epsilon(1e-14));
  CHECK(table.entry(kStartZero, kStartOne) == doctest::Approx(9.0 / 13.0).epsilon(1e-14));
  CHECK(table.entry(kStartZero, kStartZero) == doctest::Approx(4.0 / 13.0).epsilon(1e-14));
  CHECK(table.entry(kStartOne, kStartZero) == doctest::Approx(9.0 / 13.0).epsilon(1e-14));

  const FinalSummary<double>& case1 = table.summary(kStartOne);
  CHECK(case1.label == CaseLabel::Case1);
  CHECK(case1.marginal == doctest::Approx(0.1625).epsilon(1e-14));

  const FinalSummary<double>& case2 = table.summary(Arrangement::parse("rBrBB"));
  CHECK(case2.label == CaseLabel::Case2);
  CHECK(case2.marginal == doctest::Approx(0.225).epsilon(1e-14));
  CHECK(case2.posterior.at(kStartOne) == 0.5);
  CHECK(case2.posterior.at(kStartZero) == 0.5);
}

TEST_CASE("closed-form posterior at the bias boundaries") {
  const PosteriorTable<double> revealing = posterior_closed_single<double>(-0.8, 0);
  CHECK(revealing.entry(kStartOne, kStartOne) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(revealing.entry(kStartZero, kStartOne) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(revealing.summary(kStartOne).marginal == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(revealing.summary(Arrangement::parse("rBrBB")).label == CaseLabel::Unreachable);
  CHECK(revealing.summary(Arrangement::parse("rBrBB")).posterior.empty());

  const PosteriorTable<double> never_still = posterior_closed_single<double>(0.2, 0);
  CHECK(never_still.entry(kStartOne, kStartOne) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(never_still.entry(kStartZero, kStartOne) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("zero bias leaks nothing") {
  const PosteriorTable<double> table = posterior_closed_single<double>(0.0, 2);
  for (const auto& [fin, summary] : table.finals) {
    for (const auto& [init, p] : summary.posterior) CHECK(p == doctest::Approx(0.5));
  }
}

TEST_CASE("case labels follow the distinguished depth") {
  for (int s_star = 0; s_star < 5; ++s_star) {
    const PosteriorTable<double> table = posterior_closed_single<double>(0.1, s_star);
    for (const auto& [fin, summary] : table.finals) {
      const bool in_case1 = fin == kStartOne.rotated(s_star) || fin == kStartZero.rotated(s_star);
      CHECK(summary.label == (in_case1 ? CaseLabel::Case1 : CaseLabel::Case2));
    }
  }
}

TEST_CASE("exhaustive posterior under the uniform law is half everywhere") {
  const PosteriorTable<double> table =
      posterior_exact<double>(default_prior<double>(), ShiftDist<double>::uniform(), 0);
  CHECK(table.finals.size() == 5);
  for (const auto& [fin, summary] : table.finals) {
    CHECK(summary.label != CaseLabel::Unreachable);
    CHECK(summary.marginal == doctest::Approx(0.2).epsilon(1e-14));
    for (const auto& [init, p] : summary.posterior) CHECK(p == doctest::Approx(0.5));
  }
}

TEST_CASE("point-mass prior forces posterior one on its start") {
  Prior<double> prior;
  prior.weights.emplace(kStartOne, 1.0);
  const PosteriorTable<double> table =
      posterior_exact<double>(prior, bias_distribution<double>(0.1, 0), 0);
  for (const auto& [fin, summary] : table.finals) {
    if (summary.label == CaseLabel::Unreachable) continue;
    CHECK(summary.posterior.at(kStartOne) == doctest::Approx(1.0));
  }
}

TEST_CASE("closed form and exhaustive enumeration agree off the default depth") {
  const PosteriorTable<double> closed = posterior_closed_single<double>(0.13, 3);
  const PosteriorTable<double> exact = posterior_exact<double>(
      default_prior<double>(), bias_distribution<double>(0.13, 3), 3);
  CHECK(max_posterior_difference(closed, exact) < 1e-14);
}

TEST_CASE("closed form and exhaustive enumeration agree exactly over rationals") {
  const Rational eps(-3, 10);
  const PosteriorTable<Rational> closed = posterior_closed_single<Rational>(eps, 2);
  const PosteriorTable<Rational> exact = posterior_exact<Rational>(
      default_prior<Rational>(), bias_distribution<Rational>(eps, 2), 2);
  CHECK(max_posterior_difference(closed, exact) == Rational(0));
  CHECK(closed.entry(kStartOne, kStartOne.rotated(2)) == Rational(4, 5));
}

TEST_CASE("reachable marginals sum to one and rows sum to one") {
  for (double eps : {-0.8, -0.35, 0.0, 0.1, 0.2}) {
    const PosteriorTable<double> table = posterior_closed_single<double>(eps, 1);
    CHECK(table_sum_of_marginals(table) == doctest::Approx(1.0).epsilon(1e-13));
    for (const auto& [fin, summary] : table.finals) {
      if (summary.label == CaseLabel::Unreachable) continue;
      double row = 0.0;
      for (const auto& [init, p] : summary.posterior) {
        row += p;
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
      }
      CHECK(row == doctest::Approx(1.0).epsilon(1e-13));
    }
  }
}

TEST_CASE("uniform prior over all four starts reveals only the AND value") {
  Prior<double> prior;
  for (const Arrangement& init : initial_arrangements()) prior.weights.emplace(init, 0.25);
  const PosteriorTable<double> table =
      posterior_exact<double>(prior, ShiftDist<double>::uniform(), 0);
  CHECK(table.finals.size() == 10);
  const Arrangement true_start = Arrangement::parse("rBBBr");
  for (const auto& [fin, summary] : table.finals) {
    REQUIRE(summary.label != CaseLabel::Unreachable);
    if (evaluate_and(fin)) {
      CHECK(summary.posterior.at(true_start) == doctest::Approx(1.0));
    } else {
      CHECK(summary.posterior.at(true_start) == doctest::Approx(0.0));
      for (const Arrangement& init : restricted_initial_arrangements()) {
        CHECK(summary.posterior.at(init) == doctest::Approx(1.0 / 3.0));
      }
    }
  }
}

TEST_CASE("repeated-cut closed form matches its single-cut reduction") {
  const PosteriorTable<double> repeated = posterior_closed_repeated<double>(0.6, 4);
  const PosteriorTable<double> single =
      posterior_closed_single<double>(effective_epsilon<double>(0.6, 4), 0);
  CHECK(max_posterior_difference(repeated, single) == 0.0);

  CHECK(posterior_closed_repeated(CutChain{0.2, 5}).entry(kStartOne, kStartOne) ==
        doctest::Approx(0.5));
  CHECK(posterior_closed_repeated<double>(0.9, 0).entry(kStartOne, kStartOne) ==
        doctest::Approx(1.0));
  CHECK(posterior_closed_repeated<double>(0.0, 1).entry(kStartOne, kStartOne) ==
        doctest::Approx(0.0));
  CHECK(posterior_closed_repeated<double>(0.0, 1).entry(kStartZero, kStartOne) ==
        doctest::Approx(1.0));
}

TEST_CASE("match probability under one biased cut") {
  const ShiftDist<double> law = bias_distribution<double>(0.1, 0);
  CHECK(shift_match_probability(kStartOne, kStartOne, law) == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(shift_match_probability(kStartZero, kStartZero, law) == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(shift_match_probability(kStartOne, kStartZero, law) ==
        doctest::Approx(0.225).epsilon(1e-14));
  CHECK(shift_match_probability(kStartZero, kStartOne, law) ==
        doctest::Approx(0.225).epsilon(1e-14));
  CHECK_THROWS_AS(shift_match_probability(Arrangement::parse("rBBBr"), kStartOne, law),
                  std::domain_error);
}

TEST_CASE("final marginal formulas at pinned points") {
  CHECK(final_marginal_case1<double>(0.0) == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(final_marginal_case1<double>(0.2) == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(final_marginal_case1<double>(-0.8) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(final_marginal_case2<double>(0.1) == doctest::Approx(0.225).epsilon(1e-14));
  CHECK(final_marginal_case2<double>(-0.8) == 0.0);
  CHECK_THROWS_AS(final_marginal_case1<double>(0.3), std::domain_error);
}

TEST_CASE("worst-case envelope from a bias lower bound") {
  const Level2Bounds at_tenth = level2_bounds(0.1);
  CHECK(at_tenth.match_posterior_max == doctest::Approx(4.0 / 13.0).epsilon(1e-14));
  CHECK(at_tenth.other_posterior_min == doctest::Approx(9.0 / 13.0).epsilon(1e-14));
  const Level2Bounds at_cap = level2_bounds(0.2);
  CHECK(at_cap.match_posterior_max == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(at_cap.other_posterior_min == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(level2_bounds(0.0), std::domain_error);
  CHECK_THROWS_AS(level2_bounds(-0.1), std::domain_error);
  CHECK_THROWS_AS(level2_bounds(0.21), std::domain_error);
}

TEST_CASE("adversary report under the uniform law") {
  const LeakageReport<double> report =
      adversary_report<double>(default_prior<double>(), ShiftDist<double>::uniform(), 0);
  CHECK(report.map_guess_success == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(report.max_deviation == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("adversary report at the never-still boundary") {
  const LeakageReport<double> report = adversary_report<double>(
      default_prior<double>(), bias_distribution<double>(0.2, 0), 0);
  CHECK(report.map_guess_success == doctest::Approx(0.625).epsilon(1e-14));
  CHECK(report.max_deviation == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("adversary report with no shuffle at all") {
  const LeakageReport<double> report =
      adversary_report<double>(default_prior<double>(), ShiftDist<double>::delta(0), 0);
  CHECK(report.map_guess_success == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(report.max_deviation == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("adversary report exact values over rationals") {
  const LeakageReport<Rational> report = adversary_report<Rational>(
      default_prior<Rational>(), bias_distribution<Rational>(Rational(1, 10), 0), 0);
  CHECK(report.map_guess_success == Rational(9, 16));
  CHECK(report.max_deviation == Rational(5, 26));
}

TEST_CASE("prior validation") {
  Prior<double> negative;
  negative.weights.emplace(kStartOne, 1.5);
  negative.weights.emplace(kStartZero, -0.5);
  CHECK_THROWS_AS(negative.validate(), std::domain_error);

  Prior<double> short_mass;
  short_mass.weights.emplace(kStartOne, 0.25);
  CHECK_THROWS_AS(short_mass.validate(), std::domain_error);

  Prior<double> empty;
  CHECK_THROWS_AS(empty.validate(), std::domain_error);
  CHECK_THROWS_AS(posterior_exact<double>(empty, ShiftDist<double>::uniform(), 0),
                  std::domain_error);

  CHECK_NOTHROW(default_prior<double>().validate());
  CHECK(default_prior<double>().support().size() == 2);
}

TEST_CASE("table lookups throw on unknown keys") {
  const PosteriorTable<double> table = posterior_closed_single<double>(0.1, 0);
  CHECK_THROWS_AS(table.summary(Arrangement::parse("rrBBB")), std::out_of_range);
  CHECK_THROWS_AS(table.entry(Arrangement::parse("rBBBr"), kStartOne), std::out_of_range);
}

TEST_CASE("structurally different tables refuse comparison") {
  const PosteriorTable<double> with_case2 = posterior_closed_single<double>(0.1, 0);
  const PosteriorTable<double> without_case2 = posterior_closed_single<double>(-0.8, 0);
  CHECK_THROWS_AS(max_posterior_difference(with_case2, without_case2), std::invalid_argument);
}

TEST_CASE("case labels have readable names") {
  CHECK(std::string(to_string(CaseLabel::Case1)) == "Case1");
  CHECK(std::string(to_string(CaseLabel::Case2)) == "Case2");
  CHECK(std::string(to_string(CaseLabel::Unreachable)) == "Unreachable");
  CHECK(case_label_from_string("Case2") == CaseLabel::Case2);
  CHECK_THROWS_AS(case_label_from_string("case2"), std::invalid_argument);
}

}  // TEST_SUITE
