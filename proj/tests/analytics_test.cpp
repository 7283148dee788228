#include "ledsig/analytics.hpp"

#include "ledsig/errors.hpp"
#include "ledsig/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace ledsig;

namespace {

NormalizedEntry entry(int y, int m, int d, double amount = 0.5,
                      const std::string& id = "chk-1",
                      AccountKind kind = AccountKind::checking) {
  return {Date::from_ymd(y, m, d), id, kind, amount};
}

NormalizedSeries series_of(std::vector<NormalizedEntry> entries) {
  NormalizedSeries s;
  s.entries = std::move(entries);
  return s;
}

LabelTimeline mania(int start_day, int end_day, Severity level) {
  return LabelTimeline{{SeverityLabel{Date::from_ymd(2017, 1, start_day),
                                      Date::from_ymd(2017, 1, end_day), Pole::mania, level}}};
}

} // namespace

TEST_CASE("daily resampling zero-fills gaps and tags severities") {
  auto series = series_of({
      entry(2017, 1, 2, 0.1),
      entry(2017, 1, 2, 0.4),
      entry(2017, 1, 5, 0.2),
  });
  ResampledSeries daily = resample(series, Grain::daily, mania(4, 9, Severity::moderate));

  REQUIRE(daily.points.size() == 4); // Jan 2 through Jan 5
  CHECK(daily.points[0].frequency == 2);
  CHECK(daily.points[0].volume == doctest::Approx(0.5));
  CHECK(daily.points[0].severity == Severity::none);
  CHECK(daily.points[1].frequency == 0);
  CHECK(daily.points[1].volume == 0.0);
  CHECK(daily.points[2].frequency == 0);
  CHECK(daily.points[2].severity == Severity::moderate);
  CHECK(daily.points[3].frequency == 1);
  CHECK(daily.points[3].severity == Severity::moderate);
}

TEST_CASE("weekly periods start on monday and cover the span") {
  // 2017-01-02 is a Monday; 2017-01-14 falls in the following week.
  auto series = series_of({
      entry(2017, 1, 4),
      entry(2017, 1, 8),
      entry(2017, 1, 14),
  });
  ResampledSeries weekly = resample(series, Grain::weekly, LabelTimeline{});
  REQUIRE(weekly.points.size() == 2);
  CHECK(weekly.points[0].period_start == Date::from_ymd(2017, 1, 2));
  CHECK(weekly.points[0].frequency == 2);
  CHECK(weekly.points[1].period_start == Date::from_ymd(2017, 1, 9));
  CHECK(weekly.points[1].frequency == 1);
}

TEST_CASE("monthly resampling spans calendar months inclusively") {
  auto series = series_of({
      entry(2017, 1, 31),
      entry(2017, 4, 1),
  });
  ResampledSeries monthly = resample(series, Grain::monthly, LabelTimeline{});
  REQUIRE(monthly.points.size() == 4);
  CHECK(monthly.points[0].period_start == Date::from_ymd(2017, 1, 1));
  CHECK(monthly.points[1].frequency == 0);
  CHECK(monthly.points[2].frequency == 0);
  CHECK(monthly.points[3].period_start == Date::from_ymd(2017, 4, 1));
}

TEST_CASE("period severity is the highest mania level it touches") {
  auto series = series_of({entry(2017, 1, 2), entry(2017, 1, 8)});
  LabelTimeline timeline{{
      SeverityLabel{Date::from_ymd(2017, 1, 3), Date::from_ymd(2017, 1, 4), Pole::mania,
                    Severity::mild},
      SeverityLabel{Date::from_ymd(2017, 1, 5), Date::from_ymd(2017, 1, 5), Pole::mania,
                    Severity::severe},
      SeverityLabel{Date::from_ymd(2017, 1, 2), Date::from_ymd(2017, 1, 8), Pole::depression,
                    Severity::moderate}, // depression must not bleed into mania grouping
  }};
  ResampledSeries weekly = resample(series, Grain::weekly, timeline);
  REQUIRE(weekly.points.size() == 1);
  CHECK(weekly.points[0].severity == Severity::severe);
}

TEST_CASE("resampling an empty series is an input error") {
  CHECK_THROWS_AS(resample(NormalizedSeries{}, Grain::daily, LabelTimeline{}), InputError);
}

TEST_CASE("grouped stats split by level and report empty groups") {
  auto series = series_of({
      entry(2017, 1, 2), entry(2017, 1, 2),   // none: 2 txns over 2 days
      entry(2017, 1, 4), entry(2017, 1, 4), entry(2017, 1, 4), // mild: 3 over 1 day
  });
  LabelTimeline timeline = mania(4, 4, Severity::mild);
  ResampledSeries daily = resample(series, Grain::daily, timeline);

  GroupedStats three = group_daily_stats(daily, Grouping::three_level);
  REQUIRE(three.groups.size() == 2);
  CHECK(three.groups[0].group == "none");
  CHECK(three.groups[0].n_days == 2); // Jan 2 and the zero-filled Jan 3
  CHECK(three.groups[0].mean_frequency == doctest::Approx(1.0));
  CHECK(three.groups[1].group == "mild");
  CHECK(three.groups[1].n_days == 1);
  CHECK(three.groups[1].mean_frequency == doctest::Approx(3.0));
  // severe only becomes a candidate once a severe day exists
  CHECK(three.omitted == std::vector<std::string>{"moderate"});

  GroupedStats binary = group_daily_stats(daily, Grouping::binary);
  REQUIRE(binary.groups.size() == 2);
  CHECK(binary.groups[1].group == "symptomatic");
  CHECK(binary.groups[1].n_days == 1);
}

TEST_CASE("interevent days difference successive entries") {
  auto series = series_of({
      entry(2017, 1, 2), entry(2017, 1, 2), entry(2017, 1, 5), entry(2017, 1, 10),
  });
  CHECK(interevent_days(series.entries) == std::vector<double>{0.0, 3.0, 5.0});
  CHECK_THROWS_AS(interevent_days({entry(2017, 1, 2)}), NumericError);
}

TEST_CASE("zero gap runs measure maximal quiet stretches") {
  auto series = series_of({
      entry(2017, 1, 2), entry(2017, 1, 5), entry(2017, 1, 6), entry(2017, 1, 10),
  });
  ResampledSeries daily = resample(series, Grain::daily, LabelTimeline{});
  // gaps: Jan 3-4 (run of 2), Jan 7-9 (run of 3)
  CHECK(zero_gap_runs(daily) == std::vector<double>{2.0, 3.0});
}

TEST_CASE("burstiness matches the hand-computed oracle") {
  BurstinessResult r = burstiness({1.0, 1.0, 1.0, 5.0}, BurstinessVariant::interevent_days);
  CHECK(r.tau == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.sigma == doctest::Approx(1.7320508075688772).epsilon(1e-12));
  CHECK(r.B == doctest::Approx(-0.07179676972449085).epsilon(1e-12));
  CHECK(r.n_intervals == 4);
}

TEST_CASE("constant intervals give exactly minus one") {
  for (double v : {0.5, 1.0, 7.0, 365.0}) {
    BurstinessResult r = burstiness({v, v, v}, BurstinessVariant::interevent_days);
    CHECK(r.B == -1.0); // sigma is 0, so the ratio collapses exactly
  }
}

TEST_CASE("burstiness rejects degenerate interval lists") {
  CHECK_THROWS_AS(burstiness({}, BurstinessVariant::interevent_days), NumericError);
  CHECK_THROWS_AS(burstiness({3.0}, BurstinessVariant::interevent_days), NumericError);
  CHECK_THROWS_AS(burstiness({0.0, 0.0, 0.0}, BurstinessVariant::interevent_days),
                  NumericError);
  CHECK_THROWS_AS(burstiness({2.0, -1.0}, BurstinessVariant::interevent_days), InputError);
}

TEST_CASE("poisson-like gaps score near zero, regular gaps near minus one") {
  // Exponential interevent times are the textbook B = 0 case.
  Rng rng(20170102);
  std::vector<double> exp_gaps;
  for (int i = 0; i < 10000; i++)
    exp_gaps.push_back(rng.exponential(0.8));
  BurstinessResult poissonish = burstiness(exp_gaps, BurstinessVariant::interevent_days);
  CHECK(std::fabs(poissonish.B) < 0.05);

  std::vector<double> metronome(200, 3.0);
  metronome[0] = 3.0000001; // almost constant
  CHECK(burstiness(metronome, BurstinessVariant::interevent_days).B ==
        doctest::Approx(-1.0).epsilon(1e-6));
}

TEST_CASE("phase burstiness averages per level and reports thin segments") {
  std::vector<NormalizedEntry> entries;
  // none phase, Jan 2-11: txns every day (10 events, 9 intervals)
  for (int d = 2; d <= 11; d++)
    entries.push_back(entry(2017, 1, d));
  // mild phase, Jan 12-21: txns on alternating days
  for (int d = 12; d <= 21; d += 2)
    entries.push_back(entry(2017, 1, d));
  // trailing none phase, Jan 22-23: single txn, too thin to score
  entries.push_back(entry(2017, 1, 23));

  auto series = series_of(std::move(entries));
  LabelTimeline timeline = mania(12, 21, Severity::mild);
  ResampledSeries daily = resample(series, Grain::daily, timeline);

  PhaseBurstiness by_phase =
      burstiness_by_phase(series, daily, BurstinessVariant::interevent_days);
  REQUIRE(by_phase.phases.size() == 2);
  CHECK(by_phase.phases[0].level == Severity::none);
  CHECK(by_phase.phases[0].n_segments == 1);
  CHECK(by_phase.phases[0].mean_B == doctest::Approx(-1.0)); // metronomic
  CHECK(by_phase.phases[1].level == Severity::mild);
  CHECK(by_phase.phases[1].mean_B == doctest::Approx(-1.0));
  REQUIRE(by_phase.skipped.size() == 1);
  CHECK(by_phase.skipped[0].start == Date::from_ymd(2017, 1, 22));
  CHECK(by_phase.skipped[0].level == Severity::none);
  CHECK(by_phase.skipped[0].n_events == 1);
}

TEST_CASE("credit ratio tracks counts or volume per month") {
  Ledger ledger;
  ledger.add_account({"chk-1", AccountKind::checking});
  ledger.add_account({"cc-1", AccountKind::credit});
  auto spend = [&](int m, int d, double amount, const std::string& id) {
    ledger.add_transaction(
        {Date::from_ymd(2017, m, d), amount, Direction::expenditure, id, std::nullopt});
  };
  spend(1, 3, 10.0, "chk-1");
  spend(1, 9, 30.0, "chk-1");
  spend(1, 20, 60.0, "cc-1");
  spend(3, 5, 25.0, "cc-1"); // February has no spending at all

  auto counts = credit_ratio_monthly(ledger);
  REQUIRE(counts.size() == 2); // empty months are omitted
  CHECK(counts[0].month == Date::from_ymd(2017, 1, 1));
  CHECK(counts[0].ratio == doctest::Approx(1.0 / 3.0));
  CHECK(counts[1].month == Date::from_ymd(2017, 3, 1));
  CHECK(counts[1].ratio == doctest::Approx(1.0));

  auto volumes = credit_ratio_monthly(ledger, true);
  CHECK(volumes[0].ratio == doctest::Approx(0.6));

  ledger.add_transaction(
      {Date::from_ymd(2017, 1, 31), 100.0, Direction::income, "chk-1", std::nullopt});
  CHECK_THROWS_AS(credit_ratio_monthly(ledger), InputError);
}
