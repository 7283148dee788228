// Acceptance gate for the ledger-signal artifact. Runs one check per
// release criterion and prints one PASS/FAIL line for each; exits nonzero
// if any criterion fails. Criteria 1-5, 7, and 8 exercise the library
// directly; 6 and 9 drive the installed CLI binary end to end.
//
// usage: acceptance <path-to-cli-binary> <path-to-fixtures-dir>

#include "ledsig/analytics.hpp"
#include "ledsig/config.hpp"
#include "ledsig/errors.hpp"
#include "ledsig/ingest.hpp"
#include "ledsig/isolation_forest.hpp"
#include "ledsig/privacy.hpp"
#include "ledsig/report.hpp"
#include "ledsig/rng.hpp"
#include "ledsig/special_functions.hpp"
#include "ledsig/stat_tests.hpp"
#include "ledsig/synth.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace ledsig;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string g_cli;
fs::path g_fixtures;
fs::path g_scratch;

struct Outcome {
  bool pass = false;
  std::string note;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool run_cli(const std::string& args) {
  const std::string cmd = "\"" + g_cli + "\" " + args + " >/dev/null 2>&1";
  return std::system(cmd.c_str()) == 0;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good())
    throw InputError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out.good())
    throw InputError("cannot write " + path.string());
}

bool within(double actual, double expected, double tol) {
  return std::fabs(actual - expected) <= tol * (1.0 + std::fabs(expected));
}

// ---- criterion 1: burstiness analytic anchors -----------------------------

Outcome criterion_burstiness() {
  const auto start = std::chrono::steady_clock::now();

  for (double v : {0.5, 1.0, 7.0}) {
    BurstinessResult r = burstiness({v, v, v, v}, BurstinessVariant::interevent_days);
    if (r.B != -1.0)
      return {false, "constant intervals gave B = " + std::to_string(r.B)};
  }

  Rng rng(1729);
  std::vector<double> gaps;
  gaps.reserve(10000);
  for (int i = 0; i < 10000; i++)
    gaps.push_back(rng.exponential(1.0));
  BurstinessResult poissonish = burstiness(gaps, BurstinessVariant::interevent_days);
  if (std::fabs(poissonish.B) >= 0.05)
    return {false, "exponential gaps gave |B| = " + std::to_string(std::fabs(poissonish.B))};

  BurstinessResult hand = burstiness({1, 1, 1, 5}, BurstinessVariant::interevent_days);
  if (std::fabs(hand.B - (-0.0718)) > 1e-4)
    return {false, "[1,1,1,5] gave B = " + std::to_string(hand.B)};

  const double elapsed = seconds_since(start);
  if (elapsed >= 1.0)
    return {false, "took " + std::to_string(elapsed) + " s (limit 1 s)"};
  return {true, {}};
}

// ---- criteria 2 and 3: Welch / Games-Howell oracle equivalence -------------

struct OracleDataset {
  const char* name;
  std::vector<SampleGroup> groups;
};

const std::vector<OracleDataset>& oracle_datasets() {
  auto mk = [](const char* label, std::vector<double> v) {
    return SampleGroup::from_values(label, std::move(v));
  };
  static const std::vector<OracleDataset> sets = {
      {"spec3",
       {mk("A", {10, 11, 12, 13}), mk("B", {20, 21, 22, 23}), mk("C", {10, 12, 20, 22})}},
      {"k2_a",
       {mk("g1", {1.1, 2.3, 3.1, 4.0, 5.2}),
        mk("g2", {2.0, 4.5, 6.1, 8.2, 10.3, 12.0, 13.9})}},
      {"k2_b",
       {mk("g1", {10.2, 10.4, 10.1, 10.3}),
        mk("g2", {10.5, 11.9, 9.1, 12.3, 8.8, 11.1})}},
      {"k2_c",
       {mk("g1", {0.5, 0.9, 1.4, 1.8, 2.2, 2.6}), mk("g2", {5.0, 5.1, 5.2})}},
      {"k3_a",
       {mk("g1", {27.5, 21.0, 19.0, 23.6, 17.0, 17.9, 16.9, 20.1, 21.9, 22.6}),
        mk("g2", {24.5, 22.3, 26.1, 25.0, 30.5, 28.2}),
        mk("g3", {16.0, 15.1, 17.2, 16.5})}},
      {"k3_b",
       {mk("g1", {3.2, 3.8, 4.1, 2.9, 3.5}), mk("g2", {3.9, 4.2, 4.8, 5.1}),
        mk("g3", {2.1, 2.2, 2.0, 2.4, 2.6, 2.3, 2.5})}},
      {"k3_c",
       {mk("g1", {5.0, 5.1, 4.9, 5.05, 4.95}), mk("g2", {4.0, 6.0, 5.2, 4.8}),
        mk("g3", {1.0, 9.0, 5.5, 4.5, 5.0, 5.0})}},
      {"k4_a",
       {mk("g1", {12.1, 14.2, 13.3, 12.8, 14.9}), mk("g2", {18.4, 17.2, 19.9, 16.8}),
        mk("g3", {11.0, 11.5, 10.8, 12.2, 11.9, 11.3}), mk("g4", {20.5, 24.1, 22.8})}},
      {"k4_b",
       {mk("g1", {0.12, 0.18, 0.11, 0.16}), mk("g2", {0.22, 0.28, 0.25, 0.31, 0.19}),
        mk("g3", {0.15, 0.14, 0.17, 0.13, 0.18, 0.16, 0.12}),
        mk("g4", {0.09, 0.1, 0.08})}},
      {"k4_c",
       {mk("g1", {101.0, 99.5, 100.2, 98.8, 100.9, 101.7}),
        mk("g2", {103.2, 104.8, 102.1, 105.5}),
        mk("g3", {97.1, 96.4, 98.0, 95.9, 97.5}),
        mk("g4", {100.0, 100.4, 99.6, 100.2, 99.8, 100.1, 100.3, 99.9})}},
  };
  return sets;
}

const std::vector<SampleGroup>& dataset(const char* name) {
  for (const OracleDataset& d : oracle_datasets())
    if (std::string(d.name) == name)
      return d.groups;
  throw InputError(std::string("unknown oracle dataset ") + name);
}

Outcome criterion_welch() {
  struct Expected {
    const char* name;
    double F, df2, p;
  };
  const Expected table[] = {
      {"spec3", 53.435496374216214, 5.415092650613195, 0.0002722196478916188},
      {"k2_a", 8.17759820693904, 8.07683372626296, 0.02095592991108238},
      {"k2_b", 0.385841836734691, 5.120508638613207, 0.561098626695709},
      {"k2_c", 115.83505154639178, 5.310718518936614, 8.311656969509426e-05},
      {"k3_a", 32.96117924975963, 10.16313022712027, 3.608427579037383e-05},
      {"k3_b", 35.495063753332175, 5.475980978677711, 0.000732793427967186},
      {"k3_c", 0.0, 5.0491439549136174, 1.0},
      {"k4_a", 48.03197721622832, 5.2595128864759, 0.00030910661130434354},
      {"k4_b", 22.499451455146772, 7.3225237731856625, 0.00045936393004706406},
      {"k4_c", 25.210882447467736, 6.824171775713486, 0.0004525253229169915},
  };
  for (const Expected& e : table) {
    WelchAnovaResult r = welch_anova(dataset(e.name));
    if (!within(r.F, e.F, 1e-9) || !within(r.df2, e.df2, 1e-9) || !within(r.p, e.p, 1e-9))
      return {false, std::string(e.name) + ": F/df2/p drifted from the reference"};
  }

  // k = 2 must agree with the Welch t-test
  struct TExpected {
    const char* name;
    double t, p;
  };
  const TExpected t_table[] = {
      {"k2_a", -2.859650014763877, 0.020955929911082354},
      {"k2_b", -0.6211616832473579, 0.5610986266957095},
      {"k2_c", -10.762669350416363, 8.311656969509413e-05},
  };
  for (const TExpected& e : t_table) {
    WelchAnovaResult r = welch_anova(dataset(e.name));
    if (!within(r.F, e.t * e.t, 1e-9))
      return {false, std::string(e.name) + ": F != t^2"};
    if (!within(r.p, e.p, 1e-9))
      return {false, std::string(e.name) + ": p differs from the t-test"};
  }
  return {true, {}};
}

Outcome criterion_games_howell() {
  struct Expected {
    const char* name;
    const char* a;
    const char* b;
    double p, ci_low, ci_high;
  };
  const Expected table[] = {
      {"spec3", "A", "B", 8.481182339981075e-05, -12.800938636083599, -7.199061363916401},
      {"spec3", "A", "C", 0.4005892696243033, -16.399388809919728, 7.399388809919726},
      {"spec3", "B", "C", 0.29276333173959757, -6.399388809919726, 17.399388809919728},
      {"k2_a", "g1", "g2", 0.020955929911082416, -9.030459931120062, -0.9752543545942238},
      {"k2_b", "g1", "g2", 0.5610986266957094, -1.8733816864146116, 1.1400483530812808},
      {"k2_c", "g1", "g2", 8.311656969506309e-05, -4.3626062344989105, -2.7040604321677573},
      {"k3_a", "g1", "g2", 0.014087503735610518, -9.573619550675836, -1.1263804493241603},
      {"k3_a", "g1", "g3", 0.005098139756514297, 1.4925436242321486, 7.607456375767853},
      {"k3_a", "g2", "g3", 0.0004458175202900483, 6.076556761930974, 13.723443238069024},
      {"k3_b", "g1", "g2", 0.062157843815507596, -2.060479382464921, 0.060479382464920795},
      {"k3_b", "g1", "g3", 0.00673921369428454, 0.4702896185863562, 1.9297103814136434},
      {"k3_b", "g2", "g3", 0.005293485359510242, 1.1179895121146244, 3.2820104878853753},
      {"k3_c", "g1", "g2", 1.0, -1.7298437568021356, 1.7298437568021356},
      {"k3_c", "g1", "g3", 1.0, -3.385947434331742, 3.385947434331742},
      {"k3_c", "g2", "g3", 1.0, -3.3706875969842103, 3.3706875969842103},
      {"k4_a", "g1", "g2", 0.007689414893952473, -7.6243221274398625, -1.6056778725601384},
      {"k4_a", "g1", "g3", 0.04264671831045064, 0.08065874003385898, 3.9393412599661373},
      {"k4_a", "g1", "g4", 0.014750927400661973, -14.734840705442904, -3.2784926278904347},
      {"k4_a", "g2", "g3", 0.0044078785822164734, 3.478370130304478, 9.771629869695518},
      {"k4_a", "g2", "g4", 0.09034253445049667, -9.769141515235598, 0.985808181902259},
      {"k4_a", "g3", "g4", 0.018275705145946453, -17.831929524210985, -4.201403809122351},
      {"k4_b", "g1", "g2", 0.02141557719200815, -0.19675355935110223, -0.0182464406488978},
      {"k4_b", "g1", "g3", 0.9746812788037992, -0.07843680278482476, 0.06343680278482475},
      {"k4_b", "g1", "g4", 0.1336417618095973, -0.021752184082305198, 0.12675218408230515},
      {"k4_b", "g2", "g3", 0.0237158498669523, 0.01734557095839348, 0.18265442904160653},
      {"k4_b", "g2", "g4", 0.004109154277594507, 0.07580722413643959, 0.24419277586356036},
      {"k4_b", "g3", "g4", 0.0016564887783734328, 0.02770163114971018, 0.09229836885028979},
      {"k4_c", "g1", "g2", 0.03733139870714908, -6.830117123379354, -0.2698828766206405},
      {"k4_c", "g1", "g3", 0.0011318653846756899, 1.5728602003961483, 5.1671397996038895},
      {"k4_c", "g1", "g4", 0.8928932970166463, -1.2787856769383836, 1.903785676938412},
      {"k4_c", "g2", "g3", 0.0030104266211778974, 3.593433857950281, 10.246566142049751},
      {"k4_c", "g2", "g4", 0.04332367914737656, 0.19814398586309157, 7.526856014136931},
      {"k4_c", "g3", "g4", 0.0030692449377629494, -4.549987116576221, -1.5650128834237875},
  };

  std::map<std::string, GamesHowellResult> results;
  for (const OracleDataset& d : oracle_datasets())
    results.emplace(d.name, games_howell(d.groups, 0.05));

  for (const Expected& e : table) {
    const GamesHowellResult& r = results.at(e.name);
    const GamesHowellPair* pair = nullptr;
    for (const GamesHowellPair& candidate : r.pairs)
      if (candidate.group_a == e.a && candidate.group_b == e.b)
        pair = &candidate;
    if (!pair)
      return {false, std::string(e.name) + ": pair " + e.a + "/" + e.b + " missing"};
    if (!within(pair->p, e.p, 1e-6))
      return {false, std::string(e.name) + " " + e.a + "-" + e.b + ": p drifted"};
    if (!within(pair->ci_low, e.ci_low, 1e-6) || !within(pair->ci_high, e.ci_high, 1e-6))
      return {false, std::string(e.name) + " " + e.a + "-" + e.b + ": CI drifted"};
  }

  for (const auto& [name, result] : results) {
    for (const GamesHowellPair& pair : result.pairs) {
      const bool excludes_zero = pair.ci_low > 0.0 || pair.ci_high < 0.0;
      if (pair.significant != excludes_zero)
        return {false, name + " " + pair.group_a + "-" + pair.group_b +
                           ": significance and CI disagree"};
    }
  }
  return {true, {}};
}

// ---- criterion 4: studentized-range numerics --------------------------------

Outcome criterion_studentized_range() {
  // Published 5% two-sided studentized-range critical values (three
  // decimals, Harter's tables as reprinted in standard references).
  struct Entry {
    int k;
    double df, published;
  };
  const Entry table[] = {
      {2, 5, 3.635}, {2, 10, 3.151}, {2, 30, 2.888}, {2, 120, 2.800},
      {3, 5, 4.602}, {3, 10, 3.877}, {3, 30, 3.486}, {3, 120, 3.356},
      {4, 5, 5.218}, {4, 10, 4.327}, {4, 30, 3.845}, {4, 120, 3.685},
      {5, 5, 5.673}, {5, 10, 4.654}, {5, 30, 4.102}, {5, 120, 3.917},
  };
  for (const Entry& e : table) {
    const double q = studentized_range_q_crit(0.05, e.k, e.df);
    if (std::fabs(q - e.published) > 1e-3)
      return {false, "q_crit(0.05, " + std::to_string(e.k) + ", " +
                         std::to_string(e.df) + ") = " + std::to_string(q) +
                         " vs table " + std::to_string(e.published)};
  }

  const double sqrt2 = std::sqrt(2.0);
  for (double df : {3.0, 5.0, 12.0, 40.0, 120.0}) {
    for (double q : {0.5, 1.0, 2.0, 3.0, 4.5}) {
      const double via_range = studentized_range_upper_tail(q, 2, df);
      const double via_t = student_t_two_sided_p(q / sqrt2, df);
      if (std::fabs(via_range - via_t) > 1e-6)
        return {false, "k=2 reduction off at q=" + std::to_string(q) +
                           ", df=" + std::to_string(df)};
    }
  }
  return {true, {}};
}

// ---- criterion 5: planted-outlier recall ------------------------------------

Outcome criterion_outlier_recall() {
  const auto start = std::chrono::steady_clock::now();

  int hits = 0;
  for (std::uint64_t seed = 1; seed <= 10; seed++) {
    ResampledSeries weekly;
    weekly.grain = Grain::weekly;
    Rng rng(seed * 7919);
    const Date monday = Date::from_ymd(2017, 1, 2);
    for (int w = 0; w < 42; w++) {
      ResampledPoint p;
      p.period_start = monday.plus_days(7 * w);
      p.frequency = static_cast<std::int64_t>(rng.poisson(10.0));
      weekly.points.push_back(p);
    }
    const double mean = 10.0;
    weekly.points[13].frequency = static_cast<std::int64_t>(5.0 * mean);
    weekly.points[29].frequency = static_cast<std::int64_t>(5.0 * mean);

    AnomalyReport report = detect(weekly, 0.05, 100, 64, seed);
    if (report.periods[13].flagged && report.periods[29].flagged)
      hits++;
  }
  const double elapsed = seconds_since(start);
  if (hits < 9)
    return {false, "both planted weeks flagged in only " + std::to_string(hits) +
                       "/10 seeds"};
  if (elapsed >= 5.0)
    return {false, "took " + std::to_string(elapsed) + " s (limit 5 s)"};
  return {true, {}};
}

// ---- criterion 6: end-to-end episode recovery -----------------------

const char* kTwoYearScenario = R"(# 24-month scenario with planted episodes
start = 2017-01-01
end = 2018-12-31
baseline_daily_rate = 5.0
amount_law = lognormal(3.0, 1.0)
account = chk-1:checking:0.7
account = cc-1:credit:0.3
seed = 42

[episode]
start = 2017-02-03
end = 2017-02-17
pole = mania
level = mild
rate_multiplier = 1.5

[episode]
start = 2017-03-10
end = 2017-03-30
pole = mania
level = moderate
rate_multiplier = 1.5

[episode]
start = 2017-06-05
end = 2017-06-25
pole = mania
level = moderate
rate_multiplier = 1.5

[episode]
start = 2017-07-01
end = 2017-07-31
pole = mania
level = none
credit_share_delta = 0.2

[episode]
start = 2017-09-08
end = 2017-09-28
pole = mania
level = moderate
rate_multiplier = 1.5

[episode]
start = 2018-01-10
end = 2018-01-30
pole = mania
level = moderate
rate_multiplier = 1.5

[episode]
start = 2018-03-06
end = 2018-03-24
pole = mania
level = mild
rate_multiplier = 1.5

[episode]
start = 2018-06-07
end = 2018-06-27
pole = mania
level = moderate
rate_multiplier = 1.5

[episode]
start = 2018-07-01
end = 2018-07-31
pole = mania
level = none
credit_share_delta = 0.2
)";

Outcome criterion_episode_recovery() {
  const auto start = std::chrono::steady_clock::now();

  const fs::path dir = g_scratch / "two_year";
  fs::create_directories(dir);
  const fs::path config = dir / "scenario.conf";
  spit(config, kTwoYearScenario);

  if (!run_cli("synth \"" + config.string() + "\" --out \"" + dir.string() + "\""))
    return {false, "synth failed"};
  const std::string ledger = (dir / "ledger.csv").string();
  const std::string labels = (dir / "labels.csv").string();
  if (!run_cli("analyze \"" + ledger + "\" \"" + labels + "\" --out \"" + dir.string() +
               "\""))
    return {false, "analyze failed"};
  if (!run_cli("detect \"" + ledger + "\" --out \"" + dir.string() + "\""))
    return {false, "detect failed"};

  // (a) flagged high-frequency weeks sit inside labeled symptomatic spans.
  // plot_weekly.csv carries per-week frequency and mania severity; the
  // anomaly report carries the flags.
  std::map<std::string, std::pair<double, std::string>> weeks; // date -> (freq, severity)
  {
    std::istringstream in(slurp(dir / "plot_weekly.csv"));
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
      std::istringstream row(line);
      std::string date, freq, volume, severity;
      std::getline(row, date, ',');
      std::getline(row, freq, ',');
      std::getline(row, volume, ',');
      std::getline(row, severity, ',');
      weeks[date] = {std::stod(freq), severity};
    }
  }
  if (weeks.size() < 100)
    return {false, "expected ~105 weeks, got " + std::to_string(weeks.size())};
  double mean_freq = 0.0;
  for (const auto& [date, fs_] : weeks)
    mean_freq += fs_.first;
  mean_freq /= static_cast<double>(weeks.size());

  json anomaly = json::parse(slurp(dir / "anomaly.json"));
  int high_flagged = 0;
  int high_flagged_inside = 0;
  for (const auto& period : anomaly.at("periods")) {
    if (!period.at("flagged").get<bool>())
      continue;
    const auto& week = weeks.at(period.at("period_start").get<std::string>());
    if (week.first <= mean_freq)
      continue; // a quiet-outlier week, not a spending spike
    high_flagged++;
    if (week.second != "none")
      high_flagged_inside++;
  }
  if (high_flagged == 0)
    return {false, "no flagged high-frequency weeks at all"};
  const double inside_share =
      static_cast<double>(high_flagged_inside) / static_cast<double>(high_flagged);
  if (inside_share < 0.6)
    return {false, "only " + std::to_string(high_flagged_inside) + "/" +
                       std::to_string(high_flagged) +
                       " flagged high-frequency weeks fall inside labeled episodes"};

  // (b) the delta months carry a credit-ratio rise of at least 0.1 over
  // months untouched by any episode.
  struct Span {
    const char* start;
    const char* end;
  };
  const Span episodes[] = {
      {"2017-02-03", "2017-02-17"}, {"2017-03-10", "2017-03-30"},
      {"2017-06-05", "2017-06-25"}, {"2017-07-01", "2017-07-31"},
      {"2017-09-08", "2017-09-28"}, {"2018-01-10", "2018-01-30"},
      {"2018-03-06", "2018-03-24"}, {"2018-06-07", "2018-06-27"},
      {"2018-07-01", "2018-07-31"},
  };
  auto month_touched = [&](const std::string& month) {
    for (const Span& ep : episodes) {
      if (std::string(ep.start).substr(0, 7) <= month &&
          month <= std::string(ep.end).substr(0, 7))
        return true;
    }
    return false;
  };

  json report = json::parse(slurp(dir / "report.json"));
  double delta_sum = 0.0, quiet_sum = 0.0;
  int delta_n = 0, quiet_n = 0;
  for (const auto& entry : report.at("credit_ratios").at("count_based")) {
    const std::string month = entry.at("month").get<std::string>();
    const double ratio = entry.at("ratio").get<double>();
    if (month == "2017-07" || month == "2018-07") {
      delta_sum += ratio;
      delta_n++;
    } else if (!month_touched(month)) {
      quiet_sum += ratio;
      quiet_n++;
    }
  }
  if (delta_n != 2 || quiet_n < 10)
    return {false, "month classification failed (" + std::to_string(delta_n) + " delta, " +
                       std::to_string(quiet_n) + " quiet)"};
  const double rise = delta_sum / delta_n - quiet_sum / quiet_n;
  if (rise < 0.1)
    return {false, "credit ratio rise was " + std::to_string(rise) + ", needed >= 0.1"};

  const double elapsed = seconds_since(start);
  if (elapsed >= 30.0)
    return {false, "took " + std::to_string(elapsed) + " s (limit 30 s)"};
  return {true, {}};
}

// ---- criterion 7: ingest fixture corpus -------------------------------------

Outcome criterion_ingest_fixtures() {
  const fs::path dir = g_fixtures / "ingest";
  json golden = json::parse(slurp(dir / "golden.json"));
  if (golden.at("cases").size() < 12)
    return {false, "fixture corpus shrank below 12 cases"};

  auto parse_case = [&](const json& test) {
    IngestConfig cfg = IngestConfig::from_config(
        ConfigFile::load((dir / test.at("config").get<std::string>()).string()));
    std::vector<std::vector<AccountSection>> sections;
    for (const auto& name : test.at("files")) {
      std::ifstream in(dir / name.get<std::string>(), std::ios::binary);
      if (!in.good())
        throw InputError("missing fixture " + name.get<std::string>());
      sections.push_back(
          split_accounts(parse_raw_rows(in, name.get<std::string>(), cfg), cfg));
    }
    return assemble_ledger(sections, cfg);
  };

  for (const auto& test : golden.at("cases")) {
    const std::string name = test.at("name").get<std::string>();
    Ledger ledger = parse_case(test);
    if (ledger.accounts().size() != test.at("accounts").get<size_t>() ||
        ledger.transactions().size() != test.at("transactions").get<size_t>())
      return {false, name + ": wrong account or transaction count"};
    double expenditure = 0.0, income = 0.0;
    for (const auto& txn : ledger.transactions())
      (txn.direction == Direction::expenditure ? expenditure : income) += txn.amount;
    if (std::fabs(expenditure - test.at("expenditure_sum").get<double>()) > 1e-9 ||
        std::fabs(income - test.at("income_sum").get<double>()) > 1e-9)
      return {false, name + ": amount sums drifted"};
  }

  for (const auto& test : golden.at("errors")) {
    const std::string name = test.at("name").get<std::string>();
    try {
      parse_case(test);
      return {false, name + ": expected a parse error, got success"};
    } catch (const InputError& e) {
      const std::string message = e.what();
      for (const auto& part : test.at("message"))
        if (message.find(part.get<std::string>()) == std::string::npos)
          return {false, name + ": error lacks '" + part.get<std::string>() +
                             "' (got: " + message + ")"};
    }
  }
  return {true, {}};
}

// ---- criterion 8: privacy invariants ----------------------------------------

Outcome criterion_privacy() {
  Rng rng(271828);
  for (int trial = 0; trial < 1000; trial++) {
    Ledger ledger;
    const int n_accounts = 1 + static_cast<int>(rng.below(3));
    for (int a = 0; a < n_accounts; a++)
      ledger.add_account({"acct-" + std::to_string(a),
                          a % 2 ? AccountKind::credit : AccountKind::checking});
    const int n_txns = 1 + static_cast<int>(rng.below(50));
    for (int t = 0; t < n_txns; t++) {
      Transaction txn;
      txn.date = Date::from_ymd(2017, 1, 1).plus_days(static_cast<int>(rng.below(400)));
      txn.amount = 0.01 + 900.0 * rng.uniform01();
      txn.direction = rng.uniform01() < 0.25 ? Direction::income : Direction::expenditure;
      txn.account_id = "acct-" + std::to_string(rng.below(n_accounts));
      txn.description = "MERCHANT-" + std::to_string(t) + "-CONFIDENTIAL";
      ledger.add_transaction(txn);
    }

    NormalizedSeries series = normalize_per_account(filter_expenditures(ledger));
    for (const NormalizedEntry& entry : series.entries)
      if (entry.normalized_amount < 0.0 || entry.normalized_amount > 1.0)
        return {false, "trial " + std::to_string(trial) + ": amount " +
                           std::to_string(entry.normalized_amount) + " outside [0,1]"};

    std::ostringstream out;
    emit_normalized_csv(out, series);
    const std::string text = out.str();
    if (text.find("MERCHANT") != std::string::npos ||
        text.find("CONFIDENTIAL") != std::string::npos)
      return {false, "trial " + std::to_string(trial) + ": description leaked"};
  }
  return {true, {}};
}

// ---- criterion 9: byte-identical reruns --------------------------------------

Outcome criterion_determinism() {
  const fs::path dir = g_scratch / "determinism";
  const fs::path run_a = dir / "a";
  const fs::path run_b = dir / "b";
  fs::create_directories(run_a);
  fs::create_directories(run_b);

  const fs::path scenario = dir / "scenario.conf";
  spit(scenario, kTwoYearScenario);

  const std::string ingest_config = (g_fixtures / "ingest" / "basic.conf").string();
  const std::string ingest_input = (g_fixtures / "ingest" / "multi_account.csv").string();

  struct Step {
    std::string args_tail; // everything but --out
    std::vector<std::string> outputs;
  };
  const Step steps[] = {
      {"ingest \"" + ingest_input + "\" --config \"" + ingest_config + "\"",
       {"clean.csv"}},
      {"synth \"" + scenario.string() + "\"", {"ledger.csv", "labels.csv"}},
      {"analyze \"" + (run_a / "ledger.csv").string() + "\" \"" +
           (run_a / "labels.csv").string() + "\" --seed 42 --per-account-burstiness",
       {"report.json", "normalized.csv", "plot_daily.csv", "plot_weekly.csv",
        "plot_monthly.csv"}},
      {"detect \"" + (run_a / "ledger.csv").string() + "\" --sweep 0.02,0.05,0.1",
       {"anomaly.json", "anomaly_weekly.csv"}},
  };

  for (const Step& step : steps) {
    if (!run_cli(step.args_tail + " --out \"" + run_a.string() + "\""))
      return {false, "first run failed: " + step.args_tail.substr(0, 30)};
    if (!run_cli(step.args_tail + " --out \"" + run_b.string() + "\""))
      return {false, "second run failed: " + step.args_tail.substr(0, 30)};
    for (const std::string& name : step.outputs) {
      if (slurp(run_a / name) != slurp(run_b / name))
        return {false, name + " differs between reruns"};
      if (slurp(run_a / name).empty())
        return {false, name + " came out empty"};
    }
  }
  return {true, {}};
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <cli-binary> <fixtures-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_fixtures = argv[2];
  g_scratch = fs::temp_directory_path() / "ledsig-acceptance";
  std::error_code ec;
  fs::remove_all(g_scratch, ec);
  fs::create_directories(g_scratch);

  struct Criterion {
    const char* label;
    Outcome (*check)();
  };
  const Criterion criteria[] = {
      {"burstiness analytic anchors", criterion_burstiness},
      {"welch anova oracle equivalence", criterion_welch},
      {"games-howell oracle equivalence", criterion_games_howell},
      {"studentized-range numerics", criterion_studentized_range},
      {"isolation forest planted-outlier recall", criterion_outlier_recall},
      {"end-to-end episode recovery", criterion_episode_recovery},
      {"ingest fixture corpus", criterion_ingest_fixtures},
      {"privacy invariants", criterion_privacy},
      {"byte-identical reruns", criterion_determinism},
  };

  int failures = 0;
  for (size_t i = 0; i < std::size(criteria); i++) {
    Outcome outcome;
    try {
      outcome = criteria[i].check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << (i + 1) << " (" << criteria[i].label << "): "
              << (outcome.pass ? "PASS" : "FAIL") << (outcome.note.empty() ? "" : " - ")
              << outcome.note << "\n";
    if (!outcome.pass)
      failures++;
  }
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 9 criteria passed\n";
  return 0;
}
