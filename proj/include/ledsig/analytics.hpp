#ifndef LEDSIG_ANALYTICS_HPP
#define LEDSIG_ANALYTICS_HPP

#include "ledsig/ledger.hpp"
#include "ledsig/privacy.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ledsig {

enum class Grain { daily, weekly, monthly };

std::string_view to_string(Grain g);
Grain parse_grain(std::string_view s); // throws InputError

struct ResampledPoint {
    Date period_start;
    std::int64_t frequency = 0;
    double volume = 0.0;
    Severity severity = Severity::none; // highest mania level over the period

    bool operator==(const ResampledPoint&) const = default;
};

struct ResampledSeries {
    Grain grain = Grain::daily;
    std::vector<ResampledPoint> points; // contiguous periods, ascending
};

// Buckets the series at the given grain. Every period from the one holding
// the first transaction through the one holding the last is present, with
// empty periods zero-filled. Weekly periods start on Monday; monthly
// periods are calendar months. Throws InputError on an empty series.
ResampledSeries resample(const NormalizedSeries& series, Grain grain,
                         const LabelTimeline& timeline);

enum class Grouping { three_level, binary };

std::string_view to_string(Grouping g);
Grouping parse_grouping(std::string_view s); // throws InputError

struct GroupStat {
    std::string group;
    double mean_frequency = 0.0;
    double mean_volume = 0.0;
    std::int64_t n_days = 0;
};

struct GroupedStats {
    Grouping grouping = Grouping::three_level;
    std::vector<GroupStat> groups;       // only groups with at least one day
    std::vector<std::string> omitted;    // candidate groups with zero days
};

// Mean daily frequency/volume per severity group. three_level keeps the
// labeled levels apart ("severe" appears only when present); binary folds
// every non-none day into "symptomatic". Requires daily grain.
GroupedStats group_daily_stats(const ResampledSeries& daily, Grouping grouping);

// Day differences between successive entries (same-day pairs give 0).
// Requires >= 2 entries, sorted by date.
std::vector<double> interevent_days(const std::vector<NormalizedEntry>& entries);

// Lengths of maximal runs of zero-frequency days. Requires daily grain.
std::vector<double> zero_gap_runs(const ResampledSeries& daily);

enum class BurstinessVariant { interevent_days, zero_gap_runs }; // B_D, B_C

std::string_view to_string(BurstinessVariant v);

struct BurstinessResult {
    double B = 0.0;
    double tau = 0.0;   // mean interval, days
    double sigma = 0.0; // population standard deviation, days
    std::int64_t n_intervals = 0;
    BurstinessVariant variant = BurstinessVariant::interevent_days;
};

// B = (sigma - tau) / (sigma + tau), algebraically (r-1)/(r+1) with
// r = sigma/tau. Population (divisor n) standard deviation. Throws
// NumericError when fewer than 2 intervals or tau = 0 (B undefined), and
// InputError on negative intervals.
BurstinessResult burstiness(const std::vector<double>& intervals,
                            BurstinessVariant variant);

struct SkippedSegment {
    Date start;
    Date end;
    Severity level = Severity::none;
    std::int64_t n_events = 0; // transactions (B_D) or gap runs (B_C) found
};

struct PhaseBurstiness {
    struct Phase {
        Severity level = Severity::none;
        double mean_B = 0.0;
        std::int64_t n_segments = 0;
    };
    BurstinessVariant variant = BurstinessVariant::interevent_days;
    std::vector<Phase> phases;            // levels with >= 1 usable segment
    std::vector<SkippedSegment> skipped;  // segments with too little data
};

// Splits the daily span into contiguous same-severity segments, computes B
// per segment, and averages within each severity level. Segments without
// enough intervals (or with all-zero intervals) are skipped and reported.
// Pass a merged timeline's resampling for the binary none/symptomatic view.
PhaseBurstiness burstiness_by_phase(const NormalizedSeries& series,
                                    const ResampledSeries& daily,
                                    BurstinessVariant variant);

struct MonthlyRatio {
    Date month;   // first of month
    double ratio = 0.0;

    bool operator==(const MonthlyRatio&) const = default;
};

// Share of expenditures made on credit accounts per calendar month.
// Count-based by default; volume_based uses amount sums instead. Months
// without expenditures are omitted. Expects an expenditure-only ledger.
std::vector<MonthlyRatio> credit_ratio_monthly(const Ledger& ledger,
                                               bool volume_based = false);

} // namespace ledsig

#endif
