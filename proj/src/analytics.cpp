#include "ledsig/analytics.hpp"

#include "ledsig/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ledsig {

namespace {

// Highest mania severity over any day of [start, end] inclusive.
Severity span_severity(const LabelTimeline& timeline, Date start, Date end) {
    Severity top = Severity::none;
    for (Date day = start; day <= end; day = day.plus_days(1)) {
        Severity s = timeline.severity_at(day, Pole::mania);
        if (static_cast<int>(s) > static_cast<int>(top))
            top = s;
        if (top == Severity::severe)
            break;
    }
    return top;
}

Date period_start_for(Date date, Grain grain) {
    switch (grain) {
    case Grain::daily: return date;
    case Grain::weekly: return date.week_start();
    case Grain::monthly: return date.month_start();
    }
    throw InputError("unknown grain");
}

Date next_period(Date period_start, Grain grain) {
    switch (grain) {
    case Grain::daily: return period_start.plus_days(1);
    case Grain::weekly: return period_start.plus_days(7);
    case Grain::monthly: return period_start.next_month_start();
    }
    throw InputError("unknown grain");
}

} // namespace

std::string_view to_string(Grain g) {
    switch (g) {
    case Grain::daily: return "daily";
    case Grain::weekly: return "weekly";
    case Grain::monthly: return "monthly";
    }
    return "?";
}

Grain parse_grain(std::string_view s) {
    if (s == "daily") return Grain::daily;
    if (s == "weekly") return Grain::weekly;
    if (s == "monthly") return Grain::monthly;
    throw InputError("unknown grain '" + std::string(s) +
                     "' (expected daily, weekly, or monthly)");
}

std::string_view to_string(Grouping g) {
    switch (g) {
    case Grouping::three_level: return "three-level";
    case Grouping::binary: return "binary";
    }
    return "?";
}

Grouping parse_grouping(std::string_view s) {
    if (s == "three-level") return Grouping::three_level;
    if (s == "binary") return Grouping::binary;
    throw InputError("unknown grouping '" + std::string(s) +
                     "' (expected three-level or binary)");
}

std::string_view to_string(BurstinessVariant v) {
    switch (v) {
    case BurstinessVariant::interevent_days: return "B_D";
    case BurstinessVariant::zero_gap_runs: return "B_C";
    }
    return "?";
}

ResampledSeries resample(const NormalizedSeries& series, Grain grain,
                         const LabelTimeline& timeline) {
    if (series.entries.empty())
        throw InputError("cannot resample an empty series");

    const Date first = series.entries.front().date;
    const Date last = series.entries.back().date;
    ResampledSeries out;
    out.grain = grain;

    for (Date start = period_start_for(first, grain);
         start <= period_start_for(last, grain); start = next_period(start, grain)) {
        ResampledPoint point;
        point.period_start = start;
        point.severity =
            span_severity(timeline, start, next_period(start, grain).plus_days(-1));
        out.points.push_back(point);
    }

    for (const NormalizedEntry& entry : series.entries) {
        const Date bucket = period_start_for(entry.date, grain);
        // Entries are date-sorted, so a linear scan would do; index math is
        // simpler for daily/weekly and cheap enough for monthly.
        std::int64_t idx;
        if (grain == Grain::monthly) {
            idx = (bucket.year() - out.points.front().period_start.year()) * 12 +
                  (bucket.month() - out.points.front().period_start.month());
        } else {
            const std::int64_t step = grain == Grain::daily ? 1 : 7;
            idx = out.points.front().period_start.days_until(bucket) / step;
        }
        ResampledPoint& point = out.points[static_cast<size_t>(idx)];
        point.frequency += 1;
        point.volume += entry.normalized_amount;
    }
    return out;
}

GroupedStats group_daily_stats(const ResampledSeries& daily, Grouping grouping) {
    if (daily.grain != Grain::daily)
        throw InputError("group_daily_stats requires the daily grain");

    auto group_name = [&](Severity s) -> std::string {
        if (grouping == Grouping::binary)
            return s == Severity::none ? "none" : "symptomatic";
        return std::string(to_string(s));
    };

    std::vector<std::string> candidates;
    if (grouping == Grouping::binary) {
        candidates = {"none", "symptomatic"};
    } else {
        candidates = {"none", "mild", "moderate"};
        for (const ResampledPoint& p : daily.points)
            if (p.severity == Severity::severe) {
                candidates.push_back("severe");
                break;
            }
    }

    struct Accum {
        double freq_sum = 0.0;
        double vol_sum = 0.0;
        std::int64_t n = 0;
    };
    std::vector<Accum> accums(candidates.size());
    for (const ResampledPoint& p : daily.points) {
        const std::string name = group_name(p.severity);
        for (size_t i = 0; i < candidates.size(); i++) {
            if (candidates[i] == name) {
                accums[i].freq_sum += static_cast<double>(p.frequency);
                accums[i].vol_sum += p.volume;
                accums[i].n += 1;
                break;
            }
        }
    }

    GroupedStats out;
    out.grouping = grouping;
    for (size_t i = 0; i < candidates.size(); i++) {
        if (accums[i].n == 0) {
            out.omitted.push_back(candidates[i]);
            continue;
        }
        GroupStat stat;
        stat.group = candidates[i];
        stat.n_days = accums[i].n;
        stat.mean_frequency = accums[i].freq_sum / static_cast<double>(accums[i].n);
        stat.mean_volume = accums[i].vol_sum / static_cast<double>(accums[i].n);
        out.groups.push_back(std::move(stat));
    }
    return out;
}

std::vector<double> interevent_days(const std::vector<NormalizedEntry>& entries) {
    if (entries.size() < 2)
        throw NumericError("interevent intervals need at least 2 transactions");
    std::vector<double> intervals;
    intervals.reserve(entries.size() - 1);
    for (size_t i = 1; i < entries.size(); i++)
        intervals.push_back(
            static_cast<double>(entries[i - 1].date.days_until(entries[i].date)));
    return intervals;
}

std::vector<double> zero_gap_runs(const ResampledSeries& daily) {
    if (daily.grain != Grain::daily)
        throw InputError("zero_gap_runs requires the daily grain");
    std::vector<double> runs;
    std::int64_t run = 0;
    for (const ResampledPoint& p : daily.points) {
        if (p.frequency == 0) {
            run += 1;
        } else if (run > 0) {
            runs.push_back(static_cast<double>(run));
            run = 0;
        }
    }
    if (run > 0)
        runs.push_back(static_cast<double>(run));
    return runs;
}

BurstinessResult burstiness(const std::vector<double>& intervals,
                            BurstinessVariant variant) {
    if (intervals.size() < 2)
        throw NumericError("burstiness needs at least 2 intervals, got " +
                           std::to_string(intervals.size()));
    double sum = 0.0;
    for (double v : intervals) {
        if (v < 0)
            throw InputError("negative interevent interval");
        sum += v;
    }
    const double n = static_cast<double>(intervals.size());
    const double tau = sum / n;
    if (tau == 0.0)
        throw NumericError("burstiness undefined: all intervals are zero");

    double sq = 0.0;
    for (double v : intervals)
        sq += (v - tau) * (v - tau);
    const double sigma = std::sqrt(sq / n);

    BurstinessResult out;
    out.tau = tau;
    out.sigma = sigma;
    out.n_intervals = static_cast<std::int64_t>(intervals.size());
    out.variant = variant;
    out.B = (sigma - tau) / (sigma + tau);
    return out;
}

PhaseBurstiness burstiness_by_phase(const NormalizedSeries& series,
                                    const ResampledSeries& daily,
                                    BurstinessVariant variant) {
    if (daily.grain != Grain::daily)
        throw InputError("burstiness_by_phase requires the daily grain");

    PhaseBurstiness out;
    out.variant = variant;
    if (daily.points.empty())
        return out;

    struct LevelAccum {
        double b_sum = 0.0;
        std::int64_t n = 0;
    };
    LevelAccum accums[4];

    size_t seg_begin = 0;
    while (seg_begin < daily.points.size()) {
        size_t seg_end = seg_begin + 1; // one past
        while (seg_end < daily.points.size() &&
               daily.points[seg_end].severity == daily.points[seg_begin].severity)
            seg_end++;

        const Severity level = daily.points[seg_begin].severity;
        const Date start = daily.points[seg_begin].period_start;
        const Date end = daily.points[seg_end - 1].period_start;

        std::vector<double> intervals;
        std::int64_t n_events = 0;
        if (variant == BurstinessVariant::interevent_days) {
            std::vector<NormalizedEntry> inside;
            for (const NormalizedEntry& e : series.entries)
                if (e.date >= start && e.date <= end)
                    inside.push_back(e);
            n_events = static_cast<std::int64_t>(inside.size());
            if (inside.size() >= 2)
                intervals = interevent_days(inside);
        } else {
            ResampledSeries sub;
            sub.grain = Grain::daily;
            sub.points.assign(daily.points.begin() + seg_begin,
                              daily.points.begin() + seg_end);
            intervals = zero_gap_runs(sub);
            n_events = static_cast<std::int64_t>(intervals.size());
        }

        bool usable = intervals.size() >= 2;
        if (usable && variant == BurstinessVariant::interevent_days) {
            double sum = 0.0;
            for (double v : intervals)
                sum += v;
            usable = sum > 0.0; // all same-day transactions: B undefined
        }
        if (usable) {
            LevelAccum& acc = accums[static_cast<int>(level)];
            acc.b_sum += burstiness(intervals, variant).B;
            acc.n += 1;
        } else {
            out.skipped.push_back(SkippedSegment{start, end, level, n_events});
        }
        seg_begin = seg_end;
    }

    for (Severity level : {Severity::none, Severity::mild, Severity::moderate,
                           Severity::severe}) {
        const LevelAccum& acc = accums[static_cast<int>(level)];
        if (acc.n > 0)
            out.phases.push_back(PhaseBurstiness::Phase{
                level, acc.b_sum / static_cast<double>(acc.n), acc.n});
    }
    return out;
}

std::vector<MonthlyRatio> credit_ratio_monthly(const Ledger& ledger, bool volume_based) {
    struct MonthAccum {
        Date month;
        double credit = 0.0;
        double total = 0.0;
    };
    std::vector<MonthAccum> months;
    for (const Transaction& txn : ledger.transactions()) {
        if (txn.direction != Direction::expenditure)
            throw InputError("credit_ratio_monthly expects an expenditure-only ledger");
        const Date month = txn.date.month_start();
        if (months.empty() || months.back().month != month)
            months.push_back(MonthAccum{month, 0.0, 0.0});
        MonthAccum& acc = months.back();
        const double weight = volume_based ? txn.amount : 1.0;
        acc.total += weight;
        if (ledger.find_account(txn.account_id)->kind == AccountKind::credit)
            acc.credit += weight;
    }
    std::vector<MonthlyRatio> out;
    out.reserve(months.size());
    for (const MonthAccum& acc : months)
        if (acc.total > 0)
            out.push_back(MonthlyRatio{acc.month, acc.credit / acc.total});
    return out;
}

} // namespace ledsig
