#include "ledsig/report.hpp"

#include "ledsig/csv.hpp"
#include "ledsig/errors.hpp"
#include "ledsig/numfmt.hpp"
#include "ledsig/stat_tests.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>

namespace ledsig {

namespace {

constexpr std::string_view kCleanHeader = kCleanCsvHeader;

const std::vector<std::string>& clean_header_fields() {
    static const std::vector<std::string> fields = {
        "date", "account_id", "account_kind", "direction", "amount", "description"};
    return fields;
}

std::string at(const std::string& source, int line) {
    return source + ":" + std::to_string(line);
}

double fin(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw NumericError(std::string("report value '") + what + "' is not finite");
    }
    return v;
}

double parse_unit_amount(const std::string& text, const std::string& where) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
        throw InputError(where + ": bad amount '" + text + "'");
    }
    if (value < 0.0 || value > 1.0) {
        throw InputError(where + ": amount " + text +
                         " is outside [0, 1]; this file is not a normalized series");
    }
    return value;
}

} // namespace

void emit_clean_csv(std::ostream& out, const Ledger& ledger) {
    out << kCleanHeader << '\n';
    std::vector<std::string> row(6);
    for (const auto& txn : ledger.transactions()) {
        const Account* account = ledger.find_account(txn.account_id);
        row[0] = txn.date.to_iso();
        row[1] = txn.account_id;
        row[2] = to_string(account->kind);
        row[3] = to_string(txn.direction);
        row[4] = format_double(txn.amount);
        row[5] = txn.description.value_or("");
        write_csv_record(out, row, ',');
    }
}

void emit_normalized_csv(std::ostream& out, const NormalizedSeries& series) {
    out << kNormalizedMarker << '\n' << kCleanHeader << '\n';
    std::vector<std::string> row(6);
    for (const auto& entry : series.entries) {
        row[0] = entry.date.to_iso();
        row[1] = entry.account_id;
        row[2] = to_string(entry.account_kind);
        row[3] = "expenditure";
        row[4] = format_double(entry.normalized_amount);
        row[5].clear();
        write_csv_record(out, row, ',');
    }
}

NormalizedSeries parse_normalized_csv(std::istream& in, const std::string& source_name) {
    CsvReader reader(in, source_name, ',');
    std::vector<std::string> fields;
    int line = 0;

    if (!reader.next(fields, line) || fields.size() != 1 || fields[0] != kNormalizedMarker) {
        throw InputError(source_name + ": missing '# normalized' marker on line 1; " +
                         "expected a normalized series file");
    }
    if (!reader.next(fields, line) || fields != clean_header_fields()) {
        throw InputError(source_name + ": bad or missing header on line 2");
    }

    NormalizedSeries series;
    std::map<std::string, AccountKind> kinds;
    while (reader.next(fields, line)) {
        const std::string where = at(source_name, line);
        if (fields.size() != 6) {
            throw InputError(where + ": expected 6 columns, found " +
                             std::to_string(fields.size()));
        }
        NormalizedEntry entry;
        auto date = Date::try_parse_iso(fields[0]);
        if (!date) {
            throw InputError(where + ": bad date '" + fields[0] + "'");
        }
        entry.date = *date;
        entry.account_id = fields[1];
        try {
            entry.account_kind = parse_account_kind(fields[2]);
        } catch (const InputError& e) {
            throw InputError(where + ": " + e.what());
        }
        if (fields[3] != "expenditure") {
            throw InputError(where + ": direction '" + fields[3] +
                             "' not allowed; a normalized series holds only expenditures");
        }
        entry.normalized_amount = parse_unit_amount(fields[4], where);
        if (!fields[5].empty()) {
            throw InputError(where + ": description column must be empty in a " +
                             "normalized series");
        }
        if (!series.entries.empty() && entry.date < series.entries.back().date) {
            throw InputError(where + ": dates out of order");
        }
        auto [it, inserted] = kinds.emplace(entry.account_id, entry.account_kind);
        if (!inserted && it->second != entry.account_kind) {
            throw InputError(where + ": account '" + entry.account_id +
                             "' changes kind mid-file");
        }
        series.entries.push_back(std::move(entry));
    }
    return series;
}

LabelTimeline read_label_csv(std::istream& in, const std::string& source_name) {
    CsvReader reader(in, source_name, ',');
    std::vector<std::string> fields;
    int line = 0;

    static const std::vector<std::string> header = {"pole", "level", "start", "end"};
    if (!reader.next(fields, line) || fields != header) {
        throw InputError(source_name + ": label file must start with header 'pole,level,start,end'");
    }

    std::vector<SeverityLabel> labels;
    while (reader.next(fields, line)) {
        const std::string where = at(source_name, line);
        if (fields.size() != 4) {
            throw InputError(where + ": expected 4 columns, found " +
                             std::to_string(fields.size()));
        }
        SeverityLabel label;
        try {
            label.pole = parse_pole(fields[0]);
            label.level = parse_severity(fields[1]);
        } catch (const InputError& e) {
            throw InputError(where + ": " + e.what());
        }
        auto start = Date::try_parse_iso(fields[2]);
        auto end = Date::try_parse_iso(fields[3]);
        if (!start || !end) {
            throw InputError(where + ": bad date '" + (start ? fields[3] : fields[2]) + "'");
        }
        if (*end < *start) {
            throw InputError(where + ": label ends before it starts");
        }
        label.start = *start;
        label.end = *end;
        labels.push_back(label);
    }
    try {
        return LabelTimeline(std::move(labels));
    } catch (const InputError& e) {
        throw InputError(source_name + ": " + e.what());
    }
}

void write_label_csv(std::ostream& out, const LabelTimeline& timeline) {
    out << "pole,level,start,end\n";
    std::vector<std::string> row(4);
    for (const auto& label : timeline.labels()) {
        row[0] = to_string(label.pole);
        row[1] = to_string(label.level);
        row[2] = label.start.to_iso();
        row[3] = label.end.to_iso();
        write_csv_record(out, row, ',');
    }
}

void emit_plot_csv(std::ostream& out, const ResampledSeries& series) {
    out << "period_start,frequency,volume,severity\n";
    std::vector<std::string> row(4);
    for (const auto& pt : series.points) {
        row[0] = pt.period_start.to_iso();
        row[1] = std::to_string(pt.frequency);
        row[2] = format_double(pt.volume);
        row[3] = to_string(pt.severity);
        write_csv_record(out, row, ',');
    }
}

void emit_anomaly_csv(std::ostream& out, const AnomalyReport& report) {
    out << "period_start,score,flagged\n";
    std::vector<std::string> row(3);
    for (const auto& period : report.periods) {
        row[0] = period.period_start.to_iso();
        row[1] = format_double(period.score);
        row[2] = period.flagged ? "true" : "false";
        write_csv_record(out, row, ',');
    }
}

namespace {

using ordered = nlohmann::ordered_json;

enum class Feature { frequency, volume };

std::string_view to_string(Feature f) {
    return f == Feature::frequency ? "frequency" : "volume";
}

std::vector<SampleGroup> build_sample_groups(const ResampledSeries& daily,
                                             Grouping grouping, Feature feature) {
    struct Bucket {
        std::string label;
        std::vector<double> values;
    };
    std::vector<Bucket> buckets;
    if (grouping == Grouping::three_level) {
        buckets = {{"none", {}}, {"mild", {}}, {"moderate", {}}, {"severe", {}}};
    } else {
        buckets = {{"none", {}}, {"symptomatic", {}}};
    }
    for (const auto& pt : daily.points) {
        std::size_t idx = grouping == Grouping::three_level
                              ? static_cast<std::size_t>(pt.severity)
                              : (pt.severity == Severity::none ? 0 : 1);
        buckets[idx].values.push_back(feature == Feature::frequency
                                          ? static_cast<double>(pt.frequency)
                                          : pt.volume);
    }
    std::vector<SampleGroup> groups;
    for (auto& bucket : buckets) {
        if (bucket.values.empty()) {
            continue;
        }
        try {
            groups.push_back(SampleGroup::from_values(bucket.label, std::move(bucket.values)));
        } catch (const NumericError& e) {
            throw NumericError("group '" + bucket.label + "': " + e.what());
        }
    }
    return groups;
}

ordered welch_json(const WelchAnovaResult& w) {
    return ordered{{"F", fin(w.F, "welch.F")},
                   {"df1", fin(w.df1, "welch.df1")},
                   {"df2", fin(w.df2, "welch.df2")},
                   {"p", fin(w.p, "welch.p")}};
}

ordered games_howell_json(const GamesHowellResult& gh) {
    ordered pairs = ordered::array();
    for (const auto& pr : gh.pairs) {
        pairs.push_back(ordered{{"group_a", pr.group_a},
                                {"group_b", pr.group_b},
                                {"diff", fin(pr.diff, "games_howell.diff")},
                                {"se", fin(pr.se, "games_howell.se")},
                                {"df", fin(pr.df, "games_howell.df")},
                                {"q", fin(pr.q, "games_howell.q")},
                                {"p", fin(pr.p, "games_howell.p")},
                                {"ci_low", fin(pr.ci_low, "games_howell.ci_low")},
                                {"ci_high", fin(pr.ci_high, "games_howell.ci_high")},
                                {"significant", pr.significant}});
    }
    return ordered{{"alpha", gh.alpha}, {"pairs", std::move(pairs)}};
}

ordered grouped_stats_json(const GroupedStats& stats) {
    ordered groups = ordered::array();
    for (const auto& g : stats.groups) {
        groups.push_back(ordered{{"group", g.group},
                                 {"n_days", g.n_days},
                                 {"mean_frequency", fin(g.mean_frequency, "grouped.mean_frequency")},
                                 {"mean_volume", fin(g.mean_volume, "grouped.mean_volume")}});
    }
    return ordered{{"groups", std::move(groups)}, {"omitted", stats.omitted}};
}

ordered burstiness_json(const BurstinessResult& b) {
    return ordered{{"B", fin(b.B, "burstiness.B")},
                   {"tau", fin(b.tau, "burstiness.tau")},
                   {"sigma", fin(b.sigma, "burstiness.sigma")},
                   {"n_intervals", b.n_intervals}};
}

std::string phase_label(Severity level, Grouping grouping) {
    if (grouping == Grouping::binary && level != Severity::none) {
        return "symptomatic";
    }
    return std::string(ledsig::to_string(level));
}

ordered phase_json(const PhaseBurstiness& pb, Grouping grouping) {
    ordered phases = ordered::array();
    for (const auto& phase : pb.phases) {
        phases.push_back(ordered{{"level", phase_label(phase.level, grouping)},
                                 {"mean_B", fin(phase.mean_B, "by_phase.mean_B")},
                                 {"n_segments", phase.n_segments}});
    }
    ordered skipped = ordered::array();
    for (const auto& seg : pb.skipped) {
        skipped.push_back(ordered{{"start", seg.start.to_iso()},
                                  {"end", seg.end.to_iso()},
                                  {"level", phase_label(seg.level, grouping)},
                                  {"n_events", seg.n_events}});
    }
    return ordered{{"phases", std::move(phases)}, {"skipped", std::move(skipped)}};
}

ordered ratio_json(const std::vector<MonthlyRatio>& ratios) {
    ordered arr = ordered::array();
    for (const auto& r : ratios) {
        arr.push_back(ordered{{"month", r.month.to_iso_month()},
                              {"ratio", fin(r.ratio, "credit_ratios.ratio")}});
    }
    return arr;
}

ordered anomaly_periods_json(const AnomalyReport& report) {
    ordered arr = ordered::array();
    for (const auto& p : report.periods) {
        arr.push_back(ordered{{"period_start", p.period_start.to_iso()},
                              {"score", fin(p.score, "anomaly.score")},
                              {"flagged", p.flagged}});
    }
    return arr;
}

ordered anomaly_json(const AnomalyReport& report) {
    return ordered{{"contamination", report.contamination},
                   {"n_trees", report.n_trees},
                   {"psi", report.psi},
                   {"seed", report.seed},
                   {"volume_feature", report.volume_feature},
                   {"threshold", fin(report.threshold, "anomaly.threshold")},
                   {"n_weeks", static_cast<std::int64_t>(report.periods.size())},
                   {"periods", anomaly_periods_json(report)}};
}

ordered artifact_json() {
    return ordered{{"name", kArtifactName}, {"version", kArtifactVersion}};
}

void check_detection_options(double contamination, int n_trees, int psi) {
    if (!(contamination > 0.0 && contamination <= 0.5)) {
        throw InputError("contamination must lie in (0, 0.5]");
    }
    if (n_trees < 1) {
        throw InputError("n_trees must be at least 1");
    }
    if (psi < 2) {
        throw InputError("psi must be at least 2");
    }
}

} // namespace

AnalyzeOutput run_analyze(const Ledger& ledger, const LabelTimeline& timeline,
                          const AnalyzeOptions& options) {
    if (!(options.alpha > 0.0 && options.alpha < 1.0)) {
        throw InputError("alpha must lie strictly between 0 and 1");
    }
    check_detection_options(options.contamination, options.n_trees, options.psi);

    Ledger expenditures = filter_expenditures(ledger);
    if (expenditures.empty()) {
        throw InputError("ledger holds no expenditures; nothing to analyze");
    }
    NormalizedSeries norm = normalize_per_account(expenditures);

    std::vector<std::string> warnings;
    ResampledSeries daily = resample(norm, Grain::daily, timeline);
    ResampledSeries weekly = resample(norm, Grain::weekly, timeline);
    ResampledSeries daily_binary = resample(norm, Grain::daily, timeline.merge_symptomatic());

    const bool want_three = std::find(options.groupings.begin(), options.groupings.end(),
                                      Grouping::three_level) != options.groupings.end();
    const bool want_binary = std::find(options.groupings.begin(), options.groupings.end(),
                                       Grouping::binary) != options.groupings.end();

    ordered report;
    report["schema_version"] = kReportSchemaVersion;
    report["artifact"] = artifact_json();

    {
        ordered meta;
        meta["inputs"] = options.input_names;
        meta["span"] = ordered{{"start", ledger.transactions().front().date.to_iso()},
                               {"end", ledger.transactions().back().date.to_iso()}};
        meta["n_transactions"] = static_cast<std::int64_t>(ledger.transactions().size());
        meta["n_expenditures"] = static_cast<std::int64_t>(expenditures.transactions().size());
        meta["n_accounts"] = static_cast<std::int64_t>(ledger.accounts().size());
        meta["alpha"] = options.alpha;
        meta["seed"] = options.seed;
        meta["contamination"] = options.contamination;
        meta["n_trees"] = options.n_trees;
        meta["psi"] = options.psi;
        meta["volume_feature"] = options.volume_feature;
        ordered grains = ordered::array();
        for (Grain g : options.grains) {
            grains.push_back(std::string(to_string(g)));
        }
        meta["grains"] = std::move(grains);
        ordered groupings = ordered::array();
        for (Grouping g : options.groupings) {
            groupings.push_back(std::string(to_string(g)));
        }
        meta["groupings"] = std::move(groupings);
        report["metadata"] = std::move(meta);
    }

    report["grouped_stats"] = ordered{{"three_level", nullptr}, {"binary", nullptr}};
    report["welch"] = ordered{{"three_level", nullptr}, {"binary", nullptr}};
    report["games_howell"] = ordered{{"three_level", nullptr}, {"binary", nullptr}};

    for (Grouping grouping : {Grouping::three_level, Grouping::binary}) {
        if ((grouping == Grouping::three_level && !want_three) ||
            (grouping == Grouping::binary && !want_binary)) {
            continue;
        }
        const char* key = grouping == Grouping::three_level ? "three_level" : "binary";
        report["grouped_stats"][key] = grouped_stats_json(group_daily_stats(daily, grouping));

        ordered welch_section = ordered::object();
        ordered gh_section = ordered::object();
        for (Feature feature : {Feature::frequency, Feature::volume}) {
            const std::string feat(to_string(feature));
            try {
                auto groups = build_sample_groups(daily, grouping, feature);
                if (groups.size() < 2) {
                    throw NumericError("only one severity group has data; "
                                       "a comparison needs at least two");
                }
                welch_section[feat] = welch_json(welch_anova(groups));
                gh_section[feat] = games_howell_json(games_howell(groups, options.alpha));
            } catch (const NumericError& e) {
                if (!welch_section.contains(feat)) {
                    welch_section[feat] = nullptr;
                }
                gh_section[feat] = nullptr;
                warnings.push_back(std::string(to_string(grouping)) + " " + feat + ": " +
                                   e.what());
            }
        }
        report["welch"][key] = std::move(welch_section);
        report["games_howell"][key] = std::move(gh_section);
    }

    {
        ordered overall = ordered::object();
        const struct {
            BurstinessVariant variant;
            const char* key;
        } variants[] = {{BurstinessVariant::interevent_days, "B_D"},
                        {BurstinessVariant::zero_gap_runs, "B_C"}};
        for (const auto& v : variants) {
            try {
                std::vector<double> intervals = v.variant == BurstinessVariant::interevent_days
                                                    ? interevent_days(norm.entries)
                                                    : zero_gap_runs(daily);
                overall[v.key] = burstiness_json(burstiness(intervals, v.variant));
            } catch (const NumericError& e) {
                overall[v.key] = nullptr;
                warnings.push_back(std::string(v.key) + ": " + e.what());
            }
        }

        ordered by_phase = ordered{{"three_level", nullptr}, {"binary", nullptr}};
        if (want_three) {
            by_phase["three_level"] =
                ordered{{"B_D", phase_json(burstiness_by_phase(
                                               norm, daily, BurstinessVariant::interevent_days),
                                           Grouping::three_level)},
                        {"B_C", phase_json(burstiness_by_phase(
                                               norm, daily, BurstinessVariant::zero_gap_runs),
                                           Grouping::three_level)}};
        }
        if (want_binary) {
            by_phase["binary"] =
                ordered{{"B_D", phase_json(burstiness_by_phase(norm, daily_binary,
                                                               BurstinessVariant::interevent_days),
                                           Grouping::binary)},
                        {"B_C", phase_json(burstiness_by_phase(norm, daily_binary,
                                                               BurstinessVariant::zero_gap_runs),
                                           Grouping::binary)}};
        }

        ordered per_account = nullptr;
        if (options.per_account_burstiness) {
            per_account = ordered::array();
            std::vector<std::string> ids;
            for (const auto& entry : norm.entries) {
                if (std::find(ids.begin(), ids.end(), entry.account_id) == ids.end()) {
                    ids.push_back(entry.account_id);
                }
            }
            std::sort(ids.begin(), ids.end());
            for (const auto& id : ids) {
                std::vector<NormalizedEntry> mine;
                for (const auto& entry : norm.entries) {
                    if (entry.account_id == id) {
                        mine.push_back(entry);
                    }
                }
                ordered item = ordered{{"account_id", id}, {"B_D", nullptr}};
                try {
                    item["B_D"] = burstiness_json(
                        burstiness(interevent_days(mine), BurstinessVariant::interevent_days));
                } catch (const NumericError& e) {
                    warnings.push_back("per-account B_D for '" + id + "': " + e.what());
                }
                per_account.push_back(std::move(item));
            }
        }

        report["burstiness"] = ordered{{"overall", std::move(overall)},
                                       {"by_phase", std::move(by_phase)},
                                       {"per_account", std::move(per_account)}};
    }

    report["credit_ratios"] =
        ordered{{"count_based", ratio_json(credit_ratio_monthly(expenditures, false))},
                {"volume_based", ratio_json(credit_ratio_monthly(expenditures, true))}};

    report["anomaly"] = nullptr;
    if (weekly.points.size() < 8) {
        warnings.push_back("anomaly scan skipped: needs at least 8 weeks, have " +
                           std::to_string(weekly.points.size()));
    } else {
        try {
            report["anomaly"] = anomaly_json(detect(weekly, options.contamination,
                                                    options.n_trees, options.psi, options.seed,
                                                    options.volume_feature));
        } catch (const NumericError& e) {
            warnings.push_back(std::string("anomaly scan skipped: ") + e.what());
        }
    }

    report["raw"] = nullptr;
    if (options.unsafe_raw) {
        double total = 0.0;
        for (const auto& txn : expenditures.transactions()) {
            total += txn.amount;
        }
        auto params = norm.params;
        std::sort(params.begin(), params.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        ordered accounts = ordered::array();
        for (const auto& [id, p] : params) {
            accounts.push_back(ordered{{"account_id", id},
                                       {"min_amount", fin(p.min, "raw.min_amount")},
                                       {"max_amount", fin(p.max, "raw.max_amount")}});
        }
        report["raw"] = ordered{{"total_expenditure", fin(total, "raw.total_expenditure")},
                                {"accounts", std::move(accounts)}};
    }

    report["warnings"] = warnings;

    validate_against_schema(nlohmann::json(report),
                            nlohmann::json::parse(analysis_report_schema_text()));

    AnalyzeOutput out;
    out.report = std::move(report);
    for (Grain grain : options.grains) {
        std::ostringstream csv;
        if (grain == Grain::daily) {
            emit_plot_csv(csv, daily);
        } else if (grain == Grain::weekly) {
            emit_plot_csv(csv, weekly);
        } else {
            emit_plot_csv(csv, resample(norm, Grain::monthly, timeline));
        }
        out.plot_csvs.emplace_back(grain, csv.str());
    }
    return out;
}

DetectOutput run_detect(const Ledger& ledger, const DetectOptions& options) {
    check_detection_options(options.contamination, options.n_trees, options.psi);
    for (double value : options.sweep) {
        if (!(value > 0.0 && value <= 0.5)) {
            throw InputError("sweep contamination values must lie in (0, 0.5]");
        }
    }

    Ledger expenditures = filter_expenditures(ledger);
    if (expenditures.empty()) {
        throw InputError("ledger holds no expenditures; nothing to scan");
    }
    NormalizedSeries norm = normalize_per_account(expenditures);
    ResampledSeries weekly = resample(norm, Grain::weekly, LabelTimeline());

    AnomalyReport anomalies = detect(weekly, options.contamination, options.n_trees,
                                     options.psi, options.seed, options.volume_feature);

    ordered report;
    report["schema_version"] = kReportSchemaVersion;
    report["artifact"] = artifact_json();
    report["metadata"] = ordered{{"input", options.input_name},
                                 {"n_weeks", static_cast<std::int64_t>(weekly.points.size())},
                                 {"seed", options.seed},
                                 {"n_trees", options.n_trees},
                                 {"psi", options.psi},
                                 {"contamination", options.contamination},
                                 {"volume_feature", options.volume_feature}};
    report["threshold"] = fin(anomalies.threshold, "threshold");
    report["periods"] = anomaly_periods_json(anomalies);

    report["sweep"] = nullptr;
    if (!options.sweep.empty()) {
        ContaminationSweep sweep = sweep_contamination(weekly, options.sweep, options.n_trees,
                                                       options.psi, options.seed,
                                                       options.volume_feature);
        ordered entries = ordered::array();
        for (const auto& entry : sweep.entries) {
            ordered flagged = ordered::array();
            for (const Date& d : entry.flagged) {
                flagged.push_back(d.to_iso());
            }
            entries.push_back(ordered{{"contamination", entry.contamination},
                                      {"threshold", fin(entry.threshold, "sweep.threshold")},
                                      {"flagged_periods", std::move(flagged)}});
        }
        report["sweep"] = std::move(entries);
    }

    validate_against_schema(nlohmann::json(report),
                            nlohmann::json::parse(anomaly_report_schema_text()));

    DetectOutput out;
    out.report = std::move(report);
    std::ostringstream csv;
    emit_anomaly_csv(csv, anomalies);
    out.plot_csv = csv.str();
    return out;
}

namespace {

bool type_matches(const nlohmann::json& doc, const std::string& type) {
    if (type == "object") {
        return doc.is_object();
    }
    if (type == "array") {
        return doc.is_array();
    }
    if (type == "string") {
        return doc.is_string();
    }
    if (type == "number") {
        return doc.is_number();
    }
    if (type == "integer") {
        return doc.is_number_integer();
    }
    if (type == "boolean") {
        return doc.is_boolean();
    }
    if (type == "null") {
        return doc.is_null();
    }
    throw NumericError("schema uses unsupported type '" + type + "'");
}

void validate_node(const nlohmann::json& doc, const nlohmann::json& schema,
                   const std::string& path) {
    const std::string where = path.empty() ? std::string("<root>") : path;
    if (auto it = schema.find("type"); it != schema.end()) {
        bool ok = false;
        if (it->is_array()) {
            for (const auto& t : *it) {
                ok = ok || type_matches(doc, t.get<std::string>());
            }
        } else {
            ok = type_matches(doc, it->get<std::string>());
        }
        if (!ok) {
            throw NumericError("schema violation at " + where + ": wrong type");
        }
    }
    if (doc.is_null()) {
        return;
    }
    if (auto it = schema.find("enum"); it != schema.end()) {
        bool ok = false;
        for (const auto& v : *it) {
            ok = ok || v == doc;
        }
        if (!ok) {
            throw NumericError("schema violation at " + where + ": value not in enum");
        }
    }
    if (doc.is_object()) {
        if (auto req = schema.find("required"); req != schema.end()) {
            for (const auto& key : *req) {
                if (!doc.contains(key.get<std::string>())) {
                    throw NumericError("schema violation at " + where + ": missing key '" +
                                       key.get<std::string>() + "'");
                }
            }
        }
        auto props = schema.find("properties");
        const bool closed = schema.contains("additionalProperties") &&
                            schema["additionalProperties"].is_boolean() &&
                            !schema["additionalProperties"].get<bool>();
        for (const auto& [key, value] : doc.items()) {
            const nlohmann::json* sub = nullptr;
            if (props != schema.end()) {
                if (auto p = props->find(key); p != props->end()) {
                    sub = &*p;
                }
            }
            if (sub != nullptr) {
                validate_node(value, *sub, path + "/" + key);
            } else if (closed) {
                throw NumericError("schema violation at " + where + ": unexpected key '" +
                                   key + "'");
            }
        }
    } else if (doc.is_array()) {
        if (auto items = schema.find("items"); items != schema.end()) {
            std::size_t i = 0;
            for (const auto& value : doc) {
                validate_node(value, *items, path + "/" + std::to_string(i));
                ++i;
            }
        }
    }
}

} // namespace

void validate_against_schema(const nlohmann::json& doc, const nlohmann::json& schema) {
    validate_node(doc, schema, "");
}

} // namespace ledsig
