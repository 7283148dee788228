#ifndef LEDSIG_REPORT_HPP
#define LEDSIG_REPORT_HPP

#include "ledsig/analytics.hpp"
#include "ledsig/isolation_forest.hpp"
#include "ledsig/ledger.hpp"
#include "ledsig/privacy.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace ledsig {

// Fixed fallback seed used by every command when none is given.
inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr std::string_view kArtifactName = "ledger-signal";
inline constexpr std::string_view kArtifactVersion = "1.0.0";
inline constexpr std::string_view kReportSchemaVersion = "1";
inline constexpr std::string_view kCleanCsvHeader =
    "date,account_id,account_kind,direction,amount,description";
inline constexpr std::string_view kNormalizedMarker = "# normalized";

// ---- canonical file formats ----

// date,account_id,account_kind,direction,amount,description
void emit_clean_csv(std::ostream& out, const Ledger& ledger);

// Same columns behind a "# normalized" marker line: all expenditures,
// amounts in [0,1], descriptions empty. Normalization params never appear.
void emit_normalized_csv(std::ostream& out, const NormalizedSeries& series);
NormalizedSeries parse_normalized_csv(std::istream& in, const std::string& source_name);

// pole,level,start,end with ISO dates.
LabelTimeline read_label_csv(std::istream& in, const std::string& source_name);
void write_label_csv(std::ostream& out, const LabelTimeline& timeline);

// period_start,frequency,volume,severity
void emit_plot_csv(std::ostream& out, const ResampledSeries& series);

// period_start,score,flagged
void emit_anomaly_csv(std::ostream& out, const AnomalyReport& report);

// ---- analyze ----

struct AnalyzeOptions {
    std::vector<Grain> grains = {Grain::daily, Grain::weekly, Grain::monthly};
    std::vector<Grouping> groupings = {Grouping::three_level, Grouping::binary};
    double alpha = 0.05;
    double contamination = 0.05;
    int n_trees = 100;
    int psi = 64;
    std::uint64_t seed = kDefaultSeed;
    bool volume_feature = false;
    bool per_account_burstiness = false;
    bool unsafe_raw = false; // adds real amount ranges to the report
    std::vector<std::string> input_names;
};

struct AnalyzeOutput {
    nlohmann::ordered_json report;
    std::vector<std::pair<Grain, std::string>> plot_csvs;
};

// Full pipeline: filter -> normalize -> resample -> grouped stats, Welch +
// Games-Howell, burstiness, credit ratios, weekly anomaly scan. Statistical
// sections that cannot be computed (single group, zero variance, too few
// weeks...) come back null with a warning instead of failing the run. The
// report is validated against the shipped schema before it is returned.
AnalyzeOutput run_analyze(const Ledger& ledger, const LabelTimeline& timeline,
                          const AnalyzeOptions& options);

// ---- detect ----

struct DetectOptions {
    double contamination = 0.05;
    std::vector<double> sweep; // extra contamination values, may be empty
    int n_trees = 100;
    int psi = 64;
    std::uint64_t seed = kDefaultSeed;
    bool volume_feature = false;
    std::string input_name;
};

struct DetectOutput {
    nlohmann::ordered_json report;
    std::string plot_csv;
};

DetectOutput run_detect(const Ledger& ledger, const DetectOptions& options);

// ---- report schema ----

const std::string& analysis_report_schema_text();
const std::string& anomaly_report_schema_text();

// Minimal JSON-Schema checker covering the subset the shipped schemas use
// (type, properties, required, additionalProperties, items, enum). Throws
// NumericError naming the offending path.
void validate_against_schema(const nlohmann::json& doc, const nlohmann::json& schema);

} // namespace ledsig

#endif
