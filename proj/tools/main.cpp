#include "ledsig/analytics.hpp"
#include "ledsig/config.hpp"
#include "ledsig/errors.hpp"
#include "ledsig/ingest.hpp"
#include "ledsig/ledger.hpp"
#include "ledsig/privacy.hpp"
#include "ledsig/report.hpp"
#include "ledsig/synth.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

namespace fs = std::filesystem;

namespace {

using namespace ledsig;

bool stderr_color() {
    if (std::getenv("LEDGER_SIGNAL_NO_COLOR") != nullptr) {
        return false;
    }
    return isatty(2) != 0;
}

void print_error(const std::string& message) {
    if (stderr_color()) {
        std::cerr << "\x1b[1;31merror:\x1b[0m " << message << '\n';
    } else {
        std::cerr << "error: " << message << '\n';
    }
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path + "' for reading");
    }
    return in;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot open '" + path.string() + "' for writing");
    }
    out << content;
    if (!out) {
        throw InputError("failed while writing '" + path.string() + "'");
    }
}

fs::path prepare_out_dir(const std::string& out_dir) {
    fs::path dir = out_dir.empty() ? fs::path(".") : fs::path(out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw InputError("cannot create output directory '" + dir.string() + "': " +
                         ec.message());
    }
    return dir;
}

std::string sniff_first_line(const std::string& path) {
    std::ifstream in = open_input(path);
    std::string line;
    std::getline(in, line);
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    return line;
}

void absorb_ledger(const Ledger& src, std::vector<Account>& accounts,
                   std::vector<Transaction>& transactions) {
    for (const auto& account : src.accounts()) {
        bool known = false;
        for (const auto& existing : accounts) {
            if (existing.account_id != account.account_id) {
                continue;
            }
            if (existing.kind != account.kind) {
                throw InputError("account '" + account.account_id +
                                 "' appears as " + std::string(to_string(existing.kind)) +
                                 " in one input and " + std::string(to_string(account.kind)) +
                                 " in another");
            }
            known = true;
            break;
        }
        if (!known) {
            accounts.push_back(account);
        }
    }
    transactions.insert(transactions.end(), src.transactions().begin(),
                        src.transactions().end());
}

int cmd_ingest(const std::vector<std::string>& files, const std::string& config_path,
               const std::string& out_dir) {
    std::vector<std::string> raw_files;
    std::vector<Account> accounts;
    std::vector<Transaction> transactions;

    for (const auto& file : files) {
        const std::string first = sniff_first_line(file);
        if (first == kCleanCsvHeader || first == kNormalizedMarker) {
            // parse_clean_csv explains itself when handed a normalized file
            auto in = open_input(file);
            absorb_ledger(parse_clean_csv(in, file), accounts, transactions);
        } else {
            raw_files.push_back(file);
        }
    }

    if (!raw_files.empty()) {
        if (config_path.empty()) {
            throw InputError("raw statement inputs need --config pointing at an "
                             "ingest configuration");
        }
        IngestConfig cfg = IngestConfig::from_config(ConfigFile::load(config_path));
        std::vector<std::vector<AccountSection>> sections;
        for (const auto& file : raw_files) {
            auto in = open_input(file);
            sections.push_back(split_accounts(parse_raw_rows(in, file, cfg), cfg));
        }
        absorb_ledger(assemble_ledger(sections, cfg), accounts, transactions);
    }

    Ledger ledger(std::move(accounts), std::move(transactions));
    const fs::path dir = prepare_out_dir(out_dir);
    std::ostringstream csv;
    emit_clean_csv(csv, ledger);
    write_file(dir / "clean.csv", csv.str());

    std::cout << "wrote " << (dir / "clean.csv").string() << " ("
              << ledger.accounts().size() << " accounts, "
              << ledger.transactions().size() << " transactions)\n";
    return 0;
}

int cmd_synth(const std::string& spec_path, std::optional<std::uint64_t> seed_flag,
              const std::string& out_dir) {
    ScenarioSpec spec = ScenarioSpec::from_config(ConfigFile::load(spec_path));
    const std::uint64_t seed = seed_flag ? *seed_flag : spec.seed.value_or(kDefaultSeed);
    auto [ledger, timeline] = generate(spec, seed);

    const fs::path dir = prepare_out_dir(out_dir);
    std::ostringstream ledger_csv;
    emit_clean_csv(ledger_csv, ledger);
    write_file(dir / "ledger.csv", ledger_csv.str());
    std::ostringstream label_csv;
    write_label_csv(label_csv, timeline);
    write_file(dir / "labels.csv", label_csv.str());

    std::cout << "wrote " << (dir / "ledger.csv").string() << " ("
              << ledger.transactions().size() << " transactions) and "
              << (dir / "labels.csv").string() << " (" << timeline.labels().size()
              << " labels) with seed " << seed << "\n";
    return 0;
}

int cmd_analyze(const std::string& ledger_path, const std::string& labels_path,
                const AnalyzeOptions& options, const std::string& out_dir) {
    auto in = open_input(ledger_path);
    Ledger ledger = parse_clean_csv(in, ledger_path);
    LabelTimeline timeline;
    if (!labels_path.empty()) {
        auto labels_in = open_input(labels_path);
        timeline = read_label_csv(labels_in, labels_path);
    }

    AnalyzeOutput result = run_analyze(ledger, timeline, options);

    const fs::path dir = prepare_out_dir(out_dir);
    write_file(dir / "report.json", result.report.dump(2) + "\n");

    std::ostringstream normalized_csv;
    emit_normalized_csv(normalized_csv, normalize_per_account(filter_expenditures(ledger)));
    write_file(dir / "normalized.csv", normalized_csv.str());

    std::vector<std::string> names = {"report.json", "normalized.csv"};
    for (const auto& [grain, csv] : result.plot_csvs) {
        std::string name = "plot_" + std::string(to_string(grain)) + ".csv";
        write_file(dir / name, csv);
        names.push_back(std::move(name));
    }

    std::cout << "wrote";
    for (std::size_t i = 0; i < names.size(); ++i) {
        std::cout << (i == 0 ? " " : ", ") << (dir / names[i]).string();
    }
    std::cout << "\n";
    const auto& warnings = result.report["warnings"];
    if (!warnings.empty()) {
        std::cout << warnings.size() << " warning" << (warnings.size() == 1 ? "" : "s")
                  << " recorded in report.json\n";
    }
    return 0;
}

int cmd_detect(const std::string& ledger_path, const DetectOptions& options,
               const std::string& out_dir) {
    auto in = open_input(ledger_path);
    Ledger ledger = parse_clean_csv(in, ledger_path);

    DetectOutput result = run_detect(ledger, options);

    const fs::path dir = prepare_out_dir(out_dir);
    write_file(dir / "anomaly.json", result.report.dump(2) + "\n");
    write_file(dir / "anomaly_weekly.csv", result.plot_csv);

    std::size_t flagged = 0;
    for (const auto& period : result.report["periods"]) {
        if (period["flagged"].get<bool>()) {
            ++flagged;
        }
    }
    std::cout << "wrote " << (dir / "anomaly.json").string() << " and "
              << (dir / "anomaly_weekly.csv").string() << " (" << flagged << " of "
              << result.report["periods"].size() << " weeks flagged)\n";
    return 0;
}

std::vector<Grain> grains_from_flag(const std::string& grain) {
    if (grain == "all") {
        return {Grain::daily, Grain::weekly, Grain::monthly};
    }
    return {parse_grain(grain)};
}

std::vector<Grouping> groupings_from_flag(const std::string& grouping) {
    if (grouping == "both") {
        return {Grouping::three_level, Grouping::binary};
    }
    return {parse_grouping(grouping)};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ledger-signal: labeled spending time series and statistics "
                 "from bank statement exports"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_dir = ".";
    app.add_option("--config", config_path, "ingest or scenario config file");
    app.add_option("--seed", seed, "seed for every random draw (default 42)");
    app.add_option("--out", out_dir, "directory for output files")->capture_default_str();

    auto* ingest = app.add_subcommand(
        "ingest", "parse raw statement exports into the clean CSV format");
    ingest->fallthrough();
    std::vector<std::string> ingest_files;
    ingest->add_option("files", ingest_files, "statement files (raw delimited or clean CSV)")
        ->required()
        ->expected(-1);

    auto* synth = app.add_subcommand(
        "synth", "generate a labeled synthetic ledger from a scenario config");
    synth->fallthrough();
    std::string synth_spec;
    synth->add_option("scenario", synth_spec, "scenario config file")->required();

    auto* analyze = app.add_subcommand(
        "analyze", "run the statistical pipeline over a clean ledger");
    analyze->fallthrough();
    std::string an_ledger;
    std::string an_labels;
    std::string an_grain = "all";
    std::string an_grouping = "both";
    AnalyzeOptions an_options;
    analyze->add_option("ledger", an_ledger, "clean CSV ledger")->required();
    analyze->add_option("labels", an_labels, "severity label CSV (pole,level,start,end)");
    analyze->add_option("--grain", an_grain, "plot series grain")
        ->check(CLI::IsMember({"daily", "weekly", "monthly", "all"}))
        ->capture_default_str();
    analyze->add_option("--grouping", an_grouping, "severity grouping")
        ->check(CLI::IsMember({"three-level", "binary", "both"}))
        ->capture_default_str();
    analyze->add_option("--alpha", an_options.alpha, "significance level")
        ->capture_default_str();
    analyze
        ->add_option("--contamination", an_options.contamination,
                     "expected share of anomalous weeks")
        ->capture_default_str();
    analyze->add_option("--n-trees", an_options.n_trees, "isolation forest size")
        ->capture_default_str();
    analyze->add_option("--psi", an_options.psi, "isolation forest subsample size")
        ->capture_default_str();
    analyze->add_flag("--volume-feature", an_options.volume_feature,
                      "score anomaly weeks on frequency and volume");
    analyze->add_flag("--per-account-burstiness", an_options.per_account_burstiness,
                      "add per-account interevent burstiness to the report");
    analyze->add_flag("--unsafe-raw", an_options.unsafe_raw,
                      "include real amount ranges in the report");

    auto* detect = app.add_subcommand(
        "detect", "isolation-forest scan of weekly spending frequency");
    detect->fallthrough();
    std::string det_ledger;
    DetectOptions det_options;
    detect->add_option("ledger", det_ledger, "clean CSV ledger")->required();
    detect
        ->add_option("--contamination", det_options.contamination,
                     "expected share of anomalous weeks")
        ->capture_default_str();
    detect->add_option("--n-trees", det_options.n_trees, "isolation forest size")
        ->capture_default_str();
    detect->add_option("--psi", det_options.psi, "isolation forest subsample size")
        ->capture_default_str();
    detect->add_flag("--volume-feature", det_options.volume_feature,
                     "score on frequency and volume");
    detect
        ->add_option("--sweep", det_options.sweep,
                     "extra contamination values, e.g. 0.01,0.05,0.1")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (ingest->parsed()) {
            return cmd_ingest(ingest_files, config_path, out_dir);
        }
        if (synth->parsed()) {
            return cmd_synth(synth_spec, seed, out_dir);
        }
        if (analyze->parsed()) {
            an_options.grains = grains_from_flag(an_grain);
            an_options.groupings = groupings_from_flag(an_grouping);
            an_options.seed = seed.value_or(kDefaultSeed);
            an_options.input_names = {an_ledger};
            if (!an_labels.empty()) {
                an_options.input_names.push_back(an_labels);
            }
            return cmd_analyze(an_ledger, an_labels, an_options, out_dir);
        }
        det_options.seed = seed.value_or(kDefaultSeed);
        det_options.input_name = det_ledger;
        return cmd_detect(det_ledger, det_options, out_dir);
    } catch (const InputError& e) {
        print_error(e.what());
        return 1;
    } catch (const NumericError& e) {
        print_error(e.what());
        return 2;
    } catch (const std::exception& e) {
        print_error(std::string("internal: ") + e.what());
        return 2;
    }
}
