#include "ledsig/synth.hpp"

#include "ledsig/errors.hpp"
#include "ledsig/rng.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace ledsig {

namespace {

std::string trim_copy(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return std::string(s);
}

Date require_date(const ConfigFile::Entries& entries, const std::string& key,
                  const std::string& source) {
    for (const auto& [k, v] : entries)
        if (k == key)
            return Date::parse_iso(v);
    throw InputError(source + ": missing required key '" + key + "'");
}

std::optional<std::string> entry_get(const ConfigFile::Entries& entries,
                                     const std::string& key) {
    for (const auto& [k, v] : entries)
        if (k == key)
            return v;
    return std::nullopt;
}

// "chk-1:checking:0.7"
AccountSpec parse_account_spec(const std::string& text, const std::string& source) {
    const auto first = text.find(':');
    const auto second = first == std::string::npos ? std::string::npos
                                                   : text.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw InputError(source + ": account expects '<id>:<kind>:<share>', got '" +
                         text + "'");
    AccountSpec spec;
    spec.account_id = trim_copy(std::string_view(text).substr(0, first));
    spec.kind = parse_account_kind(
        trim_copy(std::string_view(text).substr(first + 1, second - first - 1)));
    spec.share = parse_config_double(
        "account share", trim_copy(std::string_view(text).substr(second + 1)));
    if (spec.account_id.empty())
        throw InputError(source + ": empty account id in '" + text + "'");
    return spec;
}

} // namespace

AmountLaw AmountLaw::parse(const std::string& text) {
    const auto open = text.find('(');
    const auto close = text.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open ||
        close != text.size() - 1)
        throw InputError("amount_law expects 'lognormal(mu, sigma)' or "
                         "'uniform(low, high)', got '" + text + "'");
    const std::string name = trim_copy(std::string_view(text).substr(0, open));
    const std::string args = text.substr(open + 1, close - open - 1);
    const auto comma = args.find(',');
    if (comma == std::string::npos)
        throw InputError("amount_law needs two parameters, got '" + text + "'");

    AmountLaw law;
    law.a = parse_config_double("amount_law",
                                trim_copy(std::string_view(args).substr(0, comma)));
    law.b = parse_config_double("amount_law",
                                trim_copy(std::string_view(args).substr(comma + 1)));
    if (name == "lognormal") {
        law.kind = Kind::lognormal;
        if (law.b < 0)
            throw InputError("lognormal sigma must be >= 0");
    } else if (name == "uniform") {
        law.kind = Kind::uniform;
        if (!(law.a > 0) || law.b < law.a)
            throw InputError("uniform amount law needs 0 < low <= high");
    } else {
        throw InputError("unknown amount law '" + name + "'");
    }
    return law;
}

ScenarioSpec ScenarioSpec::from_config(const ConfigFile& cfg) {
    ScenarioSpec spec;
    spec.start = require_date(cfg.entries, "start", cfg.source);
    spec.end = require_date(cfg.entries, "end", cfg.source);
    spec.baseline_daily_rate =
        parse_config_double("baseline_daily_rate", cfg.require("baseline_daily_rate"));
    spec.amount_law = AmountLaw::parse(cfg.require("amount_law"));
    for (const std::string& text : cfg.get_all("account"))
        spec.accounts.push_back(parse_account_spec(text, cfg.source));
    if (auto v = cfg.get("seed"))
        spec.seed = parse_config_u64("seed", *v);

    for (const ConfigFile::Block& block : cfg.blocks) {
        if (block.name != "episode")
            throw InputError(cfg.source + ": unknown block '[" + block.name + "]'");
        EpisodeSpec ep;
        ep.start = require_date(block.entries, "start", cfg.source);
        ep.end = require_date(block.entries, "end", cfg.source);
        if (auto v = entry_get(block.entries, "pole"))
            ep.pole = parse_pole(*v);
        const auto level = entry_get(block.entries, "level");
        if (!level)
            throw InputError(cfg.source + ": episode needs a 'level'");
        ep.level = parse_severity(*level);
        if (auto v = entry_get(block.entries, "rate_multiplier"))
            ep.rate_multiplier = parse_config_double("rate_multiplier", *v);
        if (auto v = entry_get(block.entries, "credit_share_delta"))
            ep.credit_share_delta = parse_config_double("credit_share_delta", *v);
        spec.episodes.push_back(ep);
    }
    spec.validate();
    return spec;
}

void ScenarioSpec::validate() const {
    if (end < start)
        throw InputError("scenario end precedes start");
    if (!(baseline_daily_rate >= 0))
        throw InputError("baseline_daily_rate must be >= 0");
    if (accounts.empty())
        throw InputError("scenario needs at least one account");
    double share_sum = 0.0;
    for (const AccountSpec& a : accounts) {
        if (a.share < 0 || a.share > 1)
            throw InputError("account share for '" + a.account_id +
                             "' must be in [0, 1]");
        share_sum += a.share;
    }
    if (std::fabs(share_sum - 1.0) > 1e-9)
        throw InputError("account shares must sum to 1");
    for (size_t i = 0; i < accounts.size(); i++)
        for (size_t j = i + 1; j < accounts.size(); j++)
            if (accounts[i].account_id == accounts[j].account_id)
                throw InputError("duplicate account id '" + accounts[i].account_id + "'");

    for (const EpisodeSpec& ep : episodes) {
        if (ep.end < ep.start)
            throw InputError("episode end precedes start");
        if (ep.start < start || end < ep.end)
            throw InputError("episode " + ep.start.to_iso() + ".." + ep.end.to_iso() +
                             " falls outside the scenario span");
        if (!(ep.rate_multiplier > 0))
            throw InputError("episode rate_multiplier must be > 0");
        if (ep.credit_share_delta < -1.0 || ep.credit_share_delta > 1.0)
            throw InputError("episode credit_share_delta must be in [-1, 1]");
    }
}

std::pair<Ledger, LabelTimeline> generate(const ScenarioSpec& spec,
                                          std::uint64_t seed) {
    spec.validate();

    std::vector<Account> accounts;
    for (const AccountSpec& a : spec.accounts)
        accounts.push_back(Account{a.account_id, a.kind});

    const double base_credit_share = [&] {
        double s = 0.0;
        for (const AccountSpec& a : spec.accounts)
            if (a.kind == AccountKind::credit)
                s += a.share;
        return s;
    }();

    const Rng master(seed);
    std::vector<Transaction> txns;
    const std::int64_t n_days = spec.start.days_until(spec.end) + 1;
    for (std::int64_t day_index = 0; day_index < n_days; day_index++) {
        const Date day = spec.start.plus_days(day_index);

        double rate = spec.baseline_daily_rate;
        double credit_delta = 0.0;
        for (const EpisodeSpec& ep : spec.episodes) {
            if (day >= ep.start && day <= ep.end) {
                rate *= ep.rate_multiplier;
                credit_delta += ep.credit_share_delta;
            }
        }
        if (rate <= 0.0)
            continue;

        // Rescale account shares so the total credit share moves by the
        // active delta while per-kind proportions stay fixed.
        const double target_credit =
            std::clamp(base_credit_share + credit_delta, 0.0, 1.0);
        std::vector<double> shares(spec.accounts.size());
        for (size_t i = 0; i < spec.accounts.size(); i++) {
            const AccountSpec& a = spec.accounts[i];
            if (a.kind == AccountKind::credit)
                shares[i] = base_credit_share > 0
                                ? a.share * target_credit / base_credit_share
                                : 0.0;
            else
                shares[i] = base_credit_share < 1
                                ? a.share * (1.0 - target_credit) /
                                      (1.0 - base_credit_share)
                                : 0.0;
        }

        Rng day_rng = master.derive(static_cast<std::uint64_t>(day_index));
        const std::uint64_t count = day_rng.poisson(rate);
        for (std::uint64_t i = 0; i < count; i++) {
            Transaction txn;
            txn.date = day;
            txn.direction = Direction::expenditure;
            txn.amount = spec.amount_law.kind == AmountLaw::Kind::lognormal
                             ? std::exp(day_rng.normal(spec.amount_law.a,
                                                       spec.amount_law.b))
                             : day_rng.uniform(spec.amount_law.a, spec.amount_law.b);

            double pick = day_rng.uniform01();
            size_t chosen = spec.accounts.size() - 1;
            for (size_t a = 0; a < shares.size(); a++) {
                if (pick < shares[a]) {
                    chosen = a;
                    break;
                }
                pick -= shares[a];
            }
            txn.account_id = spec.accounts[chosen].account_id;
            txns.push_back(std::move(txn));
        }
    }

    std::vector<SeverityLabel> labels;
    for (const EpisodeSpec& ep : spec.episodes)
        labels.push_back(SeverityLabel{ep.start, ep.end, ep.pole, ep.level});

    return {Ledger(std::move(accounts), std::move(txns)),
            LabelTimeline(std::move(labels))};
}

} // namespace ledsig
