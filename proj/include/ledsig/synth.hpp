#ifndef LEDSIG_SYNTH_HPP
#define LEDSIG_SYNTH_HPP

#include "ledsig/config.hpp"
#include "ledsig/ledger.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ledsig {

/// Distribution of synthetic transaction amounts.
struct AmountLaw {
    enum class Kind { lognormal, uniform };
    Kind kind = Kind::lognormal;
    double a = 3.0; // lognormal mu    / uniform low
    double b = 1.0; // lognormal sigma / uniform high

    static AmountLaw parse(const std::string& text); // "lognormal(3,1)" etc.
};

struct EpisodeSpec {
    Date start;
    Date end;
    Pole pole = Pole::mania;
    Severity level = Severity::none;
    double rate_multiplier = 1.0;     // multiplies the Poisson rate while active
    double credit_share_delta = 0.0;  // shifts total credit share while active
};

struct AccountSpec {
    std::string account_id;
    AccountKind kind = AccountKind::checking;
    double share = 0.0; // probability a transaction lands on this account
};

/// Deterministic scenario: Poisson(rate) transactions per day, amounts
/// from amount_law, accounts chosen by share. Episodes scale the rate and
/// shift the credit share while active, and are mirrored verbatim into
/// the label timeline. Loadable from a key=value config with repeated
/// [episode] blocks.
struct ScenarioSpec {
    Date start;
    Date end;
    double baseline_daily_rate = 0.0;
    AmountLaw amount_law;
    std::vector<AccountSpec> accounts;
    std::vector<EpisodeSpec> episodes;
    std::optional<std::uint64_t> seed; // falls back to the CLI default

    static ScenarioSpec from_config(const ConfigFile& cfg); // throws InputError
    void validate() const;                                  // throws InputError
};

// Fully determined by (spec, seed): each day uses its own derived seed,
// so day generation order cannot change the output.
std::pair<Ledger, LabelTimeline> generate(const ScenarioSpec& spec,
                                          std::uint64_t seed);

} // namespace ledsig

#endif
