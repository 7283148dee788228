#ifndef LEDSIG_PRIVACY_HPP
#define LEDSIG_PRIVACY_HPP

#include "ledsig/ledger.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ledsig {

/// One expenditure with its amount min-max scaled into [0,1] and the
/// description removed.
struct NormalizedEntry {
    Date date;
    std::string account_id;
    AccountKind account_kind = AccountKind::checking;
    double normalized_amount = 0.0;

    bool operator==(const NormalizedEntry&) const = default;
};

struct NormalizationParams {
    double min = 0.0;
    double max = 0.0;
};

/// The privacy-preserving analysis dataset. `params` holds the original
/// per-account amount ranges; they stay in memory for diagnostics and are
/// never written to any output.
struct NormalizedSeries {
    std::vector<NormalizedEntry> entries; // sorted by date
    std::vector<std::pair<std::string, NormalizationParams>> params;

    const NormalizationParams* params_for(std::string_view account_id) const;
};

// Drops income transactions; accounts are kept as-is.
Ledger filter_expenditures(const Ledger& ledger);

// Per-account min-max scaling of expenditure amounts. An account whose
// amounts are all equal maps to 0.0; an account with no expenditures is
// absent from the output. Throws InputError if the ledger still contains
// income rows.
NormalizedSeries normalize_per_account(const Ledger& ledger);

} // namespace ledsig

#endif
