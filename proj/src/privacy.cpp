#include "ledsig/privacy.hpp"

#include "ledsig/errors.hpp"

#include <algorithm>

namespace ledsig {

const NormalizationParams* NormalizedSeries::params_for(std::string_view account_id) const {
    for (const auto& [id, p] : params)
        if (id == account_id)
            return &p;
    return nullptr;
}

Ledger filter_expenditures(const Ledger& ledger) {
    std::vector<Transaction> kept;
    kept.reserve(ledger.transactions().size());
    for (const Transaction& txn : ledger.transactions())
        if (txn.direction == Direction::expenditure)
            kept.push_back(txn);
    return Ledger(ledger.accounts(), std::move(kept));
}

NormalizedSeries normalize_per_account(const Ledger& ledger) {
    NormalizedSeries out;
    for (const Transaction& txn : ledger.transactions()) {
        if (txn.direction != Direction::expenditure)
            throw InputError("normalize_per_account expects an expenditure-only ledger; "
                             "run filter_expenditures first");
        bool seen = false;
        for (auto& [id, p] : out.params) {
            if (id == txn.account_id) {
                p.min = std::min(p.min, txn.amount);
                p.max = std::max(p.max, txn.amount);
                seen = true;
                break;
            }
        }
        if (!seen)
            out.params.emplace_back(txn.account_id,
                                    NormalizationParams{txn.amount, txn.amount});
    }

    out.entries.reserve(ledger.transactions().size());
    for (const Transaction& txn : ledger.transactions()) {
        const NormalizationParams& p = *out.params_for(txn.account_id);
        NormalizedEntry entry;
        entry.date = txn.date;
        entry.account_id = txn.account_id;
        entry.account_kind = ledger.find_account(txn.account_id)->kind;
        entry.normalized_amount =
            p.max > p.min ? (txn.amount - p.min) / (p.max - p.min) : 0.0;
        out.entries.push_back(std::move(entry));
    }
    return out;
}

} // namespace ledsig
