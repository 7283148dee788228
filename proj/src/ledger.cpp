#include "ledsig/ledger.hpp"

#include "ledsig/errors.hpp"

#include <algorithm>

namespace ledsig {

std::string_view to_string(Direction d) {
    return d == Direction::expenditure ? "expenditure" : "income";
}

std::string_view to_string(AccountKind k) {
    return k == AccountKind::checking ? "checking" : "credit";
}

std::string_view to_string(Pole p) {
    return p == Pole::mania ? "mania" : "depression";
}

std::string_view to_string(Severity s) {
    switch (s) {
    case Severity::none: return "none";
    case Severity::mild: return "mild";
    case Severity::moderate: return "moderate";
    case Severity::severe: return "severe";
    }
    return "none";
}

Direction parse_direction(std::string_view s) {
    if (s == "expenditure") return Direction::expenditure;
    if (s == "income") return Direction::income;
    throw InputError("unknown direction '" + std::string(s) +
                     "' (expected expenditure or income)");
}

AccountKind parse_account_kind(std::string_view s) {
    if (s == "checking") return AccountKind::checking;
    if (s == "credit") return AccountKind::credit;
    throw InputError("unknown account kind '" + std::string(s) +
                     "' (expected checking or credit)");
}

Pole parse_pole(std::string_view s) {
    if (s == "mania") return Pole::mania;
    if (s == "depression") return Pole::depression;
    throw InputError("unknown pole '" + std::string(s) + "' (expected mania or depression)");
}

Severity parse_severity(std::string_view s) {
    if (s == "none") return Severity::none;
    if (s == "mild") return Severity::mild;
    if (s == "moderate") return Severity::moderate;
    if (s == "severe") return Severity::severe;
    throw InputError("unknown severity '" + std::string(s) +
                     "' (expected none, mild, moderate or severe)");
}

Ledger::Ledger(std::vector<Account> accounts, std::vector<Transaction> transactions) {
    for (auto& a : accounts)
        add_account(std::move(a));
    for (const auto& t : transactions)
        check_transaction(t);
    std::stable_sort(transactions.begin(), transactions.end(),
                     [](const Transaction& a, const Transaction& b) { return a.date < b.date; });
    transactions_ = std::move(transactions);
}

void Ledger::add_account(Account account) {
    if (find_account(account.account_id))
        throw InputError("duplicate account id '" + account.account_id + "'");
    accounts_.push_back(std::move(account));
}

void Ledger::check_transaction(const Transaction& txn) const {
    if (!find_account(txn.account_id))
        throw InputError("transaction references unknown account '" + txn.account_id + "'");
    if (!(txn.amount > 0))
        throw InputError("transaction amount must be positive (got " +
                         std::to_string(txn.amount) + ")");
}

void Ledger::add_transaction(Transaction txn) {
    check_transaction(txn);
    auto pos = std::upper_bound(
        transactions_.begin(), transactions_.end(), txn.date,
        [](Date d, const Transaction& t) { return d < t.date; });
    transactions_.insert(pos, std::move(txn));
}

const Account* Ledger::find_account(std::string_view id) const {
    for (const auto& a : accounts_)
        if (a.account_id == id)
            return &a;
    return nullptr;
}

bool Ledger::operator==(const Ledger& other) const {
    auto sorted_accounts = [](const std::vector<Account>& in) {
        std::vector<Account> v = in;
        std::sort(v.begin(), v.end(),
                  [](const Account& a, const Account& b) { return a.account_id < b.account_id; });
        return v;
    };
    return sorted_accounts(accounts_) == sorted_accounts(other.accounts_) &&
           transactions_ == other.transactions_;
}

LabelTimeline::LabelTimeline(std::vector<SeverityLabel> labels) {
    for (const auto& l : labels) {
        if (l.end < l.start)
            throw InputError("severity label range ends before it starts (" +
                             l.start.to_iso() + " .. " + l.end.to_iso() + ")");
    }
    std::stable_sort(labels.begin(), labels.end(),
                     [](const SeverityLabel& a, const SeverityLabel& b) {
                         if (a.pole != b.pole)
                             return a.pole < b.pole;
                         return a.start < b.start;
                     });
    for (std::size_t i = 1; i < labels.size(); ++i) {
        const auto& prev = labels[i - 1];
        const auto& cur = labels[i];
        if (prev.pole == cur.pole && prev.level != Severity::none &&
            cur.level != Severity::none && cur.start <= prev.end) {
            throw InputError("overlapping severity labels for pole " +
                             std::string(to_string(cur.pole)) + ": " + prev.start.to_iso() +
                             ".." + prev.end.to_iso() + " and " + cur.start.to_iso() + ".." +
                             cur.end.to_iso());
        }
    }
    labels_ = std::move(labels);
}

Severity LabelTimeline::severity_at(Date date, Pole pole) const {
    for (const auto& l : labels_) {
        if (l.pole != pole || l.level == Severity::none)
            continue;
        if (l.start <= date && date <= l.end)
            return l.level;
    }
    return Severity::none;
}

LabelTimeline LabelTimeline::merge_symptomatic() const {
    std::vector<SeverityLabel> merged;
    for (const auto& l : labels_) {
        if (l.level == Severity::none)
            continue;
        SeverityLabel sym{l.start, l.end, l.pole, Severity::moderate};
        if (!merged.empty()) {
            auto& last = merged.back();
            if (last.pole == sym.pole && sym.start <= last.end.plus_days(1)) {
                last.end = std::max(last.end, sym.end);
                continue;
            }
        }
        merged.push_back(sym);
    }
    return LabelTimeline(std::move(merged));
}

} // namespace ledsig
