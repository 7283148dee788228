#ifndef LEDSIG_LEDGER_HPP
#define LEDSIG_LEDGER_HPP

#include "ledsig/dates.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ledsig {

enum class Direction { expenditure, income };
enum class AccountKind { checking, credit };
enum class Pole { mania, depression };
enum class Severity { none = 0, mild = 1, moderate = 2, severe = 3 };

std::string_view to_string(Direction d);
std::string_view to_string(AccountKind k);
std::string_view to_string(Pole p);
std::string_view to_string(Severity s);

Direction parse_direction(std::string_view s);     // throws InputError
AccountKind parse_account_kind(std::string_view s);
Pole parse_pole(std::string_view s);
Severity parse_severity(std::string_view s);

/// One dated money movement on one account. Amount is the positive
/// magnitude; sign conventions live in the ingest layer.
struct Transaction {
    Date date;
    double amount = 0;
    Direction direction = Direction::expenditure;
    std::string account_id;
    std::optional<std::string> description;

    bool operator==(const Transaction&) const = default;
};

struct Account {
    std::string account_id;
    AccountKind kind = AccountKind::checking;

    bool operator==(const Account&) const = default;
};

/// Accounts plus transactions kept ascending by date; equal dates keep
/// insertion order. Every transaction must reference a known account and
/// carry a strictly positive amount.
class Ledger {
public:
    Ledger() = default;
    Ledger(std::vector<Account> accounts, std::vector<Transaction> transactions);

    void add_account(Account account);          // throws InputError on duplicate id
    void add_transaction(Transaction txn);      // keeps sort order, ties appended last

    const std::vector<Account>& accounts() const { return accounts_; }
    const std::vector<Transaction>& transactions() const { return transactions_; }
    const Account* find_account(std::string_view id) const;
    bool empty() const { return transactions_.empty(); }

    bool operator==(const Ledger& other) const;

private:
    void check_transaction(const Transaction& txn) const;

    std::vector<Account> accounts_;
    std::vector<Transaction> transactions_;
};

/// One labeled period: [start, end] inclusive, pole + severity.
struct SeverityLabel {
    Date start;
    Date end;
    Pole pole = Pole::mania;
    Severity level = Severity::none;

    bool operator==(const SeverityLabel&) const = default;
};

/// Ordered severity labels. Non-none ranges must not overlap within a
/// pole; dates not covered by any label are level none. Level-none labels
/// are tolerated (they assert nothing) so generated label lists can be
/// mirrored verbatim.
class LabelTimeline {
public:
    LabelTimeline() = default;
    explicit LabelTimeline(std::vector<SeverityLabel> labels); // validates, sorts by (pole, start)

    const std::vector<SeverityLabel>& labels() const { return labels_; }
    bool empty() const { return labels_.empty(); }

    Severity severity_at(Date date, Pole pole) const;

    // Collapses mild/moderate/severe to a single symptomatic level
    // (kept as `moderate`) and coalesces adjacent or overlapping ranges.
    // Level-none labels are dropped; covered dates are unchanged.
    LabelTimeline merge_symptomatic() const;

    bool operator==(const LabelTimeline&) const = default;

private:
    std::vector<SeverityLabel> labels_;
};

} // namespace ledsig

#endif
