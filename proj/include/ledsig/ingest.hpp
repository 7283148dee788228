#ifndef LEDSIG_INGEST_HPP
#define LEDSIG_INGEST_HPP

#include "ledsig/config.hpp"
#include "ledsig/dates.hpp"
#include "ledsig/ledger.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ledsig {

/// One delimited line of an extracted statement, before any cleanup.
struct RawRow {
    std::vector<std::string> cells;
    std::string source_file;
    int line_no = 1;
};

struct AccountRef {
    std::string account_id;
    AccountKind kind = AccountKind::checking;
};

/// Tunables for statement ingestion, loadable from a key=value config:
///   delimiter = ,               (or `tab`, `;`, ...)
///   decimal_separator = .       (`,` switches grouping to `.`/space)
///   date_format = %m/%d/%Y      (repeated; tried in order)
///   account_marker = CHECKING -> chk-1:checking   (repeated; prefix match)
///   default_account = chk-1:checking
///   header_pattern = Page       (repeated; case-insensitive substring)
///   debit_column = 3            (1-based; makes direction column-driven)
///   credit_column = 4
///   ignore_column = 5           (repeated; excluded from descriptions)
struct IngestConfig {
    struct Marker {
        std::string prefix;
        AccountRef account;
    };

    char delimiter = ',';
    char decimal_separator = '.';
    std::vector<std::string> date_formats = {"%Y-%m-%d", "%m/%d/%Y"};
    std::vector<Marker> account_markers;
    std::optional<AccountRef> default_account;
    std::vector<std::string> header_patterns;
    std::optional<int> debit_column;  // 1-based
    std::optional<int> credit_column; // 1-based
    std::vector<int> ignore_columns;  // 1-based

    static IngestConfig from_config(const ConfigFile& cfg); // throws InputError
};

// Lenient money parser for statement cells. Accepts an optional sign
// (ASCII '-', Unicode minus, or enclosing parentheses), common currency
// symbols, and digit grouping. Returns the signed value, or nullopt if the
// cell is not a money amount.
std::optional<double> parse_statement_amount(std::string_view cell,
                                             char decimal_separator = '.');

// First date format in cfg.date_formats that consumes the whole cell wins.
std::optional<Date> parse_statement_date(std::string_view cell,
                                         const IngestConfig& cfg);

// Splits delimited text into rows, dropping blank lines (including rows
// whose cells are all empty) and keeping 1-based line numbers.
std::vector<RawRow> parse_raw_rows(std::istream& in,
                                   const std::string& source_name,
                                   const IngestConfig& cfg);

// Collapses the multi-line transactions produced by PDF table extraction.
// Output rows always have exactly three cells: the original date text, the
// space-joined description, and a canonical signed amount (negative =
// expenditure). Rows matching a header pattern (and carrying neither date
// nor amount) are dropped.
std::vector<RawRow> merge_wrapped_rows(const std::vector<RawRow>& rows,
                                       const IngestConfig& cfg);

/// Rows of one statement grouped under the account that owns them.
struct AccountSection {
    AccountRef account;
    std::vector<RawRow> rows;
};

// Assigns each row to the account introduced by the most recent marker row.
// Rows before any marker fall to cfg.default_account; with no default
// configured they are an error. One section per account id, in order of
// first appearance.
std::vector<AccountSection> split_accounts(const std::vector<RawRow>& rows,
                                           const IngestConfig& cfg);

// Merges each file's account sections and parses the merged rows into one
// date-sorted ledger. `files` must be in chronological statement order so
// same-day transactions keep statement order.
Ledger assemble_ledger(const std::vector<std::vector<AccountSection>>& files,
                       const IngestConfig& cfg);

// Reads the canonical interchange format:
//   date,account_id,account_kind,direction,amount,description
// ISO dates, positive plain-decimal amounts, UTF-8. Empty description
// means "absent".
Ledger parse_clean_csv(std::istream& in, const std::string& source_name);

} // namespace ledsig

#endif
