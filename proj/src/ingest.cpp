#include "ledsig/ingest.hpp"

#include "ledsig/csv.hpp"
#include "ledsig/errors.hpp"
#include "ledsig/numfmt.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <string>
#include <utility>

namespace ledsig {

namespace {

std::string where(const RawRow& row) {
    return row.source_file + ":" + std::to_string(row.line_no);
}

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

bool iequals_prefix(std::string_view text, std::string_view prefix) {
    if (text.size() < prefix.size())
        return false;
    for (size_t i = 0; i < prefix.size(); i++) {
        char a = static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
        char b = static_cast<char>(std::tolower(static_cast<unsigned char>(prefix[i])));
        if (a != b)
            return false;
    }
    return true;
}

std::string trim_copy(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return std::string(s);
}

int first_nonempty_cell(const RawRow& row) {
    for (size_t i = 0; i < row.cells.size(); i++)
        if (!row.cells[i].empty())
            return static_cast<int>(i);
    return -1;
}

// "chk-1:checking" -> AccountRef
AccountRef parse_account_ref(const std::string& text, const std::string& context) {
    auto colon = text.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= text.size())
        throw InputError(context + ": expected '<account_id>:<checking|credit>', got '" +
                         text + "'");
    AccountRef ref;
    ref.account_id = trim_copy(std::string_view(text).substr(0, colon));
    ref.kind = parse_account_kind(trim_copy(std::string_view(text).substr(colon + 1)));
    if (ref.account_id.empty())
        throw InputError(context + ": empty account id in '" + text + "'");
    return ref;
}

char parse_delimiter_value(const std::string& value) {
    if (value == "tab" || value == "\\t")
        return '\t';
    if (value.size() != 1)
        throw InputError("delimiter must be a single character or 'tab', got '" +
                         value + "'");
    return value[0];
}

int parse_column_index(const std::string& key, const std::string& value) {
    auto n = parse_config_u64(key, value);
    if (n < 1 || n > 10000)
        throw InputError("config key '" + key + "': column index out of range: " + value);
    return static_cast<int>(n);
}

struct AmountCell {
    int index;           // cell index the amount was taken from
    double signed_value; // negative = expenditure by sign convention
};

// Picks the amount cell of a row: the configured debit/credit column when
// set, otherwise the last non-empty cell if it parses as money.
std::optional<AmountCell> find_amount_cell(const RawRow& row, const IngestConfig& cfg) {
    if (cfg.debit_column || cfg.credit_column) {
        std::optional<AmountCell> debit, credit;
        if (cfg.debit_column && *cfg.debit_column <= static_cast<int>(row.cells.size())) {
            int idx = *cfg.debit_column - 1;
            if (auto v = parse_statement_amount(row.cells[idx], cfg.decimal_separator))
                debit = AmountCell{idx, -std::fabs(*v)};
        }
        if (cfg.credit_column && *cfg.credit_column <= static_cast<int>(row.cells.size())) {
            int idx = *cfg.credit_column - 1;
            if (auto v = parse_statement_amount(row.cells[idx], cfg.decimal_separator))
                credit = AmountCell{idx, std::fabs(*v)};
        }
        if (debit && credit)
            throw InputError(where(row) + ": both debit and credit columns are populated");
        if (debit)
            return debit;
        return credit;
    }
    for (int i = static_cast<int>(row.cells.size()) - 1; i >= 0; i--) {
        if (row.cells[i].empty())
            continue;
        if (auto v = parse_statement_amount(row.cells[i], cfg.decimal_separator))
            return AmountCell{i, *v};
        return std::nullopt;
    }
    return std::nullopt;
}

bool is_ignored_column(int index, const IngestConfig& cfg) {
    for (int col : cfg.ignore_columns)
        if (col - 1 == index)
            return true;
    return false;
}

// Description text of a row: every non-empty cell except the date cell,
// the amount cell, and explicitly ignored columns.
void collect_description(const RawRow& row, int date_index, int amount_index,
                         const IngestConfig& cfg, std::vector<std::string>& parts) {
    for (size_t i = 0; i < row.cells.size(); i++) {
        int idx = static_cast<int>(i);
        if (idx == date_index || idx == amount_index || is_ignored_column(idx, cfg))
            continue;
        if (!row.cells[i].empty())
            parts.push_back(row.cells[i]);
    }
}

std::string join_space(const std::vector<std::string>& parts) {
    std::string out;
    for (const std::string& p : parts) {
        if (!out.empty())
            out += ' ';
        out += p;
    }
    return out;
}

bool matches_header_pattern(const RawRow& row, const IngestConfig& cfg) {
    if (cfg.header_patterns.empty())
        return false;
    std::string joined;
    for (size_t i = 0; i < row.cells.size(); i++) {
        if (i)
            joined += cfg.delimiter;
        joined += row.cells[i];
    }
    joined = ascii_lower(joined);
    for (const std::string& pattern : cfg.header_patterns)
        if (joined.find(ascii_lower(pattern)) != std::string::npos)
            return true;
    return false;
}

const IngestConfig::Marker* find_marker(const RawRow& row, const IngestConfig& cfg) {
    int first = first_nonempty_cell(row);
    if (first < 0)
        return nullptr;
    for (const auto& marker : cfg.account_markers)
        if (iequals_prefix(row.cells[first], marker.prefix))
            return &marker;
    return nullptr;
}

} // namespace

IngestConfig IngestConfig::from_config(const ConfigFile& cfg) {
    IngestConfig out;
    if (auto v = cfg.get("delimiter"))
        out.delimiter = parse_delimiter_value(*v);
    if (auto v = cfg.get("decimal_separator")) {
        if (v->size() != 1 || (*v != "." && *v != ","))
            throw InputError("decimal_separator must be '.' or ',', got '" + *v + "'");
        out.decimal_separator = (*v)[0];
    }
    if (auto formats = cfg.get_all("date_format"); !formats.empty())
        out.date_formats = formats;
    for (const std::string& spec : cfg.get_all("account_marker")) {
        auto arrow = spec.find("->");
        if (arrow == std::string::npos)
            throw InputError(cfg.source +
                             ": account_marker expects '<prefix> -> <id>:<kind>', got '" +
                             spec + "'");
        IngestConfig::Marker marker;
        marker.prefix = trim_copy(std::string_view(spec).substr(0, arrow));
        marker.account = parse_account_ref(
            trim_copy(std::string_view(spec).substr(arrow + 2)), cfg.source);
        if (marker.prefix.empty())
            throw InputError(cfg.source + ": account_marker has an empty prefix");
        out.account_markers.push_back(std::move(marker));
    }
    if (auto v = cfg.get("default_account"))
        out.default_account = parse_account_ref(*v, cfg.source);
    out.header_patterns = cfg.get_all("header_pattern");
    if (auto v = cfg.get("debit_column"))
        out.debit_column = parse_column_index("debit_column", *v);
    if (auto v = cfg.get("credit_column"))
        out.credit_column = parse_column_index("credit_column", *v);
    for (const std::string& v : cfg.get_all("ignore_column"))
        out.ignore_columns.push_back(parse_column_index("ignore_column", v));
    if (out.date_formats.empty())
        throw InputError("ingest config needs at least one date_format");
    return out;
}

std::optional<double> parse_statement_amount(std::string_view cell,
                                             char decimal_separator) {
    std::string text = trim_copy(cell);
    if (text.empty())
        return std::nullopt;

    bool negative = false;
    bool seen_sign = false;

    // Parentheses accounting style: (12.00) is negative.
    if (text.front() == '(' && text.back() == ')') {
        negative = true;
        seen_sign = true;
        text = trim_copy(std::string_view(text).substr(1, text.size() - 2));
        if (text.empty())
            return std::nullopt;
    }

    // Strip any order of sign and currency symbol prefixes.
    static constexpr std::string_view kCurrencies[] = {
        "$", "€", "£", "¥"};
    std::string_view rest = text;
    for (;;) {
        if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
            if (seen_sign)
                return std::nullopt;
            seen_sign = true;
            negative = rest.front() == '-';
            rest.remove_prefix(1);
            continue;
        }
        if (rest.starts_with("−")) { // Unicode minus
            if (seen_sign)
                return std::nullopt;
            seen_sign = true;
            negative = true;
            rest.remove_prefix(std::string_view("−").size());
            continue;
        }
        bool stripped = false;
        for (std::string_view cur : kCurrencies) {
            if (rest.starts_with(cur)) {
                rest.remove_prefix(cur.size());
                stripped = true;
                break;
            }
        }
        if (!stripped)
            break;
    }
    while (!rest.empty() && rest.front() == ' ')
        rest.remove_prefix(1);

    // Numeric body: digits with optional grouping, one decimal separator.
    const char grouping = decimal_separator == '.' ? ',' : '.';
    std::string digits;
    bool seen_decimal = false;
    bool any_digit = false;
    for (size_t i = 0; i < rest.size(); i++) {
        char c = rest[i];
        if (c >= '0' && c <= '9') {
            digits += c;
            any_digit = true;
        } else if (c == decimal_separator) {
            if (seen_decimal)
                return std::nullopt;
            seen_decimal = true;
            digits += '.';
        } else if ((c == grouping || c == ' ') && !seen_decimal) {
            // Grouping separators sit between digits only.
            if (!any_digit || i + 1 >= rest.size() ||
                !(rest[i + 1] >= '0' && rest[i + 1] <= '9'))
                return std::nullopt;
        } else {
            return std::nullopt;
        }
    }
    if (!any_digit)
        return std::nullopt;

    double value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
        return std::nullopt;
    return negative ? -value : value;
}

std::optional<Date> parse_statement_date(std::string_view cell, const IngestConfig& cfg) {
    for (const std::string& format : cfg.date_formats)
        if (auto d = Date::try_parse(cell, format))
            return d;
    return std::nullopt;
}

std::vector<RawRow> parse_raw_rows(std::istream& in, const std::string& source_name,
                                   const IngestConfig& cfg) {
    CsvReader reader(in, source_name, cfg.delimiter);
    std::vector<RawRow> rows;
    std::vector<std::string> fields;
    int line_no = 0;
    while (reader.next(fields, line_no)) {
        bool all_empty = true;
        for (const std::string& f : fields)
            if (!f.empty()) {
                all_empty = false;
                break;
            }
        if (all_empty)
            continue;
        rows.push_back(RawRow{fields, source_name, line_no});
    }
    return rows;
}

std::vector<RawRow> merge_wrapped_rows(const std::vector<RawRow>& rows,
                                       const IngestConfig& cfg) {
    struct Pending {
        std::string date_text;
        std::vector<std::string> desc_parts;
        std::string source_file;
        int start_line = 0;
    };

    std::vector<RawRow> out;
    std::optional<Pending> pending;

    auto emit = [&](const std::string& date_text, std::vector<std::string>& parts,
                    double signed_amount, const std::string& source, int line) {
        out.push_back(RawRow{{date_text, join_space(parts), format_double(signed_amount)},
                             source, line});
    };

    for (const RawRow& row : rows) {
        const int date_index = first_nonempty_cell(row);
        const bool has_date =
            date_index >= 0 && parse_statement_date(row.cells[date_index], cfg).has_value();
        const std::optional<AmountCell> amount = find_amount_cell(row, cfg);
        if (!has_date && !amount && matches_header_pattern(row, cfg))
            continue; // pagination noise, not a continuation

        if (has_date) {
            if (pending)
                throw InputError(pending->source_file + ":" +
                                 std::to_string(pending->start_line) +
                                 ": transaction has no amount before the next dated row at line " +
                                 std::to_string(row.line_no));
            std::vector<std::string> parts;
            collect_description(row, date_index, amount ? amount->index : -1, cfg, parts);
            if (amount) {
                emit(row.cells[date_index], parts, amount->signed_value,
                     row.source_file, row.line_no);
            } else {
                pending = Pending{row.cells[date_index], std::move(parts),
                                  row.source_file, row.line_no};
            }
            continue;
        }

        if (amount) {
            if (!pending)
                throw InputError(where(row) +
                                 ": row carries an amount but no date and no open transaction");
            collect_description(row, -1, amount->index, cfg, pending->desc_parts);
            emit(pending->date_text, pending->desc_parts, amount->signed_value,
                 pending->source_file, pending->start_line);
            pending.reset();
            continue;
        }

        // Pure continuation text.
        if (pending) {
            collect_description(row, -1, -1, cfg, pending->desc_parts);
        } else if (!out.empty()) {
            std::vector<std::string> parts;
            collect_description(row, -1, -1, cfg, parts);
            std::string extra = join_space(parts);
            if (!extra.empty()) {
                std::string& desc = out.back().cells[1];
                if (!desc.empty())
                    desc += ' ';
                desc += extra;
            }
        } else {
            throw InputError(where(row) + ": continuation row with no preceding transaction");
        }
    }

    if (pending)
        throw InputError(pending->source_file + ":" + std::to_string(pending->start_line) +
                         ": transaction has no amount (reached end of input)");
    return out;
}

std::vector<AccountSection> split_accounts(const std::vector<RawRow>& rows,
                                           const IngestConfig& cfg) {
    std::vector<AccountSection> sections;
    auto section_for = [&](const AccountRef& account, const RawRow& row) -> AccountSection& {
        for (AccountSection& s : sections) {
            if (s.account.account_id == account.account_id) {
                if (s.account.kind != account.kind)
                    throw InputError(where(row) + ": account '" + account.account_id +
                                     "' redeclared as " +
                                     std::string(to_string(account.kind)) + " (was " +
                                     std::string(to_string(s.account.kind)) + ")");
                return s;
            }
        }
        sections.push_back(AccountSection{account, {}});
        return sections.back();
    };

    const AccountRef* current = nullptr;
    for (const RawRow& row : rows) {
        if (const IngestConfig::Marker* marker = find_marker(row, cfg)) {
            current = &marker->account;
            section_for(marker->account, row); // register even if section stays empty
            continue;
        }
        const AccountRef* target = current;
        if (!target) {
            if (!cfg.default_account) {
                // Header noise before the first marker is droppable, not an error.
                int date_index = first_nonempty_cell(row);
                bool has_date = date_index >= 0 &&
                                parse_statement_date(row.cells[date_index], cfg).has_value();
                if (!has_date && !find_amount_cell(row, cfg) &&
                    matches_header_pattern(row, cfg))
                    continue;
                throw InputError(where(row) +
                                 ": row appears before any account marker and no "
                                 "default_account is configured");
            }
            target = &*cfg.default_account;
        }
        section_for(*target, row).rows.push_back(row);
    }
    return sections;
}

Ledger assemble_ledger(const std::vector<std::vector<AccountSection>>& files,
                       const IngestConfig& cfg) {
    std::vector<Account> accounts;
    std::vector<Transaction> txns;

    auto register_account = [&](const AccountRef& ref, const std::string& source) {
        for (const Account& a : accounts) {
            if (a.account_id == ref.account_id) {
                if (a.kind != ref.kind)
                    throw InputError(source + ": account '" + ref.account_id +
                                     "' appears as both " + std::string(to_string(a.kind)) +
                                     " and " + std::string(to_string(ref.kind)));
                return;
            }
        }
        accounts.push_back(Account{ref.account_id, ref.kind});
    };

    for (const std::vector<AccountSection>& file : files) {
        for (const AccountSection& section : file) {
            const std::string source =
                section.rows.empty() ? std::string("<empty section>")
                                     : section.rows.front().source_file;
            register_account(section.account, source);
            for (const RawRow& merged : merge_wrapped_rows(section.rows, cfg)) {
                auto date = parse_statement_date(merged.cells[0], cfg);
                // The merged amount cell is canonical dot-decimal output of
                // merge_wrapped_rows, whatever the statement's separator was.
                auto amount = parse_statement_amount(merged.cells[2], '.');
                if (!date || !amount)
                    throw InputError(where(merged) + ": unparseable merged row");
                if (*amount == 0.0)
                    throw InputError(where(merged) +
                                     ": zero transaction amount is not allowed");
                Transaction txn;
                txn.date = *date;
                txn.amount = std::fabs(*amount);
                txn.direction =
                    *amount < 0 ? Direction::expenditure : Direction::income;
                txn.account_id = section.account.account_id;
                if (!merged.cells[1].empty())
                    txn.description = merged.cells[1];
                txns.push_back(std::move(txn));
            }
        }
    }
    return Ledger(std::move(accounts), std::move(txns));
}

Ledger parse_clean_csv(std::istream& in, const std::string& source_name) {
    static const std::vector<std::string> kHeader = {
        "date", "account_id", "account_kind", "direction", "amount", "description"};

    CsvReader reader(in, source_name, ',');
    std::vector<std::string> fields;
    int line_no = 0;
    if (!reader.next(fields, line_no))
        throw InputError(source_name + ": empty file, expected clean CSV header");
    if (fields.size() == 1 && fields[0].starts_with("#")) {
        if (fields[0].find("normalized") != std::string::npos)
            throw InputError(source_name +
                             ": this is a normalized series file, not raw clean CSV");
        throw InputError(source_name + ":1: unexpected comment line before header");
    }
    if (fields != kHeader)
        throw InputError(source_name +
                         ":1: bad header; expected "
                         "'date,account_id,account_kind,direction,amount,description'");

    std::vector<Account> accounts;
    std::vector<Transaction> txns;
    auto register_account = [&](const std::string& id, AccountKind kind, int line) {
        for (const Account& a : accounts) {
            if (a.account_id == id) {
                if (a.kind != kind)
                    throw InputError(source_name + ":" + std::to_string(line) +
                                     ": account '" + id + "' changes kind mid-file");
                return;
            }
        }
        accounts.push_back(Account{id, kind});
    };

    while (reader.next(fields, line_no)) {
        const std::string at = source_name + ":" + std::to_string(line_no);
        if (fields.size() != kHeader.size())
            throw InputError(at + ": expected " + std::to_string(kHeader.size()) +
                             " columns, got " + std::to_string(fields.size()));
        Transaction txn;
        auto date = Date::try_parse_iso(fields[0]);
        if (!date)
            throw InputError(at + ": bad ISO date '" + fields[0] + "'");
        txn.date = *date;
        txn.account_id = fields[1];
        if (txn.account_id.empty())
            throw InputError(at + ": empty account_id");
        AccountKind kind;
        Direction direction;
        try {
            kind = parse_account_kind(fields[2]);
            direction = parse_direction(fields[3]);
        } catch (const InputError& e) {
            throw InputError(at + ": " + e.what());
        }
        txn.direction = direction;
        double amount = 0;
        auto [ptr, ec] =
            std::from_chars(fields[4].data(), fields[4].data() + fields[4].size(), amount);
        if (ec != std::errc{} || ptr != fields[4].data() + fields[4].size())
            throw InputError(at + ": bad amount '" + fields[4] + "'");
        if (!(amount > 0))
            throw InputError(at + ": amount must be strictly positive, got '" +
                             fields[4] + "'");
        txn.amount = amount;
        if (!fields[5].empty())
            txn.description = fields[5];
        register_account(txn.account_id, kind, line_no);
        txns.push_back(std::move(txn));
    }
    return Ledger(std::move(accounts), std::move(txns));
}

} // namespace ledsig
