#include "ledsig/csv.hpp"

#include "ledsig/errors.hpp"

#include <istream>
#include <ostream>

namespace ledsig {

CsvReader::CsvReader(std::istream& in, std::string source_name, char delimiter)
    : in_(in), source_(std::move(source_name)), delim_(delimiter) {}

bool CsvReader::next(std::vector<std::string>& fields, int& line_no) {
    fields.clear();
    if (eof_)
        return false;

    int c = in_.get();
    if (c == std::istream::traits_type::eof()) {
        eof_ = true;
        return false;
    }

    line_no = line_;
    std::string field;
    bool in_quotes = false;
    bool saw_any = false;

    while (true) {
        if (c == std::istream::traits_type::eof()) {
            if (in_quotes)
                throw InputError(source_ + ":" + std::to_string(line_no) +
                                 ": unterminated quoted field");
            eof_ = true;
            break;
        }
        char ch = static_cast<char>(c);
        if (in_quotes) {
            if (ch == '"') {
                int nxt = in_.peek();
                if (nxt == '"') {
                    in_.get();
                    field.push_back('"');
                } else {
                    in_quotes = false;
                }
            } else {
                if (ch == '\n')
                    ++line_;
                field.push_back(ch);
            }
        } else if (ch == '"') {
            if (!field.empty())
                throw InputError(source_ + ":" + std::to_string(line_) +
                                 ": quote inside unquoted field");
            in_quotes = true;
            saw_any = true;
        } else if (ch == delim_) {
            fields.push_back(std::move(field));
            field.clear();
            saw_any = true;
        } else if (ch == '\n') {
            ++line_;
            break;
        } else if (ch == '\r') {
            int nxt = in_.peek();
            if (nxt == '\n') {
                in_.get();
                ++line_;
                break;
            }
            field.push_back(ch);
        } else {
            field.push_back(ch);
            saw_any = true;
        }
        c = in_.get();
    }

    fields.push_back(std::move(field));
    (void)saw_any;
    return true;
}

std::string csv_escape(std::string_view field, char delimiter) {
    bool needs_quote = false;
    for (char c : field) {
        if (c == delimiter || c == '"' || c == '\n' || c == '\r') {
            needs_quote = true;
            break;
        }
    }
    if (!needs_quote)
        return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"')
            out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

void write_csv_record(std::ostream& out, std::span<const std::string> fields, char delimiter) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i)
            out.put(delimiter);
        out << csv_escape(fields[i], delimiter);
    }
    out.put('\n');
}

} // namespace ledsig
