#ifndef LEDSIG_CSV_HPP
#define LEDSIG_CSV_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace ledsig {

/// RFC-4180 record reader. Quoted fields may contain the delimiter,
/// doubled quotes, and embedded newlines. Unterminated quotes raise
/// InputError naming the source and line.
class CsvReader {
public:
    CsvReader(std::istream& in, std::string source_name, char delimiter = ',');

    // Reads the next record. Returns false at end of input.
    // line_no is the 1-based line on which the record starts.
    bool next(std::vector<std::string>& fields, int& line_no);

    const std::string& source_name() const { return source_; }

private:
    std::istream& in_;
    std::string source_;
    char delim_;
    int line_ = 1;
    bool eof_ = false;
};

// Quotes a field if it contains the delimiter, a quote, or a newline.
std::string csv_escape(std::string_view field, char delimiter = ',');

void write_csv_record(std::ostream& out, std::span<const std::string> fields,
                      char delimiter = ',');

} // namespace ledsig

#endif
