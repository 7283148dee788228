#ifndef LEDSIG_DATES_HPP
#define LEDSIG_DATES_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ledsig {

/// Calendar date at day granularity, stored as days since 1970-01-01.
/// Supports the arithmetic the resamplers need: day stepping, ISO week
/// starts (Monday), and calendar month starts.
class Date {
public:
    Date() = default;

    static Date from_ymd(int year, int month, int day); // throws InputError if invalid
    static Date from_serial(std::int64_t days_since_epoch);

    static std::optional<Date> try_parse_iso(std::string_view text);
    static Date parse_iso(std::string_view text); // throws InputError

    // Pattern parser for statement date cells. Supported tokens: %Y %y %m %d %b
    // (%b = English month abbreviation); any other character matches literally.
    static std::optional<Date> try_parse(std::string_view text, std::string_view pattern);

    std::int64_t serial() const { return serial_; }
    int year() const;
    int month() const;  // 1..12
    int day() const;    // 1..31
    int weekday_iso() const; // Monday=1 .. Sunday=7

    std::string to_iso() const;          // YYYY-MM-DD
    std::string to_iso_month() const;    // YYYY-MM

    Date month_start() const;
    Date next_month_start() const;
    Date month_end() const;
    Date week_start() const; // Monday of the ISO week containing this date

    Date plus_days(std::int64_t n) const { return Date(serial_ + n); }
    std::int64_t days_until(Date other) const { return other.serial_ - serial_; }

    auto operator<=>(const Date&) const = default;

private:
    explicit Date(std::int64_t serial) : serial_(serial) {}
    std::int64_t serial_ = 0;
};

} // namespace ledsig

#endif
