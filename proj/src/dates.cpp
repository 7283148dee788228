#include "ledsig/dates.hpp"

#include "ledsig/errors.hpp"

#include <array>
#include <cctype>
#include <chrono>
#include <cstdio>

namespace ledsig {

namespace {

namespace chr = std::chrono;

chr::year_month_day to_ymd(std::int64_t serial) {
    return chr::year_month_day{chr::sys_days{chr::days{serial}}};
}

std::optional<std::int64_t> serial_of(int y, int m, int d) {
    chr::year_month_day ymd{chr::year{y}, chr::month{static_cast<unsigned>(m)},
                            chr::day{static_cast<unsigned>(d)}};
    if (!ymd.ok())
        return std::nullopt;
    return chr::sys_days{ymd}.time_since_epoch().count();
}

constexpr std::array<std::string_view, 12> kMonthAbbrev = {
    "jan", "feb", "mar", "apr", "may", "jun",
    "jul", "aug", "sep", "oct", "nov", "dec"};

bool read_digits(std::string_view s, std::size_t& pos, int min_len, int max_len, int& out) {
    int len = 0;
    long v = 0;
    while (pos + len < s.size() && len < max_len &&
           std::isdigit(static_cast<unsigned char>(s[pos + len]))) {
        v = v * 10 + (s[pos + len] - '0');
        ++len;
    }
    if (len < min_len)
        return false;
    pos += len;
    out = static_cast<int>(v);
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

Date Date::from_ymd(int year, int month, int day) {
    auto s = serial_of(year, month, day);
    if (!s) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "invalid calendar date %d-%02d-%02d", year, month, day);
        throw InputError(buf);
    }
    return Date(*s);
}

Date Date::from_serial(std::int64_t days_since_epoch) {
    return Date(days_since_epoch);
}

std::optional<Date> Date::try_parse_iso(std::string_view text) {
    return try_parse(text, "%Y-%m-%d");
}

Date Date::parse_iso(std::string_view text) {
    auto d = try_parse_iso(text);
    if (!d)
        throw InputError("invalid ISO date '" + std::string(text) + "' (expected YYYY-MM-DD)");
    return *d;
}

std::optional<Date> Date::try_parse(std::string_view text, std::string_view pattern) {
    std::string_view s = trim(text);
    std::size_t pos = 0;
    int y = -1, m = -1, d = -1;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        char c = pattern[i];
        if (c == '%' && i + 1 < pattern.size()) {
            char tok = pattern[++i];
            switch (tok) {
            case 'Y':
                if (!read_digits(s, pos, 4, 4, y))
                    return std::nullopt;
                break;
            case 'y': {
                int yy;
                if (!read_digits(s, pos, 2, 2, yy))
                    return std::nullopt;
                y = yy < 69 ? 2000 + yy : 1900 + yy;
                break;
            }
            case 'm':
                if (!read_digits(s, pos, 1, 2, m))
                    return std::nullopt;
                break;
            case 'd':
                if (!read_digits(s, pos, 1, 2, d))
                    return std::nullopt;
                break;
            case 'b': {
                if (pos + 3 > s.size())
                    return std::nullopt;
                char lo[3];
                for (int j = 0; j < 3; ++j)
                    lo[j] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[pos + j])));
                std::string_view abbrev(lo, 3);
                m = -1;
                for (std::size_t k = 0; k < kMonthAbbrev.size(); ++k) {
                    if (kMonthAbbrev[k] == abbrev) {
                        m = static_cast<int>(k) + 1;
                        break;
                    }
                }
                if (m < 0)
                    return std::nullopt;
                pos += 3;
                // tolerate full month names ("January")
                while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos])))
                    ++pos;
                break;
            }
            case '%':
                if (pos >= s.size() || s[pos] != '%')
                    return std::nullopt;
                ++pos;
                break;
            default:
                return std::nullopt; // unsupported token
            }
        } else if (c == ' ') {
            // one or more spaces
            if (pos >= s.size() || s[pos] != ' ')
                return std::nullopt;
            while (pos < s.size() && s[pos] == ' ')
                ++pos;
        } else {
            if (pos >= s.size() || s[pos] != c)
                return std::nullopt;
            ++pos;
        }
    }
    if (pos != s.size())
        return std::nullopt; // trailing junk
    if (y < 0 || m < 0 || d < 0)
        return std::nullopt; // pattern must bind all three fields
    auto serial = serial_of(y, m, d);
    if (!serial)
        return std::nullopt;
    return Date(*serial);
}

int Date::year() const { return static_cast<int>(to_ymd(serial_).year()); }
int Date::month() const { return static_cast<int>(static_cast<unsigned>(to_ymd(serial_).month())); }
int Date::day() const { return static_cast<int>(static_cast<unsigned>(to_ymd(serial_).day())); }

int Date::weekday_iso() const {
    chr::weekday wd{chr::sys_days{chr::days{serial_}}};
    return static_cast<int>(wd.iso_encoding());
}

std::string Date::to_iso() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year(), month(), day());
    return buf;
}

std::string Date::to_iso_month() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d", year(), month());
    return buf;
}

Date Date::month_start() const {
    auto ymd = to_ymd(serial_);
    chr::year_month_day first{ymd.year(), ymd.month(), chr::day{1}};
    return Date(chr::sys_days{first}.time_since_epoch().count());
}

Date Date::next_month_start() const {
    auto ymd = to_ymd(serial_);
    chr::year_month ym = ymd.year() / ymd.month();
    ym += chr::months{1};
    chr::year_month_day first{ym.year(), ym.month(), chr::day{1}};
    return Date(chr::sys_days{first}.time_since_epoch().count());
}

Date Date::month_end() const { return next_month_start().plus_days(-1); }

Date Date::week_start() const { return Date(serial_ - (weekday_iso() - 1)); }

} // namespace ledsig
