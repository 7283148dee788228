#ifndef LEDSIG_NUMFMT_HPP
#define LEDSIG_NUMFMT_HPP

#include <charconv>
#include <string>
#include <system_error>

namespace ledsig {

// Shortest decimal text that round-trips to the same double. Keeps CSV and
// report output byte-stable across runs.
inline std::string format_double(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

} // namespace ledsig

#endif
