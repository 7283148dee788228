#ifndef LEDSIG_CONFIG_HPP
#define LEDSIG_CONFIG_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ledsig {

/// Plain-text config: `key=value` lines, `#` comments, and optional
/// `[block]` sections. Repeated keys are preserved in order.
struct ConfigFile {
    using Entries = std::vector<std::pair<std::string, std::string>>;

    struct Block {
        std::string name;
        Entries entries;
    };

    Entries entries;            // top-level key=value lines
    std::vector<Block> blocks;  // in file order
    std::string source;

    static ConfigFile parse_stream(std::istream& in, const std::string& source_name);
    static ConfigFile load(const std::string& path);

    std::optional<std::string> get(const std::string& key) const;
    std::string require(const std::string& key) const; // throws InputError
    std::vector<std::string> get_all(const std::string& key) const;
};

// Shared by configs that carry numbers.
double parse_config_double(const std::string& key, const std::string& value);
std::uint64_t parse_config_u64(const std::string& key, const std::string& value);

} // namespace ledsig

#endif
