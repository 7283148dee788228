#include "ledsig/config.hpp"

#include "ledsig/errors.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>

namespace ledsig {

namespace {

std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return std::string(s);
}

} // namespace

ConfigFile ConfigFile::parse_stream(std::istream& in, const std::string& source_name) {
    ConfigFile cfg;
    cfg.source = source_name;
    std::string line;
    int line_no = 0;
    Block* current = nullptr;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw InputError(source_name + ":" + std::to_string(line_no) +
                                 ": malformed block header '" + t + "'");
            cfg.blocks.push_back(Block{trim(std::string_view(t).substr(1, t.size() - 2)), {}});
            current = &cfg.blocks.back();
            continue;
        }
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw InputError(source_name + ":" + std::to_string(line_no) +
                             ": expected key=value, got '" + t + "'");
        std::string key = trim(std::string_view(t).substr(0, eq));
        std::string value = trim(std::string_view(t).substr(eq + 1));
        if (key.empty())
            throw InputError(source_name + ":" + std::to_string(line_no) + ": empty key");
        // A value may be double-quoted to keep spaces or '#'; otherwise an
        // unquoted '#' starts a trailing comment.
        if (!value.empty() && value.front() == '"') {
            auto close = value.find('"', 1);
            if (close == std::string::npos)
                throw InputError(source_name + ":" + std::to_string(line_no) +
                                 ": unterminated quoted value");
            std::string rest = trim(std::string_view(value).substr(close + 1));
            if (!rest.empty() && rest[0] != '#')
                throw InputError(source_name + ":" + std::to_string(line_no) +
                                 ": unexpected text after quoted value");
            value = value.substr(1, close - 1);
        } else if (auto hash = value.find('#'); hash != std::string::npos) {
            value = trim(std::string_view(value).substr(0, hash));
        }
        if (current)
            current->entries.emplace_back(std::move(key), std::move(value));
        else
            cfg.entries.emplace_back(std::move(key), std::move(value));
    }
    return cfg;
}

ConfigFile ConfigFile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open config file '" + path + "'");
    return parse_stream(in, path);
}

std::optional<std::string> ConfigFile::get(const std::string& key) const {
    for (const auto& [k, v] : entries)
        if (k == key)
            return v;
    return std::nullopt;
}

std::string ConfigFile::require(const std::string& key) const {
    auto v = get(key);
    if (!v)
        throw InputError(source + ": missing required key '" + key + "'");
    return *v;
}

std::vector<std::string> ConfigFile::get_all(const std::string& key) const {
    std::vector<std::string> out;
    for (const auto& [k, v] : entries)
        if (k == key)
            out.push_back(v);
    return out;
}

double parse_config_double(const std::string& key, const std::string& value) {
    double out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw InputError("config key '" + key + "': invalid number '" + value + "'");
    return out;
}

std::uint64_t parse_config_u64(const std::string& key, const std::string& value) {
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw InputError("config key '" + key + "': invalid integer '" + value + "'");
    return out;
}

} // namespace ledsig
