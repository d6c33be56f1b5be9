#include "alleemem/config.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "alleemem/version.hpp"

namespace alleemem {

namespace {

const char* kBookkeeping[] = {"command", "tool_version", "timestamp"};

bool is_bookkeeping(const std::string& k) {
    for (const char* b : kBookkeeping)
        if (k == b) return true;
    return false;
}

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

}  // namespace

void Config::put(const std::string& k, const std::string& v) {
    if (values_.find(k) == values_.end()) order_.push_back(k);
    values_[k] = v;
}

Config Config::from_text(const std::string& text) {
    Config c;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key=value, got \"" + t + "\"");
        const std::string key = trim(t.substr(0, eq));
        const std::string val = trim(t.substr(eq + 1));
        if (key.empty())
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": empty key");
        if (is_bookkeeping(key)) continue;  // meta sidecars are valid configs
        c.put(key, val);
    }
    return c;
}

Config Config::from_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_text(ss.str());
}

void Config::set_override(const std::string& kv) {
    const size_t eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
        throw std::invalid_argument("--set expects key=value, got \"" + kv + "\"");
    put(trim(kv.substr(0, eq)), trim(kv.substr(eq + 1)));
}

bool Config::has(const std::string& key) const { return values_.count(key) != 0; }

std::vector<std::string> Config::keys() const { return order_; }

double Config::get_double(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end())
        throw std::invalid_argument("missing config key: " + key);
    const std::string& s = it->second;
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || s.empty() || errno == ERANGE)
        throw std::invalid_argument("config key " + key + ": not a number: \"" + s + "\"");
    return v;
}

double Config::get_double(const std::string& key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
}

std::int64_t Config::get_int(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end())
        throw std::invalid_argument("missing config key: " + key);
    const std::string& s = it->second;
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(s.c_str(), &end, 10);
    if (end != s.c_str() + s.size() || s.empty() || errno == ERANGE)
        throw std::invalid_argument("config key " + key + ": not an integer: \"" + s + "\"");
    return v;
}

std::int64_t Config::get_int(const std::string& key, std::int64_t fallback) const {
    return has(key) ? get_int(key) : fallback;
}

std::string Config::get_string(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end())
        throw std::invalid_argument("missing config key: " + key);
    return it->second;
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
    return has(key) ? get_string(key) : fallback;
}

bool Config::get_bool(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    const std::string s = values_.at(key);
    if (s == "true" || s == "1") return true;
    if (s == "false" || s == "0") return false;
    throw std::invalid_argument("config key " + key + ": not a bool: \"" + s + "\"");
}

double Config::get_k(const std::string& key, double fallback) const {
    if (!has(key)) return fallback;
    const std::string s = values_.at(key);
    if (s == "inf" || s == "unbounded") return std::numeric_limits<double>::infinity();
    return get_double(key);
}

std::vector<double> Config::get_double_list(const std::string& key) const {
    const std::string s = get_string(key);
    std::vector<double> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        const std::string t = trim(tok);
        if (t.empty())
            throw std::invalid_argument("config key " + key + ": empty list element");
        errno = 0;
        char* end = nullptr;
        const double v = std::strtod(t.c_str(), &end);
        if (end != t.c_str() + t.size() || errno == ERANGE)
            throw std::invalid_argument("config key " + key + ": not a number: \"" + t + "\"");
        out.push_back(v);
    }
    if (out.empty())
        throw std::invalid_argument("config key " + key + ": empty list");
    return out;
}

void Config::require_known(const std::vector<std::string>& allowed) const {
    std::string offenders;
    for (const auto& [k, v] : values_) {
        if (is_bookkeeping(k)) continue;
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
            if (!offenders.empty()) offenders += ", ";
            offenders += k;
        }
    }
    if (!offenders.empty())
        throw std::invalid_argument("unknown config key(s): " + offenders);
}

void write_meta(const std::string& path, const std::string& command,
                const std::map<std::string, std::string>& kv) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open meta file for writing: " + path);
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char stamp[32];
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    out << "command=" << command << "\n";
    out << "tool_version=" << kVersion << "\n";
    out << "timestamp=" << stamp << "\n";
    for (const auto& [k, v] : kv) out << k << "=" << v << "\n";  // std::map: sorted
    if (!out) throw std::runtime_error("failed writing meta file: " + path);
}

}  // namespace alleemem
