#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace alleemem {

// Flat key=value configuration ('#' comments, blank lines ignored). The
// metadata sidecars emitted next to every CSV use the same format, so a
// .meta file is itself a valid --config input for an exact re-run; the
// bookkeeping keys (command, tool_version, timestamp) are skipped on load.
class Config {
public:
    static Config from_file(const std::string& path);      // throws on I/O/parse error
    static Config from_text(const std::string& text);

    // "key=value" override (--set); replaces any file value.
    void set_override(const std::string& kv);

    bool has(const std::string& key) const;
    std::vector<std::string> keys() const;  // insertion order, overrides last

    // Typed getters; throw std::invalid_argument on missing key / bad value.
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    std::int64_t get_int(const std::string& key) const;
    std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    // Accepts "inf"/"unbounded" as the unbounded-K sentinel.
    double get_k(const std::string& key, double fallback) const;
    std::vector<double> get_double_list(const std::string& key) const;  // comma-separated

    // Validation: every present key must belong to `allowed` (bookkeeping
    // keys are always allowed); throws listing the offenders otherwise.
    void require_known(const std::vector<std::string>& allowed) const;

    const std::map<std::string, std::string>& raw() const { return values_; }

private:
    std::map<std::string, std::string> values_;
    std::vector<std::string> order_;
    void put(const std::string& k, const std::string& v);
};

// Writes "<name>.meta": command, tool_version, timestamp, then every
// config key=value actually used for the run (in sorted key order).
void write_meta(const std::string& path, const std::string& command,
                const std::map<std::string, std::string>& kv);

}  // namespace alleemem
