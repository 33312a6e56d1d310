#pragma once

#include <string>
#include <utility>
#include <vector>

namespace fiedler {

/// Ordered key/value record of a command run. Floating-point values are
/// formatted with 12 significant digits at insertion time.
class Report {
public:
    explicit Report(std::string command);

    void add(const std::string& key, double value);
    void add(const std::string& key, long long value);
    void add(const std::string& key, int value) { add(key, static_cast<long long>(value)); }
    void add(const std::string& key, bool value);
    void add(const std::string& key, const std::string& value);
    void add(const std::string& key, const char* value) { add(key, std::string(value)); }

    /// Human-readable "key = value" lines.
    std::string to_text() const;
    /// Machine-readable "key=value" lines.
    std::string to_kv() const;

    /// Value for a key, or empty string when absent (first match wins).
    std::string get(const std::string& key) const;

    static std::string format_double(double value);

private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

}  // namespace fiedler
