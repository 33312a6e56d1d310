#include "fiedler/report.hpp"

#include <cstdio>
#include <sstream>

namespace fiedler {

Report::Report(std::string command) { fields_.emplace_back("command", std::move(command)); }

std::string Report::format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

void Report::add(const std::string& key, double value) {
    fields_.emplace_back(key, format_double(value));
}

void Report::add(const std::string& key, long long value) {
    fields_.emplace_back(key, std::to_string(value));
}

void Report::add(const std::string& key, bool value) {
    fields_.emplace_back(key, value ? "true" : "false");
}

void Report::add(const std::string& key, const std::string& value) {
    fields_.emplace_back(key, value);
}

std::string Report::to_text() const {
    std::ostringstream out;
    std::size_t width = 0;
    for (const auto& [key, value] : fields_) width = std::max(width, key.size());
    for (const auto& [key, value] : fields_) {
        out << key;
        for (std::size_t i = key.size(); i < width; ++i) out << ' ';
        out << " = " << value << "\n";
    }
    return out.str();
}

std::string Report::to_kv() const {
    std::ostringstream out;
    for (const auto& [key, value] : fields_) out << key << "=" << value << "\n";
    return out.str();
}

std::string Report::get(const std::string& key) const {
    for (const auto& [key_i, value] : fields_)
        if (key_i == key) return value;
    return {};
}

}  // namespace fiedler
