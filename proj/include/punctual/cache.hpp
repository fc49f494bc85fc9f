#ifndef PUNCTUAL_CACHE_HPP
#define PUNCTUAL_CACHE_HPP

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "punctual/version.hpp"

namespace punctual {

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace detail

// Disk memo for expensive enumeration cells, keyed by (module, op, args,
// code version). One JSON file per entry; the stored key is verified on read,
// so a filename collision degrades to a miss instead of a wrong answer.
class Cache {
public:
    Cache() = default;
    explicit Cache(std::string dir) : dir_(std::move(dir)), enabled_(true) {}

    bool enabled() const { return enabled_; }
    const std::string& dir() const { return dir_; }

    std::optional<nlohmann::json> get(const std::string& module, const std::string& op,
                                      const nlohmann::json& args) const {
        if (!enabled_) return std::nullopt;
        std::ifstream in(path_for(module, op, args));
        if (!in) return std::nullopt;
        nlohmann::json entry = nlohmann::json::parse(in, nullptr, false);
        if (entry.is_discarded() || !entry.is_object()) return std::nullopt;
        if (entry.value("module", "") != module || entry.value("op", "") != op ||
            entry.value("code_version", "") != kCodeVersion || entry["args"] != args ||
            !entry.contains("value"))
            return std::nullopt;
        return entry["value"];
    }

    void put(const std::string& module, const std::string& op, const nlohmann::json& args,
             const nlohmann::json& value) const {
        if (!enabled_) return;
        std::filesystem::create_directories(dir_);
        nlohmann::json entry{{"module", module},
                             {"op", op},
                             {"args", args},
                             {"code_version", kCodeVersion},
                             {"value", value}};
        std::ofstream out(path_for(module, op, args), std::ios::trunc);
        out << entry.dump(2) << "\n";
    }

    struct Entry {
        std::string module, op;
        nlohmann::json args, value;
        bool current_version = false;
    };

    std::vector<Entry> entries() const {
        std::vector<Entry> out;
        if (!enabled_ || !std::filesystem::is_directory(dir_)) return out;
        std::vector<std::filesystem::path> files;
        for (const auto& f : std::filesystem::directory_iterator(dir_))
            if (f.path().extension() == ".json") files.push_back(f.path());
        std::sort(files.begin(), files.end());
        for (const auto& p : files) {
            std::ifstream in(p);
            nlohmann::json entry = nlohmann::json::parse(in, nullptr, false);
            if (entry.is_discarded() || !entry.is_object() || !entry.contains("value")) continue;
            out.push_back(Entry{entry.value("module", ""), entry.value("op", ""),
                                entry.contains("args") ? entry["args"] : nlohmann::json(),
                                entry["value"], entry.value("code_version", "") == kCodeVersion});
        }
        return out;
    }

    long clear() const {
        if (!enabled_ || !std::filesystem::is_directory(dir_)) return 0;
        long removed = 0;
        for (const auto& f : std::filesystem::directory_iterator(dir_))
            if (f.path().extension() == ".json" && std::filesystem::remove(f.path())) ++removed;
        return removed;
    }

private:
    std::string dir_;
    bool enabled_ = false;

    std::filesystem::path path_for(const std::string& module, const std::string& op,
                                   const nlohmann::json& args) const {
        std::string key = module + '\x1f' + op + '\x1f' + args.dump() + '\x1f' + kCodeVersion;
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx",
                      static_cast<unsigned long long>(detail::fnv1a(key)));
        return std::filesystem::path(dir_) / (std::string(buf) + ".json");
    }
};

}  // namespace punctual

#endif
