#pragma once
// Output plumbing: run tables (csv | json), config hashing, JSON-lines result
// cache for resumable zero scans.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zml/common.hpp"

namespace zml::io {

inline constexpr const char* ARTIFACT_VERSION = "zml 1.0.0";

// FNV-1a over the resolved config string
std::uint64_t config_hash(const std::string& resolved);

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void write_csv(std::ostream& os) const;
    void write_json(std::ostream& os) const;
    void write(std::ostream& os, const std::string& format) const;
};

// JSON-lines cache: one record per completed (operation, params), keyed by
// (dataset hash, op, params).  Appends on store; loads the whole file up
// front.  Missing file is an empty cache.
class ResultCache {
public:
    explicit ResultCache(const std::string& path);
    std::optional<std::string> lookup(const std::string& key) const;
    void store(const std::string& key, const std::string& json_value);

private:
    std::string path_;
    std::map<std::string, std::string> records_;
};

}  // namespace zml::io
