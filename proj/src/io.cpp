#include "zml/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "zml/common.hpp"

namespace zml {

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt17(cplx z) {
    std::string s = fmt17(z.real());
    if (z.imag() >= 0 || std::isnan(z.imag())) s += "+";
    s += fmt17(z.imag()) + "i";
    return s;
}

}  // namespace zml

namespace zml::io {

std::uint64_t config_hash(const std::string& resolved) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : resolved) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

static void csv_field(std::ostream& os, const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        os << s;
        return;
    }
    os << '"';
    for (char c : s) {
        if (c == '"') os << '"';
        os << c;
    }
    os << '"';
}

void Table::write_csv(std::ostream& os) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        csv_field(os, columns[i]);
        os << (i + 1 < columns.size() ? "," : "\n");
    }
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) {
            csv_field(os, row[i]);
            os << (i + 1 < row.size() ? "," : "\n");
        }
}

void Table::write_json(std::ostream& os) const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json obj;
        for (std::size_t i = 0; i < columns.size() && i < row.size(); ++i)
            obj[columns[i]] = row[i];
        arr.push_back(obj);
    }
    os << arr.dump(2) << "\n";
}

void Table::write(std::ostream& os, const std::string& format) const {
    if (format == "json")
        write_json(os);
    else if (format == "csv")
        write_csv(os);
    else
        throw std::invalid_argument("table format must be csv or json: " + format);
}

ResultCache::ResultCache(const std::string& path) : path_(path) {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto rec = nlohmann::json::parse(line, nullptr, false);
        if (rec.is_discarded() || !rec.contains("key")) continue;
        records_[rec["key"].get<std::string>()] = rec["value"].dump();
    }
}

std::optional<std::string> ResultCache::lookup(const std::string& key) const {
    auto it = records_.find(key);
    if (it == records_.end()) return std::nullopt;
    return it->second;
}

void ResultCache::store(const std::string& key, const std::string& json_value) {
    records_[key] = json_value;
    std::ofstream out(path_, std::ios::app);
    nlohmann::json rec;
    rec["key"] = key;
    rec["value"] = nlohmann::json::parse(json_value);
    out << rec.dump() << "\n";
}

}  // namespace zml::io
