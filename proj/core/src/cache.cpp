#include "oddcut/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace oddcut {

std::optional<CountTable::Entry> CountTable::lookup(const Key& key) const {
    std::lock_guard<std::mutex> lock(*mu_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void CountTable::insert_once(const Key& key, const Entry& entry) {
    std::lock_guard<std::mutex> lock(*mu_);
    auto [it, inserted] = entries_.emplace(key, entry);
    if (!inserted && it->second.count != entry.count)
        throw std::runtime_error("count cache conflict for d=" + std::to_string(key.d) +
                                 " n=" + std::to_string(key.n) + ": stored " + it->second.count +
                                 ", new " + entry.count);
}

std::size_t CountTable::size() const {
    std::lock_guard<std::mutex> lock(*mu_);
    return entries_.size();
}

CountTable CountTable::load(const std::string& path) {
    CountTable table;
    std::ifstream in(path);
    if (!in) return table;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line.rfind("d,", 0) == 0) continue;  // header
        }
        std::istringstream ss(line);
        std::string field;
        Key key;
        Entry entry;
        std::getline(ss, field, ',');
        key.d = std::stoi(field);
        std::getline(ss, field, ',');
        key.n = std::stoll(field);
        std::getline(ss, field, ',');
        key.r = std::stoi(field);
        std::getline(ss, key.mode, ',');
        std::getline(ss, entry.count, ',');
        std::getline(ss, entry.oracle_version, ',');
        if (std::getline(ss, field, ',')) entry.seconds = std::stod(field);
        table.entries_.emplace(key, entry);
    }
    return table;
}

void CountTable::save(const std::string& path) const {
    std::lock_guard<std::mutex> lock(*mu_);
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write count cache: " + path);
    out << "d,n,r,mode,count,oracle_version,seconds\n";
    char buf[64];
    for (const auto& [key, entry] : entries_) {
        std::snprintf(buf, sizeof buf, "%.3f", entry.seconds);
        out << key.d << ',' << key.n << ',' << key.r << ',' << key.mode << ',' << entry.count
            << ',' << entry.oracle_version << ',' << buf << '\n';
    }
}

}  // namespace oddcut
