#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>

namespace oddcut {

inline constexpr const char* kOracleVersion = "oddcut-oracle-1";

// Persistent map (d, n, r, mode) -> exact count. Entries are write-once:
// inserting an existing key with a different count aborts, since a
// re-derivation must reproduce the stored count exactly.
class CountTable {
  public:
    struct Key {
        int d = 0;
        long long n = 0;
        int r = 1;
        std::string mode;  // "contains" | "within" | "slab"
        auto operator<=>(const Key&) const = default;
    };
    struct Entry {
        std::string count;  // decimal; may exceed 64 bits for construction families
        std::string oracle_version = kOracleVersion;
        double seconds = 0.0;
    };

    std::optional<Entry> lookup(const Key& key) const;
    // Inserts, or verifies agreement if the key exists. Throws on conflict.
    void insert_once(const Key& key, const Entry& entry);

    std::size_t size() const;

    // CSV with header d,n,r,mode,count,oracle_version,seconds. Loading a
    // missing file yields an empty table.
    static CountTable load(const std::string& path);
    void save(const std::string& path) const;

  private:
    mutable std::unique_ptr<std::mutex> mu_ = std::make_unique<std::mutex>();
    std::map<Key, Entry> entries_;
};

}  // namespace oddcut
