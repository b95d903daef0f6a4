#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "oddcut/cache.hpp"
#include "oddcut/lattice_set.hpp"

namespace oddcut {

enum class OriginMode { Contains, WithinDistanceR };

// Search envelope for the brute-force oracle. The enumeration yields every
// regular odd r-cutset S with |dS| = n satisfying origin_mode, each exactly
// once, in lexicographic order of its even core.
struct EnumSpec {
    int d = 2;
    long long n = 0;  // boundary-edge target
    int r = 1;
    OriginMode origin_mode = OriginMode::Contains;
    std::optional<std::size_t> max_core_size;
    long long window_radius = 0;  // 0 => derived from the isoperimetric cap
    int jobs = 1;

    void validate() const;

    long long target_diff() const { return n / (2 * d); }
    // Largest integer c with c^(d-1) <= (n/2d)^d; any S with |dS| = n has
    // |S| <= c by the isoperimetric inequality.
    long long size_cap() const;
    long long derived_window_radius() const;
    long long effective_window_radius() const {
        return window_radius > 0 ? window_radius : derived_window_radius();
    }

    CountTable::Key cache_key() const {
        return {d, n, r, origin_mode == OriginMode::Contains ? "contains" : "within"};
    }
};

struct EnumStats {
    std::uint64_t nodes = 0;       // search-tree nodes visited
    std::uint64_t candidates = 0;  // nodes with the exact boundary target
    std::uint64_t emitted = 0;
    double seconds = 0.0;
    bool from_cache = false;
    bool divisibility_empty = false;  // n not a multiple of 2d
};

std::vector<LatticeSet> enumerate_odd_cutsets(const EnumSpec& spec, EnumStats* stats = nullptr);

// Count of the stream above; memoized in the cache when one is supplied.
std::uint64_t count_odd_cutsets(const EnumSpec& spec, CountTable* cache = nullptr,
                                EnumStats* stats = nullptr);

// Exact number of connected (k+1)-subsets of Z^d containing the origin,
// with the classical (e(2d-1))^k bound it is checked against.
struct SubsetCountReport {
    std::uint64_t count = 0;
    double bound = 0.0;
    bool within_bound = false;
};
SubsetCountReport connected_subset_count(int d, int k, long long window_radius = 0);

}  // namespace oddcut
